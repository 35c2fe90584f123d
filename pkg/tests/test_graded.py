import pytest

from conftest import E0, E2, E3, graded
from gradedhecke import combin
from gradedhecke.combin import initial_tableau
from gradedhecke.graded import INHOMOGENEOUS, TheoremViolation, dominates_pair
from gradedhecke.scalars import Laurent


@pytest.fixture(scope="module")
def A2():
    return graded(*E2, (0,), 2)


@pytest.fixture(scope="module")
def A3():
    return graded(*E3, (0,), 3)


def test_transition_n2(A2):
    assert A2.psi_transition() == [[2, 0], [0, 1]]
    assert A2.check_transition().ok


def test_degree_of(A2):
    G = A2.G
    assert A2.degree_of(G.y(2)) == 2
    assert A2.degree_of(G.e_idem((0, 1))) == 0
    assert A2.degree_of(A2.H.one() + G.y(2)) is INHOMOGENEOUS
    assert not A2.is_homogeneous(A2.H.one() + G.y(2))
    with pytest.raises(ValueError):
        A2.degree_of(A2.H.zero())


def test_homogeneous_components(A2):
    x = A2.H.one() + A2.G.y(2)
    parts = A2.homogeneous_components(x)
    assert set(parts) == {0, 2}
    assert parts[0] + parts[2] == x


def test_expand_round_trip(A3):
    for basis in ("murphy", "dual-murphy", "psi", "psi-prime"):
        x = A3.H.T(1) * A3.H.L(2) + A3.H.T(2)
        ex = A3.expand(x, basis)
        back = A3.H.zero()
        for (s, t), c in ex.coeffs.items():
            back = back + A3.element(basis, s, t) * c
        assert back == x


def test_generators_are_homogeneous(A3):
    G = A3.G
    for i in G.nonzero_weights():
        assert A3.degree_of(G.e_idem(i)) == 0
        for r in range(1, 4):
            ye = G.y(r) * G.e_idem(i)
            if ye:
                assert A3.degree_of(ye) == 2
        for r in range(1, 3):
            pe = G.psi(r) * G.e_idem(i)
            if pe:
                assert A3.degree_of(pe) == -A3.Q.cartan(i[r - 1], i[r])


def test_star(A3):
    G = A3.G
    for name, g in A3.generators():
        assert A3.star(g) == g, name
    a, b = G.psi(1) * G.y(2), G.psi(2) * G.psi(1)
    assert A3.star(a * b) == A3.star(b) * A3.star(a)


def test_cell_modules_and_gram(A3):
    for lam in combin.multipartitions(3, 1):
        act = A3.cell_module(lam)
        assert set(act) == {name for name, _ in A3.generators()}
        g = A3.gram(lam)
        assert g.is_symmetric() and g.respects_grading()


def test_decomposition_n2(A2):
    (block,) = A2.blocks()
    D = A2.decomposition_matrix(block.beta)
    assert D.rows == [((2,),), ((1, 1),)] and D.cols == [((1, 1),)]
    assert D[(((2,),), ((1, 1),))] == Laurent({1: 1})
    assert D[(((1, 1),), ((1, 1),))] == Laurent({0: 1})
    assert A2.cartan(block.beta) == [[Laurent({2: 1, 0: 1})]]
    assert A2.graded_dimension() == Laurent({2: 1, 0: 1})


def test_semisimple_decomposition_is_identity():
    A = graded(*E0, (0,), 3)
    for b in A.blocks():
        D = A.decomposition_matrix(b.beta)
        assert D.rows == D.cols
        assert all(D[(r, c)] == (1 if r == c else 0) for r in D.rows for c in D.cols)


def test_trace_and_pairing(A2):
    (block,) = A2.blocks()
    assert A2.check_pairing(block.beta).ok
    assert A2.check_symmetric(block.beta).ok
    for lam in block.shapes:
        assert A2.specht_duality_check(lam).ok


def test_tau_beta_rejects_elements_outside_the_block():
    A = graded(*E2, (0,), 3)
    assert len(A.blocks()) == 2
    with pytest.raises(ValueError, match="not in the block"):
        A.tau_beta(A.H.one(), A.blocks()[0].beta)


def test_tau_beta_is_a_trace(A3):
    G = A3.G
    for b in A3.blocks():
        e = A3.e_beta(b.beta)
        x = e * G.psi(1) * G.y(2) * e
        y = e * G.psi(2) * e
        assert A3.tau_beta(x * y, b.beta) == A3.tau_beta(y * x, b.beta)


def test_word_dependence_n5():
    A = graded(*E3, (0,), 5)
    rep = A.check_word_dependence(limit=3)
    assert rep.entries and rep.ok


def test_dominates_pair():
    s, t = initial_tableau(((2, 1),)), combin.tableau_from_rows("13/2")
    assert dominates_pair((s, s), (t, t))
    assert not dominates_pair((t, s), (s, t))


def test_unknown_basis(A2):
    with pytest.raises(ValueError):
        A2.element("nope", *A2.pairs[0])
