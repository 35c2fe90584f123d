"""Acceptance suite: one verdict line per criterion.

Run ``pytest tests/test_acceptance.py`` (or ``python tests/test_acceptance.py``);
the terminal summary prints ``criterion k: PASS/FAIL`` for k = 1..10.
Set ``GRADEDHECKE_LONG=1`` to include the optional n = 9 computation.
"""
import os
import sys

import pytest

from conftest import E0, E2, E3, generators, graded, record
from gradedhecke import combin
from gradedhecke.combin import (QuiverData, d_perm, d_word, degree, initial_tableau,
                                is_positive, residue_sequence, tableau_dominates,
                                tableau_from_rows)
from gradedhecke.graded import INHOMOGENEOUS, reduced_words, strictly_above
from gradedhecke.klr import check_against_seminormal, check_inverse_maps, check_relations
from gradedhecke.scalars import Laurent


def _first(rep, k=3):
    return rep.failures()[:k]


# ---------------------------------------------------------------------------
# 1. relation suite

C1 = [(E2, (0,), 2), (E2, (0,), 3), (E2, (2, 0), 2), (E2, (3, 0), 3), (E3, (0,), 3)]


@pytest.mark.parametrize("cfg,kappa,n", C1)
def test_c1_relations(cfg, kappa, n):
    G = generators(*cfg, kappa, n)
    rep = check_relations(G)
    inv = check_inverse_maps(G)
    ok = rep.ok and inv.ok
    record(1, ok, "" if ok else f"e={cfg[2]} kappa={kappa} n={n}")
    assert rep.ok, _first(rep)
    assert inv.ok, _first(inv)


def test_c1_e2_branches_exercised():
    """At e = 2 the quadratic and braid relations hit the doubly-linked residue cases."""
    rep = check_relations(generators(*E2, (0,), 3))
    quad = [x for x in rep.entries if x["relation"] == "psi_r^2 e(i)"
            and x["i"][x["r"] - 1] != x["i"][x["r"]]]
    braid = [x for x in rep.entries if x["relation"].startswith("braid")
             and x["i"][x["r"] - 1] == x["i"][x["r"] + 1] != x["i"][x["r"]]]
    ok = bool(quad) and bool(braid) and all(x["pass"] for x in quad + braid)
    record(1, ok, "" if ok else "e=2 branch relations")
    assert ok


# ---------------------------------------------------------------------------
# 2. idempotents against the seminormal lift

C2 = [(cfg, kappa, n) for n in (1, 2, 3) for cfg, kappa in
      [(E2, (0,)), (E3, (0,)), (E2, (0, 1)), (E3, (0, 1))]]


@pytest.mark.parametrize("cfg,kappa,n", C2)
def test_c2_idempotents(cfg, kappa, n):
    G = generators(*cfg, kappa, n)
    rep = check_against_seminormal(G)
    total = G.H.zero()
    for i in G.nonzero_weights():
        total = total + G.e_idem(i)
    ok = rep.ok and total == G.H.one()
    record(2, ok, "" if ok else f"e={cfg[2]} kappa={kappa} n={n}")
    assert rep.ok, _first(rep)
    assert total == G.H.one()


# ---------------------------------------------------------------------------
# 3. graded cellularity

C3 = [(cfg, (0,), n) for cfg in (E2, E3) for n in (2, 3, 4)] + \
     [(cfg, (0, 1), n) for cfg in (E2, E3) for n in (2, 3)]


@pytest.mark.parametrize("cfg,kappa,n", C3)
def test_c3_graded_cellularity(cfg, kappa, n):
    A = graded(*cfg, kappa, n)
    rep = A.check_transition()
    for lam in combin.multipartitions(n, len(kappa)):
        A.cell_module(lam)
    bad = [(str(s), str(t)) for s, t in A.pairs
           if A.degree_of(A.element("psi", s, t)) != A.deg(s) + A.deg(t)]
    ok = rep.ok and not bad
    record(3, ok, "" if ok else f"e={cfg[2]} kappa={kappa} n={n}")
    assert rep.ok, _first(rep)
    assert not bad, bad[:3]


# ---------------------------------------------------------------------------
# 4. graded dimension

C4_CENSUS = [(cfg, (0,), n) for cfg in (E2, E3) for n in (1, 2, 3, 4, 5)] + \
            [(E2, (0, 1), n) for n in (1, 2, 3)] + \
            [pytest.param(E2, (0, 1), 4, marks=pytest.mark.slow)]


@pytest.mark.parametrize("cfg,kappa,n", C4_CENSUS)
def test_c4_census(cfg, kappa, n):
    A = graded(*cfg, kappa, n)
    census = A.graded_dimension()
    formula = combin.graded_dim_algebra(n, len(kappa), A.Q)
    ok = census == formula
    record(4, ok, "" if ok else f"census e={cfg[2]} kappa={kappa} n={n}")
    assert census == formula


def test_c4_combinatorics_to_n8():
    import math
    bad = []
    for e, kappa in [(2, (0,)), (3, (0,)), (0, (0,)), (2, (0, 1)), (3, (0, 0))]:
        Q = QuiverData(e, kappa)
        for n in range(1, 9):
            g = combin.graded_dim_algebra(n, len(kappa), Q)
            if g.at_one() != len(kappa) ** n * math.factorial(n):
                bad.append((e, kappa, n))
    record(4, not bad, "" if not bad else f"l^n n! fails at {bad[:2]}")
    assert not bad


def test_c4_example():
    g = combin.graded_dim_algebra(2, 1, QuiverData(2, (0,)))
    ok = g == Laurent({2: 1, 0: 1}) and str(g) == "t^2+1"
    record(4, ok, "" if ok else f"n=2 gives {g}")
    assert ok


# ---------------------------------------------------------------------------
# 5. leading coefficient of e_lambda y_lambda

C5 = [(cfg, kappa, n) for n in (1, 2, 3) for cfg, kappa in
      [(E2, (0,)), (E3, (0,)), (E0, (0,)), (E2, (0, 1)), (E3, (0, 1))]]


@pytest.mark.parametrize("cfg,kappa,n", C5)
def test_c5_leading_coefficient(cfg, kappa, n):
    A = graded(*cfg, kappa, n)
    bad = []
    for lam in combin.multipartitions(n, len(kappa)):
        top = initial_tableau(lam)
        ex = A.expand(A.G.e_lambda_y_lambda(lam), "murphy")
        if A.F.is_zero(ex[(top, top)]):
            bad.append((combin.shape_str(lam), "c = 0"))
        for (s, t) in ex.support():
            if (s, t) != (top, top) and not strictly_above(s.shape, lam):
                bad.append((combin.shape_str(lam), str(s), str(t)))
    record(5, not bad, "" if not bad else f"e={cfg[2]} kappa={kappa} n={n}")
    assert not bad, bad[:3]


def test_c5_example():
    A = graded(*E2, (0,), 2)
    lam = ((2,),)
    top = initial_tableau(lam)
    c = A.expand(A.G.e_lambda_y_lambda(lam), "murphy")[(top, top)]
    record(5, c == 2, f"c_(2) = {A.F.fmt(c)}")
    assert c == 2


# ---------------------------------------------------------------------------
# 6. combinatorial identities


def test_c6_defect_identity():
    bad = []
    for e, kappa in [(2, (0,)), (3, (0,)), (4, (0,)), (0, (0,)), (2, (0, 1)), (3, (0, 1)), (3, (0, 0))]:
        Q = QuiverData(e, kappa)
        for n in range(1, 9):
            for t in combin.all_tableaux(n, len(kappa)):
                beta = combin.block_of(residue_sequence(t, Q), Q)
                if degree(t, Q) + combin.codegree(t, Q) != combin.defect(beta, Q):
                    bad.append((e, kappa, str(t)))
    record(6, not bad, "" if not bad else f"defect identity fails at {bad[:1]}")
    assert not bad


def test_c6_positive_example_a():
    Q = QuiverData(3, (0,))
    i = (0, 1, 2, 2, 0, 1, 1, 2, 0)
    found = {str(t) for t in combin.std_of_residue(i, 1, Q) if is_positive(t, Q)}
    listed = {str(tableau_from_rows(x)) for x in ("123/456/789", "123568/49/7", "1235689/4/7")}
    ok = found == listed
    record(6, ok, f"positive tableaux for (0,1,2,2,0,1,1,2,0): {len(found)} found, {len(listed)} listed")
    assert found == listed


def test_c6_positive_example_b():
    Q = QuiverData(3, (0,))
    t = tableau_from_rows("124567/3")
    ok = degree(t, Q) == 0 and not is_positive(t, Q)
    record(6, ok, "" if ok else "example (b)")
    assert ok


def test_c6_positive_example_c():
    s = tableau_from_rows("14", "2/3")
    ok = not is_positive(s, QuiverData(2, (0, 1)))
    record(6, ok, "" if ok else "example (c)")
    assert ok


# ---------------------------------------------------------------------------
# 7. one dimensional ideals

C7 = [(cfg, kappa, n) for cfg in (E2, E3) for kappa in ((0,), (0, 1)) for n in (1, 2, 3, 4)
      if not (len(kappa) == 2 and n == 4)] + \
     [pytest.param(cfg, (0, 1), 4, marks=pytest.mark.slow) for cfg in (E2, E3)]


@pytest.mark.parametrize("cfg,kappa,n", C7)
def test_c7_zns(cfg, kappa, n):
    G = generators(*cfg, kappa, n)
    A = graded(*cfg, kappa, n) if len(kappa) == 1 or n <= 3 else None
    bad = []
    for s in sorted(set(G.quiver.res(k) for k in kappa)):
        for eps in (1, -1):
            C, ok = G.verify_theorem_A5(s, eps)
            if not ok:
                bad.append((s, eps, "C"))
                continue
            if A is not None:
                d = A.degree_of(G.z_ns(s, eps))
                if d is INHOMOGENEOUS or d != 2 * sum(G.zns_exponents(s, eps)):
                    bad.append((s, eps, str(d)))
    record(7, not bad, "" if not bad else f"e={cfg[2]} kappa={kappa} n={n}")
    assert not bad


def test_c7_example():
    G = generators(*E2, (0,), 2)
    C, ok = G.verify_theorem_A5(0, 1)
    ok = ok and C == 3
    record(7, ok, f"C = {G.F.fmt(C)}" if C is not None else "C undefined")
    assert ok


# ---------------------------------------------------------------------------
# 8. decomposition matrices

C8 = [(cfg, kappa, n) for n in (1, 2, 3) for cfg, kappa in
      [(E2, (0,)), (E3, (0,)), (E2, (0, 1)), (E3, (0, 1))]] + [(E2, (0,), 4), (E3, (0,), 4)]


@pytest.mark.parametrize("cfg,kappa,n", C8)
def test_c8_decomposition(cfg, kappa, n):
    A = graded(*cfg, kappa, n)
    bad = []
    for b in A.blocks():
        D = A.decomposition_matrix(b.beta)
        oracle = A.ungraded_decomposition(b.beta)
        if D.cols != oracle.cols or D.at_one() != oracle.at_one():
            bad.append(("oracle", combin.root_str(b.beta)))
        for mu in D.cols:
            if D[(mu, mu)] != Laurent({0: 1}):
                bad.append(("diagonal", combin.shape_str(mu)))
        for lam in D.rows:
            for mu in D.cols:
                if D[(lam, mu)] and not combin.dominates(lam, mu):
                    bad.append(("dominance", combin.shape_str(lam), combin.shape_str(mu)))
    record(8, not bad, "" if not bad else f"e={cfg[2]} kappa={kappa} n={n}")
    assert not bad, bad[:3]


def test_c8_example():
    A = graded(*E2, (0,), 2)
    (b,) = A.blocks()
    D = A.decomposition_matrix(b.beta)
    ok = [[str(x) for x in row] for row in D.matrix()] == [["t"], ["1"]] \
        and [[str(x) for x in row] for row in A.cartan(b.beta)] == [["t^2+1"]]
    record(8, ok, "" if ok else "n=2 example")
    assert ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_c8_semisimple(n):
    A = graded(*E0, (0,), n)
    bad = []
    for b in A.blocks():
        D = A.decomposition_matrix(b.beta)
        ident = [[Laurent({0: 1}) if r == c else Laurent() for c in D.rows] for r in D.rows]
        if D.cols != D.rows or D.matrix() != ident:
            bad.append(combin.root_str(b.beta))
    record(8, not bad, "" if not bad else f"e=0 n={n}")
    assert not bad


# ---------------------------------------------------------------------------
# 9. duality and symmetry

C9 = [(E2, (0,), 2), (E2, (0,), 3), (E3, (0,), 3), (E2, (0, 1), 2), (E2, (0, 1), 3), (E3, (0, 1), 2)]


@pytest.mark.parametrize("cfg,kappa,n", C9)
def test_c9_pairing_and_trace(cfg, kappa, n):
    A = graded(*cfg, kappa, n)
    fails = []
    for b in A.blocks():
        fails += A.check_pairing(b.beta).failures() + A.check_symmetric(b.beta).failures()
    for lam in combin.multipartitions(n, len(kappa)):
        fails += A.specht_duality_check(lam).failures()
    record(9, not fails, "" if not fails else f"e={cfg[2]} kappa={kappa} n={n}")
    assert not fails, fails[:3]


@pytest.mark.parametrize("cfg,kappa,n", [(E2, (0,), 2), (E2, (0,), 3), (E3, (0,), 3), (E2, (0, 1), 2)])
def test_c9_murphy_dual_products_homogeneous(cfg, kappa, n):
    A = graded(*cfg, kappa, n)
    bad = []
    for s, t in A.pairs:
        beta = combin.shape_block(s.shape, A.Q)
        d = A.murphy_dual_degree(s, t)
        if d != 2 * A.block(beta).defect:
            bad.append((str(s), str(t), str(d)))
    record(9, not bad, "" if not bad else
           f"m_st n_t's' not homogeneous of degree 2 defect for {len(bad)}/{len(A.pairs)} pairs "
           f"(e={cfg[2]} kappa={kappa} n={n})")
    assert not bad, bad[:3]


# ---------------------------------------------------------------------------
# 10. reduced word dependence

T10 = tableau_from_rows("1239/468/5/7")
U10 = tableau_from_rows("1237/468/5/9")
W1 = (4, 5, 7, 6, 5, 7, 8, 7)
W2 = (4, 5, 7, 6, 5, 8, 7, 8)


def test_c10_combinatorics():
    Q = QuiverData(3, (0,))
    w = d_perm(T10)
    words = reduced_words(w)
    res = residue_sequence(T10, Q)
    checks = {
        "first word reduced for d(t)": combin.is_reduced_word_for(W1, w),
        "second word reduced for d(t)": combin.is_reduced_word_for(W2, w),
        "both words enumerated": W1 in words and W2 in words,
        "res_t(7) = res_t(9)": res[6] == res[8],
        "d(u) is the common prefix": d_perm(U10) == combin.perm_from_word(W1[:5], 9),
        "u dominates t": tableau_dominates(U10, T10),
        "equal residues": residue_sequence(U10, Q) == res,
        "equal degrees": degree(U10, Q) == degree(T10, Q),
    }
    bad = [k for k, v in checks.items() if not v]
    record(10, not bad, "" if not bad else ", ".join(bad))
    assert not bad


@pytest.mark.parametrize("cfg,kappa,n", [(E2, (0,), 4), (E3, (0,), 4), (E2, (0, 1), 3)])
def test_c10_word_dependence_is_higher(cfg, kappa, n):
    rep = graded(*cfg, kappa, n).check_word_dependence()
    record(10, rep.ok, "" if rep.ok else f"word dependence e={cfg[2]} n={n}")
    assert rep.ok, _first(rep)


@pytest.mark.skipif(os.environ.get("GRADEDHECKE_LONG") != "1",
                    reason="n = 9 algebra computation; set GRADEDHECKE_LONG=1")
def test_c10_algebraic_identity():
    G = generators(*E3, (0,), 9)
    lam = T10.shape
    top = initial_tableau(lam)
    a = G.psi_st(top, T10, ((), W1))
    b = G.psi_st(top, T10, ((), W2))
    ok = a - b == G.psi_st(top, U10, ((), d_word(U10)))
    record(10, ok, "n = 9 identity")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-m", ""] + sys.argv[1:]))
