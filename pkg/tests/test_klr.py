import pytest

from conftest import E0, E2, E3, generators
from gradedhecke import combin
from gradedhecke.combin import QuiverData, initial_tableau
from gradedhecke.klr import (ConfigError, KLRConfig, KLRGenerators, check_against_seminormal,
                             check_graded_embedding, check_inverse_maps, check_relations, embed,
                             scalar_multiple, series_str)
from gradedhecke.scalars import PrimeField, RationalField


def G(cfg, kappa, n):
    return generators(*cfg, kappa, n)


def test_config_validation():
    F = PrimeField(5)
    with pytest.raises(ConfigError):
        KLRConfig(F, 2, QuiverData(2, (0,)), 2)  # q = 2 has e = 4 in GF(5)
    with pytest.raises(ConfigError):
        KLRConfig(F, 1, QuiverData(2, (0,)), 2)  # q = 1 forces e = p
    assert KLRConfig(F, 1, QuiverData(5, (0,)), 2).degenerate
    assert KLRConfig(RationalField(), 2, QuiverData(0, (0,)), 2).case == "generic"


def test_n2_examples():
    g = G(E2, (0,), 2)
    H = g.H
    assert not g.y(1)
    assert g.y(2) == (H.one() + H.T(1)) * 2
    assert not g.y(2) * g.y(2)
    assert g.nilpotency_index(2) == 2
    assert g.e_idem((0, 1)) == H.one()
    assert not g.e_idem((0, 0))
    assert g.e_lambda_y_lambda(((2,),)) == (H.one() + H.T(1)) * 2
    assert g.e_lambda_y_lambda(((1, 1),)) == H.one()
    assert g.z_lambda(((1, 1),)) == H.one() + H.T(1)


@pytest.mark.parametrize("cfg,kappa,n", [(E2, (0,), 3), (E3, (0,), 4), (E2, (0, 1), 3), (E0, (0,), 3)])
def test_idempotent_decomposition(cfg, kappa, n):
    g = G(cfg, kappa, n)
    H = g.H
    total = H.zero()
    for i in g.weights:
        e = g.e_idem(i)
        assert e * e == e
        total = total + e
        nonempty = bool(combin.std_of_residue(i, len(kappa), g.quiver))
        assert bool(e) == nonempty
    assert total == H.one()


@pytest.mark.parametrize("cfg,kappa,n", [(E2, (0,), 3), (E3, (0,), 3), (E2, (0, 1), 2)])
def test_y_nilpotent_and_commuting(cfg, kappa, n):
    g = G(cfg, kappa, n)
    for r in range(1, n + 1):
        k = g.nilpotency_index(r)
        p = g.H.one()
        for _ in range(k):
            p = p * g.y(r)
        assert not p
        for s in range(1, n + 1):
            assert g.y(r) * g.y(s) == g.y(s) * g.y(r)


def test_relation_report_small():
    rep = check_relations(G(E2, (0,), 2))
    assert rep.ok and rep.summary()
    assert check_inverse_maps(G(E2, (0,), 2)).ok


def test_relations_generic_rationals():
    g = G(E0, (0,), 3)
    assert check_relations(g).ok
    assert check_inverse_maps(g).ok


def test_relations_other_quivers():
    for cfg, kappa, n in [(E3, (0,), 4), ((5, 2, 4), (0, 2), 3)]:
        g = G(cfg, kappa, n)
        assert check_relations(g).ok, check_relations(g).failures()[:3]


def test_degenerate_generators():
    g = generators(3, 1, 3, (0, 1), 3)
    rep = check_relations(g)
    assert rep.ok
    assert "psi" not in " ".join(rep.summary())
    with pytest.raises(NotImplementedError):
        g.psi(1)


def test_series_string():
    g = G(E3, (0,), 3)
    i = next(w for w in g.nonzero_weights() if w[0] != w[1])
    assert series_str(g.F, g.Q_series(1, i))


def test_homogeneous_elements():
    g = G(E3, (0,), 3)
    for lam in combin.multipartitions(3, 1):
        t = initial_tableau(lam)
        assert g.e_lambda(lam) * g.e_lambda_y_lambda(lam) == g.e_lambda_y_lambda(lam)
        assert g.psi_st(t, t) == g.e_lambda_y_lambda(lam)
        assert g.psi_prime_st(t, t) == g.e_lambda_prime_y_lambda(lam)
    assert check_against_seminormal(g).ok


def test_A5_example():
    g = G(E2, (0,), 2)
    C, ok = g.verify_theorem_A5(0, 1)
    assert ok and C == 3
    assert g.zns_exponents(0, 1) == (0, 1)


def test_scalar_multiple():
    g = G(E2, (0,), 2)
    H = g.H
    assert scalar_multiple(H.T(1) * 3, H.T(1)) == 3
    assert scalar_multiple(H.T(1), H.one()) is None


def test_graded_embedding():
    g2, g3 = G(E2, (0,), 2), G(E2, (0,), 3)
    rep = check_graded_embedding(g2, g3)
    assert rep.ok, rep.failures()[:3]
    assert embed(g2.y(1), g3.H) == g3.y(1)
    assert embed(g2.e_idem((0, 1)), g3.H) == g3.e_idem((0, 1, 0)) + g3.e_idem((0, 1, 1))
