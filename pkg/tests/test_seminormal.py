import pytest

from gradedhecke import combin
from gradedhecke.combin import QuiverData, initial_tableau
from gradedhecke.hecke import is_semisimple
from gradedhecke.scalars import PrimeField, RationalField
from gradedhecke.seminormal import LiftParams

CONFIGS = [
    (PrimeField(5), 4, 2, (0,), 2),
    (PrimeField(5), 4, 2, (0,), 3),
    (PrimeField(5), 4, 2, (0, 1), 3),
    (PrimeField(7), 2, 3, (0,), 3),
    (RationalField(), 2, 0, (0, 1), 3),
    (PrimeField(3), 1, 3, (0, 1), 3),
]
IDS = ["e2-n2", "e2-n3", "e2-l2-n3", "e3-n3", "e0-l2-n3", "deg-p3-n3"]


@pytest.fixture(scope="module", params=CONFIGS, ids=IDS)
def lift(request):
    base, q, e, kappa, n = request.param
    return LiftParams(base, q, QuiverData(e, kappa), n)


def test_lift_is_semisimple(lift):
    assert is_semisimple(lift.params)


def test_F_resolution_of_identity(lift):
    tabs = combin.all_tableaux(lift.n, lift.quiver.level)
    Fs = {t: lift.F(t).to_field() for t in tabs}
    HK = lift.HK
    assert sum(Fs.values(), HK.zero()) == HK.one()
    for t in tabs:
        for s in tabs[:4]:
            assert Fs[t] * Fs[s] == (Fs[t] if s == t else HK.zero())


def test_gamma_and_gamma_prime(lift):
    for t in combin.all_tableaux(lift.n, lift.quiver.level):
        f = lift.f_st(t, t)
        assert f * f == f * lift.gamma(t)
        fp = lift.f_prime_st(t, t)
        assert fp * fp == fp * lift.gamma_prime(t)


def test_f_orthogonality(lift):
    tabs = combin.all_tableaux(lift.n, lift.quiver.level)
    pairs = [(s, t) for s in tabs[:4] for t in tabs if s.shape == t.shape][:6]
    for s, t in pairs:
        for u, v in pairs:
            if t != u:
                assert not (lift.f_st(s, t) * lift.f_st(u, v))


def test_specialized_idempotents(lift):
    H = lift.target
    es = [lift.e_idem_specialized(i) for i in combin.residue_sequences(lift.n, lift.quiver.level, lift.quiver)]
    assert sum(es, H.zero()) == H.one()
    for a in es:
        assert a * a == a
        for b in es:
            if b is not a:
                assert not (a * b)


def test_examples_n2():
    F = PrimeField(5)
    Q = QuiverData(2, (0,))
    L = LiftParams(F, 4, Q, 2)
    assert L.e_idem_specialized((0, 1)) == L.target.one()
    assert not L.e_idem_specialized((0, 0))
    one = initial_tableau(((1, 1),))
    assert L.y_lift(one).to_field() == L.HK.one()
    two = initial_tableau(((2,),))
    c = L.to_field(L.content((2, 1, 1)))
    expect = L.HK.one() - L.HK.L(2) * L.field.inv(c)
    assert L.y_lift(two).to_field() == expect


def test_y_lift_eigen_relation(lift):
    Q = lift.quiver
    for t in combin.all_tableaux(lift.n, Q.level):
        if not combin.is_positive(t, Q):
            continue
        f = lift.f_st(t, t)
        ratio = lift.scalar_ratio(f * lift.y_lift(t).to_field(), f)
        assert ratio is not None
        unit = lift.field.div(ratio, lift.gamma(t))
        assert lift.valuation(unit) == 0


def test_not_positive_rejected():
    L = LiftParams(PrimeField(5), 4, QuiverData(2, (0, 1)), 3)
    bad = [t for t in combin.all_tableaux(3, 2) if not combin.is_positive(t, L.quiver)]
    assert bad
    with pytest.raises(ValueError):
        L.y_lift(bad[0])
