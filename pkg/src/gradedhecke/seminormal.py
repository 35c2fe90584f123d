"""The lifted semisimple algebra: seminormal idempotents and lifted elements.

Everything is computed with the same multiplication engine. Elements of the
lifted algebra are kept as ``numerator / denominator`` with the numerator
over the coefficient ring of :func:`combin.lift_ring` and a scalar
denominator in its fraction field. This keeps the expensive gcd arithmetic
out of the inner loops.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import combin
from .combin import QuiverData, StandardTableau
from .hecke import HeckeAlgebra, HeckeElement, HeckeParams, is_semisimple, klr_params
from .scalars import (
    Field,
    LocalizedPolyRing,
    RationalField,
    quantum_characteristic,
    specialize_at_zero,
    valuation_at_zero,
)


class IntegralityError(ArithmeticError):
    """A coefficient that should lie in the local ring has a pole."""


def _adjust_kappa(kappa: Sequence[int], e: int, n: int) -> Tuple[int, ...]:
    """Representatives mod ``e`` with consecutive gaps at least ``n``."""
    if e == 0:
        return tuple(kappa)
    out = [kappa[-1]]
    for k in reversed(kappa[:-1]):
        lo = out[0] + n
        out.insert(0, k + ((lo - k + e - 1) // e) * e if k < lo else k)
    return tuple(out)


def _padic_val(a: Fraction, p: int):
    if a == 0:
        return float("inf")
    v = 0
    num, den = a.numerator, a.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


class LiftElement:
    """``num / den`` with ``num`` over the lift ring and ``den`` a scalar."""

    __slots__ = ("lift", "num", "den")

    def __init__(self, lift: "LiftParams", num: HeckeElement, den):
        self.lift = lift
        self.num = num
        self.den = den

    def __mul__(self, other: "LiftElement") -> "LiftElement":
        fld = self.lift.field
        return LiftElement(self.lift, self.num * other.num, fld.mul(self.den, other.den))

    def to_field(self) -> HeckeElement:
        return self.lift.over_field(self.num, self.den)


class LiftParams:
    """Lifted parameters and the two algebras built from them.

    ``H`` is the algebra over the lift ring, ``HK`` the same algebra over its
    fraction field and ``target`` the algebra over the base field that
    specializations land in.
    """

    def __init__(self, base: Field, q, quiver: QuiverData, n: int,
                 target: Optional[HeckeAlgebra] = None):
        self.base = base
        self.q = base(q)
        self.quiver = quiver
        self.n = n
        self.degenerate = self.q == base.one
        e = quiver.e
        if self.degenerate:
            if base.characteristic == 0:
                raise ValueError("q = 1 needs a field of positive characteristic")
            if e != base.characteristic:
                raise ValueError(f"q = 1 forces e = {base.characteristic}, got e = {e}")
        elif quantum_characteristic(base, self.q) != e:
            raise ValueError(f"q = {base.fmt(self.q)} does not have quantum characteristic {e}")
        self.lquiver = QuiverData(e, _adjust_kappa(quiver.kappa, e, n))
        self.ring = combin.lift_ring(base, self.q, e)
        self.field = combin.lift_field(base, self.q, e)
        self.v = combin.lift_v(base, self.q, e)
        Qo = [combin.content((1, 1, s), self.lquiver, base, self.q) for s in range(1, quiver.level + 1)]
        qo = self.v if (not self.degenerate and e > 0) else self.ring(self.q)
        self.params = HeckeParams(self.ring, n, qo, Qo)
        if not is_semisimple(self.params):
            raise ArithmeticError("lifted algebra is not semisimple")
        self.H = HeckeAlgebra(self.params)
        if self.ring is self.field:
            self.HK = self.H
        else:
            self.HK = HeckeAlgebra(HeckeParams(self.field, n, self.to_field(qo), [self.to_field(c) for c in Qo]))
        self.target = target or HeckeAlgebra(klr_params(base, n, self.q, quiver.kappa))
        if self.target.n != n:
            raise ValueError("target algebra has the wrong rank")
        self._F_cache: Dict[StandardTableau, Tuple[HeckeElement, object]] = {}

    # -- scalars -------------------------------------------------------------

    def to_field(self, a):
        if isinstance(self.ring, LocalizedPolyRing):
            return self.ring.to_ratfun(a)
        return a

    def valuation(self, a):
        if isinstance(self.field, RationalField):
            return _padic_val(a, self.base.characteristic)
        return valuation_at_zero(a)

    def specialize(self, a):
        if isinstance(self.field, RationalField):
            if _padic_val(a, self.base.characteristic) < 0:
                raise IntegralityError("not integral at p")
            return self.base(a)
        return specialize_at_zero(a)

    def over_field(self, num: HeckeElement, den) -> HeckeElement:
        fld = self.field
        out = {}
        for lab, c in num.c.items():
            out[lab] = fld.div(self.to_field(c), den)
        return HeckeElement(self.HK, out)

    def content(self, node):
        return combin.content(node, self.lquiver, self.base, self.q)

    def content_seq(self, t: StandardTableau):
        return combin.content_seq(t, self.lquiver, self.base, self.q)

    @functools.cached_property
    def content_sets(self) -> List[list]:
        """Distinct contents ``cont_s(k)`` over all standard tableaux, per ``k``."""
        sets = [dict() for _ in range(self.n)]
        for s in combin.all_tableaux(self.n, self.quiver.level):
            for k, c in enumerate(self.content_seq(s)):
                sets[k][c] = None
        return [list(d) for d in sets]

    def gamma(self, t: StandardTableau):
        return combin.gamma(t, self.lquiver, self.base, self.q)

    def gamma_prime(self, t: StandardTableau):
        return combin.gamma_prime(t, self.lquiver, self.base, self.q)

    # -- seminormal elements -------------------------------------------------

    def F_parts(self, t: StandardTableau) -> Tuple[HeckeElement, object]:
        """Numerator and scalar denominator of ``F_t``."""
        hit = self._F_cache.get(t)
        if hit is not None:
            return hit
        R, fld = self.ring, self.field
        x = self.H.one()
        den = fld.one
        for k, ck in enumerate(self.content_seq(t), start=1):
            for c in self.content_sets[k - 1]:
                if R.eq(c, ck):
                    continue
                diff = self.to_field(R.sub(ck, c))
                if fld.is_zero(diff):
                    raise ArithmeticError(f"zero denominator in F_{t} at k={k}")
                x = x.right_Lpoly(k, (R.neg(c), R.one))
                den = fld.mul(den, diff)
        self._F_cache[t] = (x, den)
        return x, den

    def F(self, t: StandardTableau) -> LiftElement:
        num, den = self.F_parts(t)
        return LiftElement(self, num, den)

    def _sandwich(self, left: StandardTableau, core: HeckeElement, right: StandardTableau) -> HeckeElement:
        R = self.ring
        ln, ld = self.F_parts(left)
        x = ln * core
        for k, ck in enumerate(self.content_seq(right), start=1):
            for c in self.content_sets[k - 1]:
                if not R.eq(c, ck):
                    x = x.right_Lpoly(k, (R.neg(c), R.one))
        _, rd = self.F_parts(right)
        return self.over_field(x, self.field.mul(ld, rd))

    def f_st(self, s: StandardTableau, t: StandardTableau) -> HeckeElement:
        """``F_s m_st F_t`` over the fraction field."""
        return self._sandwich(s, self.H.m_st(s, t), t)

    def f_prime_st(self, s: StandardTableau, t: StandardTableau) -> HeckeElement:
        """``F_s' n_st F_t'`` over the fraction field."""
        sc, tc = combin.conjugate_tableau(s), combin.conjugate_tableau(t)
        return self._sandwich(sc, self.H.n_st(s, t), tc)

    # -- idempotents ---------------------------------------------------------

    def e_idem_lift(self, i: Sequence[int]) -> HeckeElement:
        """``sum_{s in Std(i)} F_s`` over the fraction field."""
        fld = self.field
        out: dict = {}
        for s in combin.std_of_residue(tuple(i), self.quiver.level, self.quiver):
            num, den = self.F_parts(s)
            for lab, c in num.c.items():
                val = fld.div(self.to_field(c), den)
                cur = out.get(lab)
                out[lab] = val if cur is None else fld.add(cur, val)
        return HeckeElement(self.HK, {k: v for k, v in out.items() if not fld.is_zero(v)})

    def specialize_element(self, x: HeckeElement) -> HeckeElement:
        """Coefficientwise reduction; fails loudly on a pole."""
        out = {}
        B = self.base
        for lab, c in x.c.items():
            if self.valuation(c) < 0:
                raise IntegralityError(f"integrality violated at {lab}: {self.field.fmt(c)}")
            v = self.specialize(c)
            if not B.is_zero(v):
                out[lab] = v
        return HeckeElement(self.target, out)

    def e_idem_specialized(self, i: Sequence[int]) -> HeckeElement:
        return self.specialize_element(self.e_idem_lift(i))

    # -- lifted y elements ---------------------------------------------------

    def _y_lift(self, s: StandardTableau, sets) -> LiftElement:
        R, fld = self.ring, self.field
        x = self.H.one()
        den = fld.one
        for k in range(1, self.n + 1):
            for a in sets(k):
                c = self.content(a)
                if self.degenerate:
                    x = x.right_Lpoly(k, (R.neg(c), R.one))
                else:
                    # 1 - L_k / c  =  (c - L_k) / c
                    x = x.right_Lpoly(k, (c, R.neg(R.one)))
                    den = fld.mul(den, self.to_field(c))
        return LiftElement(self, x, den)

    def y_lift(self, s: StandardTableau) -> LiftElement:
        if not combin.is_positive(s, self.quiver):
            raise ValueError(f"{s} is not positive")
        Q = self.quiver
        return self._y_lift(s, lambda k: combin.node_sets(s, k, Q).Add)

    def y_prime_lift(self, s: StandardTableau) -> LiftElement:
        """Dual lift, built from the "above" sets of the conjugate tableau."""
        sc = combin.conjugate_tableau(s)
        Q = self.quiver
        return self._y_lift(sc, lambda k: combin.node_sets(sc, k, Q).Add_above)

    def scalar_ratio(self, x: HeckeElement, y: HeckeElement):
        """``c`` with ``x = c y`` or ``None``; ``y`` must be nonzero."""
        fld = self.field
        if not y.c:
            raise ValueError("zero reference element")
        lab, c0 = next(iter(y.c.items()))
        c = fld.div(x.c.get(lab, fld.zero), c0)
        if fld.is_zero(c):
            return c if not x.c else None
        return c if x == y * c else None
