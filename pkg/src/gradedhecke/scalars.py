"""Exact scalar arithmetic.

Three layers live here:

* base fields: ``PrimeField(p)`` (values are ints in ``[0, p)``) and
  ``RationalField()`` (values are ``Fraction``);
* univariate rational functions ``RatFun`` over a base field, together with
  ``LocalizedPolyRing``, the subring ``K[x][1/D]`` used as the fast coefficient
  ring of the lifted Hecke algebra;
* integer Laurent polynomials in ``t`` used for graded dimensions.

Fields and rings expose a small uniform protocol (``add``, ``sub``, ``mul``,
``neg``, ``inv``, ``is_zero`` ...) so the multiplication engine can be written
once for every coefficient domain.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Dict, Iterable, Tuple

import flint

INF = math.inf


class Field:
    """Protocol shared by every coefficient domain."""

    characteristic = 0
    is_field = True

    def __call__(self, value):
        raise NotImplementedError

    # arithmetic on raw values
    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return a == b

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_unit(self, a) -> bool:
        return not self.is_zero(a)

    def fmt(self, a) -> str:
        return str(a)

    def parse(self, s: str):
        raise NotImplementedError

    def sum(self, values: Iterable):
        total = self.zero
        for v in values:
            total = self.add(total, v)
        return total


class PrimeField(Field):
    """GF(p) with values stored as Python ints in ``[0, p)``."""

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or p >= 2**31 or not _is_prime(p):
            raise ValueError(f"p must be a prime below 2^31, got {p}")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        if isinstance(value, str):
            return self.parse(value)
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(%d)" % self.p)
        return pow(a, -1, self.p)

    def pow(self, a, k):
        if k < 0:
            return pow(self.inv(a), -k, self.p)
        return pow(a, k, self.p)

    def parse(self, s: str):
        s = s.strip()
        if "/" in s:
            a, b = s.split("/")
            return self.div(int(a) % self.p, int(b) % self.p)
        return int(s) % self.p


class RationalField(Field):
    """The rationals, values are ``Fraction``."""

    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def fmt(self, a) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def parse(self, s: str):
        return Fraction(s.strip())


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def make_field(p) -> Field:
    """``make_field(0)`` or ``make_field(None)`` gives the rationals."""
    if p in (None, 0, "rational", "QQ"):
        return RationalField()
    return PrimeField(int(p))


def quantum_characteristic(field: Field, q) -> int:
    """Smallest ``e >= 2`` with ``1 + q + ... + q^(e-1) = 0``, or 0.

    ``q = 0`` is not invertible and is rejected. So is ``q = 1`` over the
    rationals, which falls outside the three admissible cases.
    """
    q = field(q)
    if field.is_zero(q):
        raise ValueError("q must be invertible")
    one = field.one
    if field.eq(q, one):
        if field.characteristic == 0:
            raise ValueError("q = 1 over a field of characteristic 0 is not supported")
        return field.characteristic
    if isinstance(field, PrimeField):
        # q != 1: the geometric sum vanishes exactly when q^e = 1
        e, power = 1, q
        while power != 1:
            power = power * q % field.p
            e += 1
        return e
    # rationals: the only root of unity other than 1 is -1
    if field.eq(q, field.neg(one)):
        return 2
    return 0


# ---------------------------------------------------------------------------
# dense univariate polynomials over a base field: tuples, low degree first

def ptrim(a) -> tuple:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def padd(F, a, b) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return ptrim(out)


def pneg(F, a) -> tuple:
    return tuple(F.neg(c) for c in a)


def psub(F, a, b) -> tuple:
    return padd(F, a, pneg(F, b))


def pscale(F, a, c) -> tuple:
    if F.is_zero(c):
        return ()
    return tuple(F.mul(x, c) for x in a)


def pmul(F, a, b) -> tuple:
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return ptrim(out)


def pdivmod(F, a, b) -> Tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    lead_inv = F.inv(b[-1])
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), ptrim(a)
    quot = [F.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if F.is_zero(c):
            continue
        c = F.mul(c, lead_inv)
        quot[i - db] = c
        for j, y in enumerate(b):
            a[i - db + j] = F.sub(a[i - db + j], F.mul(c, y))
    return ptrim(quot), ptrim(a[:db])


def pmonic(F, a) -> tuple:
    if not a:
        return a
    return pscale(F, a, F.inv(a[-1]))


def pgcd(F, a, b) -> tuple:
    while b:
        a, b = b, pdivmod(F, a, b)[1]
    return pmonic(F, a)


def peval(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def ppow(F, a, k: int) -> tuple:
    out = (F.one,)
    for _ in range(k):
        out = pmul(F, out, a)
    return out


def pxgcd(F, a, b):
    """Return ``(g, u, v)`` with ``u a + v b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = (F.one,), ()
    t0, t1 = (), (F.one,)
    while r1:
        quo, rem = pdivmod(F, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, psub(F, s0, pmul(F, quo, s1))
        t0, t1 = t1, psub(F, t0, pmul(F, quo, t1))
    lead = F.inv(r0[-1])
    return pscale(F, r0, lead), pscale(F, s0, lead), pscale(F, t0, lead)


def pord(a) -> int:
    """Order of vanishing at x = 0."""
    for i, c in enumerate(a):
        if c != 0:
            return i
    return INF


def pformat(F, a) -> str:
    if not a:
        return "0"
    terms = [f"{F.fmt(c)}*x^{k}" for k, c in enumerate(a) if not F.is_zero(c)]
    return "+".join(terms)


_TERM = re.compile(r"^\s*([^*]+)\*x\^(\d+)\s*$")


def pparse(F, s: str) -> tuple:
    s = s.strip()
    if s == "0":
        return ()
    coeffs: Dict[int, object] = {}
    for term in s.split("+"):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"bad polynomial term {term!r}")
        coeffs[int(m.group(2))] = F.add(coeffs.get(int(m.group(2)), F.zero), F.parse(m.group(1)))
    top = max(coeffs)
    return ptrim([coeffs.get(k, F.zero) for k in range(top + 1)])


# ---------------------------------------------------------------------------
# flint-backed polynomials (used inside RatFun and LocalizedPolyRing)


def _fpoly(F: Field, coeffs):
    """A flint polynomial from field values, low degree first."""
    if isinstance(F, PrimeField):
        return flint.nmod_poly([int(c) for c in coeffs], F.p)
    out = []
    for c in coeffs:
        c = Fraction(c)
        out.append(flint.fmpq(c.numerator, c.denominator))
    return flint.fmpq_poly(out)


def _fcoeff(F: Field, c):
    if isinstance(F, PrimeField):
        return int(c)
    return Fraction(int(c.p), int(c.q))


def _fcoeffs(F: Field, a) -> list:
    return [_fcoeff(F, c) for c in a.coeffs()]


def _fscalar(F: Field, c):
    """A field value in the form flint accepts as a scalar."""
    if isinstance(F, PrimeField):
        return int(c)
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _fzero(a) -> bool:
    return a.degree() < 0


def _ford(a):
    """Order of vanishing at x = 0."""
    if _fzero(a):
        return INF
    for i, c in enumerate(a.coeffs()):
        if c != 0:
            return i
    return INF


def _flead(a):
    return a[a.degree()]


def _fmonic(F: Field, a):
    lead = _fcoeff(F, _flead(a))
    if lead == 1:
        return a
    return a * _fscalar(F, F.inv(lead))


def _fformat(F: Field, a) -> str:
    return pformat(F, ptrim(_fcoeffs(F, a)))


# ---------------------------------------------------------------------------
# rational functions


class RatFun:
    """A reduced fraction num/den of polynomials in x, den monic."""

    __slots__ = ("F", "num", "den")

    def __init__(self, F: Field, num=(), den=None, normalized=False):
        self.F = F
        if not hasattr(num, "degree"):
            num = _fpoly(F, num)
        if den is None:
            den = _fpoly(F, (F.one,))
        elif not hasattr(den, "degree"):
            den = _fpoly(F, den)
        if _fzero(den):
            raise ZeroDivisionError("zero denominator")
        if not normalized:
            if _fzero(num):
                den = _fpoly(F, (F.one,))
            else:
                if den.degree() > 0:
                    g = num.gcd(den)
                    if g.degree() > 0:
                        num = num // g
                        den = den // g
                lead = _fcoeff(F, _flead(den))
                if lead != 1:
                    inv = _fscalar(F, F.inv(lead))
                    num = num * inv
                    den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def const(cls, F, c):
        c = F(c)
        return cls(F, (c,) if not F.is_zero(c) else (), normalized=True)

    @classmethod
    def x(cls, F):
        return cls(F, (F.zero, F.one), normalized=True)

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        return RatFun.const(self.F, other)

    def is_zero(self):
        return _fzero(self.num)

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((str(self.num), str(self.den)))

    def __add__(self, other):
        other = self._coerce(other)
        F = self.F
        if self.den == other.den:
            return RatFun(F, self.num + other.num, self.den, normalized=self.den.degree() == 0)
        return RatFun(F, self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(self.F, -self.num, self.den, normalized=True)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        F = self.F
        if self.den.degree() == 0 and other.den.degree() == 0:
            return RatFun(F, self.num * other.num, self.den, normalized=True)
        return RatFun(F, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFun(self.F, self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFun(self.F, self.num ** k, self.den ** k, normalized=True)

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return _fcoeff(self.F, self.num[0]) if not self.is_zero() else self.F.zero

    def num_coeffs(self) -> tuple:
        return ptrim(_fcoeffs(self.F, self.num))

    def den_coeffs(self) -> tuple:
        return ptrim(_fcoeffs(self.F, self.den))

    def __repr__(self):
        return f"RatFun({self})"

    def __str__(self):
        return f"({_fformat(self.F, self.num)})/({_fformat(self.F, self.den)})"


class RatFunField(Field):
    """The field K(x) of rational functions over a base field."""

    is_field = True

    def __init__(self, base: Field):
        self.base = base
        self.characteristic = base.characteristic
        self.zero = RatFun(base, (), normalized=True)
        self.one = RatFun(base, (base.one,), normalized=True)
        self.x = RatFun.x(base)

    def __repr__(self):
        return f"{self.base!r}(x)"

    def __eq__(self, other):
        return isinstance(other, RatFunField) and other.base == self.base

    def __hash__(self):
        return hash(("RatFun", self.base))

    def __call__(self, value):
        if isinstance(value, RatFun):
            return value
        if isinstance(value, str):
            return self.parse(value)
        return RatFun.const(self.base, value)

    def is_zero(self, a):
        return a.is_zero()

    def inv(self, a):
        return a.inverse()

    def div(self, a, b):
        return a / b

    def fmt(self, a):
        return str(a)

    def parse(self, s: str):
        s = s.strip()
        m = re.match(r"^\((.*)\)/\((.*)\)$", s)
        if not m:
            return RatFun(self.base, pparse(self.base, s))
        return RatFun(self.base, pparse(self.base, m.group(1)), pparse(self.base, m.group(2)))


def valuation_at_zero(f: RatFun):
    """Order of ``f`` at ``x = 0``; ``math.inf`` for ``f = 0``."""
    if f.is_zero():
        return INF
    return _ford(f.num) - _ford(f.den)


def specialize_at_zero(f: RatFun):
    """Image of an integral ``f`` in the residue field ``K``."""
    if f.is_zero():
        return f.F.zero
    on, od = _ford(f.num), _ford(f.den)
    if od > on or od > 0:
        # od > 0 with on >= od cannot happen for a reduced fraction
        raise ValueError("not integral at x=0")
    if on > 0:
        return f.F.zero
    F = f.F
    return F.div(_fcoeff(F, f.num[0]), _fcoeff(F, f.den[0]))


# ---------------------------------------------------------------------------
# K[x] with one linear monic unit D = x - root inverted


class LPoly:
    """``num / D^k`` in lowest terms; ``k = 0`` or ``D`` does not divide num."""

    __slots__ = ("num", "k")

    def __init__(self, num, k=0):
        self.num = num
        self.k = k

    def __eq__(self, other):
        return isinstance(other, LPoly) and self.k == other.k and self.num == other.num

    def __hash__(self):
        return hash((str(self.num), self.k))

    def __repr__(self):
        return f"LPoly({self.num}, {self.k})"


class LocalizedPolyRing(Field):
    """The ring ``K[x][1/D]`` with ``D = x - root``.

    With ``root=None`` this is just ``K[x]``. Every element is a rational
    function whose reduced denominator is a power of ``D``, so it is a subring
    of ``K(x)`` with a cheap canonical form (no gcds needed).
    """

    is_field = False

    def __init__(self, base: Field, root=None):
        self.base = base
        self.root = None if root is None else base(root)
        self.characteristic = base.characteristic
        F = base
        self._p0 = _fpoly(F, ())
        self._p1 = _fpoly(F, (F.one,))
        self.zero = LPoly(self._p0, 0)
        self.one = LPoly(self._p1, 0)
        self.D = _fpoly(F, (F.neg(self.root), F.one)) if root is not None else self._p1
        self._root_f = None if root is None else _fscalar(F, self.root)
        self.fraction_field = RatFunField(base)

    def __repr__(self):
        return f"LocalizedPolyRing({self.base!r}, root={self.root})"

    def _norm(self, num, k):
        if _fzero(num):
            return self.zero
        if k and self.root is not None:
            r, D = self._root_f, self.D
            while k and num(r) == 0:
                num = num // D
                k -= 1
        return LPoly(num, k)

    def __call__(self, value):
        if isinstance(value, LPoly):
            return value
        if isinstance(value, RatFun):
            return self.from_ratfun(value)
        c = self.base(value)
        return LPoly(_fpoly(self.base, (c,)), 0) if not self.base.is_zero(c) else self.zero

    def poly(self, coeffs, k=0):
        return self._norm(_fpoly(self.base, [self.base(c) for c in coeffs]), k)

    @property
    def x(self):
        return LPoly(_fpoly(self.base, (self.base.zero, self.base.one)), 0)

    def d_power(self, k: int):
        """``D^k`` for any integer ``k``."""
        if k >= 0:
            return LPoly(self.D ** k, 0)
        if self.root is None:
            raise ZeroDivisionError("D is 1 here; negative powers are trivial")
        return LPoly(self._p1, -k)

    def add(self, a, b):
        if _fzero(a.num):
            return b
        if _fzero(b.num):
            return a
        if a.k == b.k:
            return self._norm(a.num + b.num, a.k)
        if a.k < b.k:
            a, b = b, a
        return self._norm(a.num + b.num * self.D ** (a.k - b.k), a.k)

    def neg(self, a):
        return LPoly(-a.num, a.k)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if _fzero(a.num) or _fzero(b.num):
            return self.zero
        if a.k == 0 and b.k == 0:
            return LPoly(a.num * b.num, 0)
        return self._norm(a.num * b.num, a.k + b.k)

    def is_zero(self, a):
        return _fzero(a.num)

    def eq(self, a, b):
        return a.k == b.k and a.num == b.num

    def is_unit(self, a):
        return self._unit_split(a) is not None

    def _unit_split(self, a):
        """If ``a = c D^j`` return ``(c, j)``."""
        if _fzero(a.num):
            return None
        num, j = a.num, -a.k
        if self.root is not None:
            r = self._root_f
            while num.degree() > 0 and num(r) == 0:
                num = num // self.D
                j += 1
        if num.degree() != 0:
            return None
        return _fcoeff(self.base, num[0]), j

    def inv(self, a):
        split = self._unit_split(a)
        if split is None:
            raise ZeroDivisionError(f"{self.fmt(a)} is not a unit")
        c, j = split
        cinv = _fscalar(self.base, self.base.inv(c))
        if j <= 0:
            return LPoly(self.D ** (-j) * cinv, 0)
        return LPoly(self._p1 * cinv, j)

    def constant_value(self, a):
        """The base-field value of a constant, else ``None``."""
        if _fzero(a.num):
            return self.base.zero
        if a.k or a.num.degree() > 0:
            return None
        return _fcoeff(self.base, a.num[0])

    def to_ratfun(self, a) -> RatFun:
        return RatFun(self.base, a.num, self.D ** a.k, normalized=True)

    def from_ratfun(self, f: RatFun):
        den, k = f.den, 0
        while den.degree() > 0:
            if self.root is None:
                raise ValueError(f"{f} does not lie in {self!r}")
            quo, rem = divmod(den, self.D)
            if not _fzero(rem):
                raise ValueError(f"{f} does not lie in {self!r}")
            den, k = quo, k + 1
        inv = _fscalar(self.base, self.base.inv(_fcoeff(self.base, den[0])))
        return self._norm(f.num * inv, k)

    def valuation(self, a):
        if _fzero(a.num):
            return INF
        # D(0) = -root is never zero here since root = -q
        return _ford(a.num)

    def lowest(self, a):
        """``(v, c)`` with ``a = x^v (c + O(x))``."""
        v = self.valuation(a)
        if v == INF:
            return v, self.base.zero
        F = self.base
        c = _fcoeff(F, a.num[v])
        if a.k:
            c = F.div(c, F.pow(F.neg(self.root), a.k))
        return v, c

    def specialize(self, a):
        if _fzero(a.num):
            return self.base.zero
        v, c = self.lowest(a)
        if v < 0:
            raise ValueError("not integral at x=0")
        return c if v == 0 else self.base.zero

    def fmt(self, a):
        return str(self.to_ratfun(a))

    def parse(self, s):
        return self.from_ratfun(self.fraction_field.parse(s))

# ---------------------------------------------------------------------------
# Laurent polynomials in t with integer coefficients


class Laurent:
    """Immutable integer Laurent polynomial in ``t``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, c in items:
                c = int(c)
                if c:
                    clean[int(k)] = clean.get(int(k), 0) + c
        self._terms = {k: c for k, c in sorted(clean.items()) if c}
        self._hash = None

    @classmethod
    def monomial(cls, k: int, c: int = 1):
        return cls({k: c})

    @classmethod
    def t(cls):
        return cls({1: 1})

    @property
    def terms(self) -> Dict[int, int]:
        return dict(self._terms)

    def coeff(self, k: int) -> int:
        return self._terms.get(k, 0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def _coerce(self, other):
        if isinstance(other, Laurent):
            return other
        if isinstance(other, int):
            return Laurent({0: other})
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return Laurent(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Laurent":
        return Laurent({e + k: c for e, c in self._terms.items()})

    def bar(self) -> "Laurent":
        return Laurent({-k: c for k, c in self._terms.items()})

    def at_one(self) -> int:
        return sum(self._terms.values())

    def is_nonnegative(self):
        return all(c > 0 for c in self._terms.values())

    def to_json(self) -> Dict[str, int]:
        return {str(k): c for k, c in self._terms.items()}

    @classmethod
    def from_json(cls, data) -> "Laurent":
        return cls({int(k): int(c) for k, c in data.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), reverse=True):
            if k == 0:
                mono = ""
            elif k == 1:
                mono = "t"
            else:
                mono = f"t^{k}"
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self):
        return f"Laurent({self})"


def laurent_bar(f: Laurent) -> Laurent:
    """The involution ``t -> t^{-1}``."""
    return f.bar()
