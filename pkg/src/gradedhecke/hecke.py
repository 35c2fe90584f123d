"""Normal-form multiplication in the cyclotomic Hecke algebra.

Elements are sparse maps on the Ariki-Koike basis ``L^a T_w`` with
``0 <= a_k < level``. The engine only knows how to multiply a basis element
on the right by a generator; everything else is assembled from that.

Rewriting rules used (``delta = 1`` iff ``q = 1``)::

    T_w T_i        = T_{w s_i}                       if l(w s_i) > l(w)
                   = (q-1) T_w + q T_{w s_i}         otherwise
    T_j L_j        = L_{j+1} T_j - (q-1) L_{j+1} - delta
    T_j L_{j+1}    = L_j T_j + (q-1) L_{j+1} + delta
    L_1^level      = cyclotomic relation
    L_j^level      = q^-1 T L_{j-1}^level T + ...    (T = T_{j-1})

The last rule turns an overflowing exponent of ``L_j`` into exponents of
smaller index, so reducing the largest overflowing index first terminates.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import combin
from .combin import (
    Multipartition,
    Perm,
    StandardTableau,
    d_perm,
    identity_perm,
    perm_inverse,
    perm_length,
    reduced_word,
    right_ascent,
    right_mul_simple,
)
from .scalars import Field, LocalizedPolyRing, PrimeField, RatFunField, RationalField, quantum_characteristic

Label = Tuple[Tuple[int, ...], Perm]


def _acc(R, out: dict, key, val):
    if R.is_zero(val):
        return
    cur = out.get(key)
    if cur is None:
        out[key] = val
        return
    s = R.add(cur, val)
    if R.is_zero(s):
        del out[key]
    else:
        out[key] = s


class HeckeParams:
    """Coefficient ring, ``q``, ``Q = (Q_1, ..., Q_level)`` and ``n``."""

    def __init__(self, ring: Field, n: int, q, Q: Sequence):
        if n < 0:
            raise ValueError("n must be non-negative")
        if not Q:
            raise ValueError("need at least one cyclotomic parameter")
        self.ring = ring
        self.n = n
        self.q = ring(q)
        self.Q = tuple(ring(x) for x in Q)
        if not ring.is_unit(self.q):
            raise ValueError("q must be invertible")
        self.degenerate = ring.eq(self.q, ring.one)

    @property
    def level(self) -> int:
        return len(self.Q)

    def key(self):
        return (id(self.ring), self.n, self.q, self.Q)

    def __repr__(self):
        R = self.ring
        return (f"HeckeParams(ring={R!r}, n={self.n}, q={R.fmt(self.q)}, "
                f"Q=({', '.join(R.fmt(x) for x in self.Q)}))")


def klr_params(field: Field, n: int, q, kappa: Sequence[int]) -> HeckeParams:
    """Parameters ``Q_s = q_{kappa_s}`` (``q^k`` if ``q != 1``, else ``k``)."""
    q = field(q)
    if q == field.one:
        Q = [field(k) for k in kappa]
    else:
        Q = [field.pow(q, k) for k in kappa]
    return HeckeParams(field, n, q, Q)


class HeckeAlgebra:
    """The algebra ``H_n(q, Q)`` with memoized rewriting tables."""

    def __init__(self, params: HeckeParams):
        self.params = params
        self.R = params.ring
        self.n = params.n
        self.level = params.level
        self.q = params.q
        self.qm1 = self.R.sub(self.q, self.R.one)
        self.qinv = self.R.inv(self.q)
        self.degenerate = params.degenerate
        self.id = identity_perm(self.n)
        self.zero_a = (0,) * self.n
        self._tmul_cache: Dict[Tuple[Perm, Perm], Dict[Perm, object]] = {}
        self._tl_cache: Dict[Tuple[Perm, int], Dict[Tuple[int, Perm], object]] = {}
        self._reduce_cache: Dict[Tuple[int, ...], Dict[Label, object]] = {}
        self._top_cache: Dict[int, Dict[Label, object]] = {}
        self._rl_cache: Dict[Tuple[Label, int], Dict[Label, object]] = {}
        # elementary symmetric coefficients of prod (X - Q_s)
        R = self.R
        poly = [R.one]
        for Qs in params.Q:
            nxt = [R.zero] * (len(poly) + 1)
            for i, c in enumerate(poly):
                nxt[i + 1] = R.add(nxt[i + 1], c)
                nxt[i] = R.sub(nxt[i], R.mul(c, Qs))
            poly = nxt
        self._cyclo = poly  # low degree first, monic

    # -- elements ----------------------------------------------------------

    def element(self, coeffs: Optional[dict] = None) -> "HeckeElement":
        return HeckeElement(self, coeffs or {})

    def zero(self):
        return HeckeElement(self, {})

    def one(self):
        return HeckeElement(self, {(self.zero_a, self.id): self.R.one})

    def scalar(self, c):
        c = self.R(c)
        if self.R.is_zero(c):
            return self.zero()
        return HeckeElement(self, {(self.zero_a, self.id): c})

    def T(self, i: int):
        if not 1 <= i < self.n:
            raise IndexError(f"T_{i} out of range for n={self.n}")
        return HeckeElement(self, {(self.zero_a, right_mul_simple(self.id, i)): self.R.one})

    def T_perm(self, w: Perm):
        return HeckeElement(self, {(self.zero_a, tuple(w)): self.R.one})

    def L(self, k: int):
        if not 1 <= k <= self.n:
            raise IndexError(f"L_{k} out of range for n={self.n}")
        return self.one().right_L(k)

    def gens(self):
        out = {"1": self.one()}
        for i in range(1, self.n):
            out[f"T{i}"] = self.T(i)
        for k in range(1, self.n + 1):
            out[f"L{k}"] = self.L(k)
        return out

    def basis_labels(self) -> List[Label]:
        perms = sorted(itertools.permutations(range(1, self.n + 1)))
        return [(a, w) for a in itertools.product(range(self.level), repeat=self.n) for w in perms]

    def label_index(self) -> Dict[Label, int]:
        idx = getattr(self, "_label_index", None)
        if idx is None:
            idx = {lab: i for i, lab in enumerate(self.basis_labels())}
            self._label_index = idx
        return idx

    def coords(self, x: "HeckeElement") -> list:
        idx = self.label_index()
        v = [self.R.zero] * len(idx)
        for lab, c in x.c.items():
            v[idx[lab]] = c
        return v

    def from_coords(self, vec) -> "HeckeElement":
        labels = self.basis_labels()
        return HeckeElement(self, {labels[i]: c for i, c in enumerate(vec) if not self.R.is_zero(c)})

    def murphy_pairs(self):
        """All same-shape standard pairs, shapes most dominant first."""
        out = []
        for lam in combin.multipartitions(self.n, self.level):
            tabs = combin.standard_tableaux(lam)
            out.extend((s, t) for s in tabs for t in tabs)
        return out

    @property
    def dim(self) -> int:
        d = self.level ** self.n
        for k in range(2, self.n + 1):
            d *= k
        return d

    # -- permutation part --------------------------------------------------

    def _tw_ti(self, w: Perm, i: int):
        ws = right_mul_simple(w, i)
        if right_ascent(w, i):
            return ((ws, self.R.one),)
        return ((ws, self.q), (w, self.qm1))

    def tmul(self, u: Perm, v: Perm) -> Dict[Perm, object]:
        """``T_u T_v`` as a map on permutations."""
        key = (u, v)
        hit = self._tmul_cache.get(key)
        if hit is not None:
            return hit
        R = self.R
        cur = {u: R.one}
        for i in reduced_word(v):
            nxt: Dict[Perm, object] = {}
            for w, c in cur.items():
                for w2, c2 in self._tw_ti(w, i):
                    _acc(R, nxt, w2, R.mul(c, c2))
            cur = nxt
        self._tmul_cache[key] = cur
        return cur

    def _tl(self, w: Perm, k: int) -> Dict[Tuple[int, Perm], object]:
        """``T_w L_k = sum c L_kk T_u`` with ``kk = 0`` meaning no ``L``."""
        key = (w, k)
        hit = self._tl_cache.get(key)
        if hit is not None:
            return hit
        R = self.R
        out: Dict[Tuple[int, Perm], object] = {}
        if w == self.id:
            out[(k, w)] = R.one
            self._tl_cache[key] = out
            return out
        # peel a right descent: w = w' s_j
        j = next(j for j in range(self.n - 1, 0, -1) if not right_ascent(w, j))
        wp = right_mul_simple(w, j)
        delta = R.one if self.degenerate else R.zero

        def add_L_then_T(kk: int, coeff, with_t: bool):
            # T_{w'} L_kk (T_j if with_t)
            for (k2, u), c in self._tl(wp, kk).items():
                if with_t:
                    for u2, c2 in self._tw_ti(u, j):
                        _acc(R, out, (k2, u2), R.mul(R.mul(coeff, c), c2))
                else:
                    _acc(R, out, (k2, u), R.mul(coeff, c))

        if k != j and k != j + 1:
            add_L_then_T(k, R.one, True)
        elif k == j:
            add_L_then_T(j + 1, R.one, True)
            add_L_then_T(j + 1, R.neg(self.qm1), False)
            if not R.is_zero(delta):
                _acc(R, out, (0, wp), R.neg(delta))
        else:
            add_L_then_T(j, R.one, True)
            add_L_then_T(j + 1, self.qm1, False)
            if not R.is_zero(delta):
                _acc(R, out, (0, wp), delta)
        self._tl_cache[key] = out
        return out

    # -- L part ------------------------------------------------------------

    def _top(self, j: int) -> Dict[Label, object]:
        """Normal form of ``L_j^level``; only ``L_1..L_j`` and ``Sym_j`` occur."""
        hit = self._top_cache.get(j)
        if hit is not None:
            return hit
        R, ell, n = self.R, self.level, self.n
        out: Dict[Label, object] = {}
        if j == 1:
            for m in range(ell):
                a = (m,) + (0,) * (n - 1)
                _acc(R, out, (a, self.id), R.neg(self._cyclo[m]))
            self._top_cache[j] = out
            return out
        s = right_mul_simple(self.id, j - 1)
        prev = self._top(j - 1)
        # T a^m = b^m T - sum_c a^c b^(m-c) (q-1)   (non-degenerate)
        #       = b^m T - sum_c a^c b^(m-1-c)        (degenerate)
        # with a = L_{j-1}, b = L_j, T = T_{j-1}
        tet: Dict[Label, object] = {}
        for (bvec, v), coeff in prev.items():
            m = bvec[j - 2]
            base = list(bvec)
            base[j - 2] = 0
            # b^m T T_v T
            a1 = list(base)
            a1[j - 1] = m
            for u, c in self.tmul(s, v).items():
                for u2, c2 in self._tw_ti(u, j - 1):
                    _acc(R, tet, (tuple(a1), u2), R.mul(coeff, R.mul(c, c2)))
            for c_ in range(m):
                a2 = list(base)
                a2[j - 2] = c_
                if self.degenerate:
                    a2[j - 1] = m - 1 - c_
                    scal = R.neg(coeff)
                else:
                    a2[j - 1] = m - c_
                    scal = R.neg(R.mul(coeff, self.qm1))
                for u, c in self.tmul(v, s).items():
                    _acc(R, tet, (tuple(a2), u), R.mul(scal, c))
        lead = R.one if self.degenerate else self.qinv
        for lab, c in tet.items():
            _acc(R, out, lab, R.mul(lead, c))
        if self.degenerate:
            rng, scal = range(ell), R.one
        else:
            rng, scal = range(1, ell), R.mul(self.qinv, self.qm1)
        for c_ in rng:
            a = [0] * n
            a[j - 2] = c_
            a[j - 1] = (ell - 1 - c_) if self.degenerate else (ell - c_)
            _acc(R, out, (tuple(a), s), scal)
        self._top_cache[j] = out
        return out

    def reduce_L(self, c: Tuple[int, ...]) -> Dict[Label, object]:
        """Normal form of the commuting monomial ``L^c`` (any exponents)."""
        hit = self._reduce_cache.get(c)
        if hit is not None:
            return hit
        R, ell = self.R, self.level
        over = [j for j in range(self.n) if c[j] >= ell]
        if not over:
            out = {(c, self.id): R.one}
            self._reduce_cache[c] = out
            return out
        j = over[-1]
        rest = list(c)
        rest[j] -= ell
        out: Dict[Label, object] = {}
        for (b, v), coeff in self._top(j + 1).items():
            c2 = tuple(x + y for x, y in zip(rest, b))
            for (a2, u2), c3 in self.reduce_L(c2).items():
                cc = R.mul(coeff, c3)
                if v == self.id:
                    _acc(R, out, (a2, u2), cc)
                else:
                    for u3, c4 in self.tmul(u2, v).items():
                        _acc(R, out, (a2, u3), R.mul(cc, c4))
        self._reduce_cache[c] = out
        return out

    def _right_L_label(self, label: Label, k: int) -> Dict[Label, object]:
        key = (label, k)
        hit = self._rl_cache.get(key)
        if hit is not None:
            return hit
        R, ell = self.R, self.level
        a, w = label
        out: Dict[Label, object] = {}
        for (kk, u), c in self._tl(w, k).items():
            if kk == 0:
                _acc(R, out, (a, u), c)
                continue
            a2 = list(a)
            a2[kk - 1] += 1
            a2 = tuple(a2)
            if a2[kk - 1] < ell:
                _acc(R, out, (a2, u), c)
                continue
            for (a3, u3), c3 in self.reduce_L(a2).items():
                cc = R.mul(c, c3)
                if u == self.id:
                    _acc(R, out, (a3, u3), cc)
                else:
                    for u4, c4 in self.tmul(u3, u).items():
                        _acc(R, out, (a3, u4), R.mul(cc, c4))
        self._rl_cache[key] = out
        return out

    # -- right multiplication of raw coefficient maps -----------------------

    def _rmul_T(self, x: dict, i: int) -> dict:
        R = self.R
        out: dict = {}
        for (a, w), c in x.items():
            for w2, c2 in self._tw_ti(w, i):
                _acc(R, out, (a, w2), R.mul(c, c2))
        return out

    def _rmul_L(self, x: dict, k: int) -> dict:
        R = self.R
        out: dict = {}
        for lab, c in x.items():
            for lab2, c2 in self._right_L_label(lab, k).items():
                _acc(R, out, lab2, R.mul(c, c2))
        return out

    def _rmul_word(self, x: dict, word: Iterable[int]) -> dict:
        for i in word:
            x = self._rmul_T(x, i)
        return x

    def _rmul_Lpoly(self, x: dict, k: int, coeffs: Sequence) -> dict:
        """``x * f(L_k)`` with ``f`` given low degree first (Horner)."""
        R = self.R
        acc: dict = {}
        for c in reversed(list(coeffs)):
            if acc:
                acc = self._rmul_L(acc, k)
            if not R.is_zero(c):
                for lab, v in x.items():
                    _acc(R, acc, lab, R.mul(v, c))
        return acc

    def _scale(self, x: dict, c) -> dict:
        R = self.R
        if R.is_zero(c):
            return {}
        out = {}
        for lab, v in x.items():
            p = R.mul(v, c)
            if not R.is_zero(p):
                out[lab] = p
        return out

    def _add(self, x: dict, y: dict, c=None) -> dict:
        R = self.R
        out = dict(x)
        for lab, v in y.items():
            _acc(R, out, lab, v if c is None else R.mul(v, c))
        return out

    def mul_raw(self, x: dict, y: dict) -> dict:
        R = self.R
        if not x or not y:
            return {}
        groups: Dict[Tuple[int, ...], Dict[Perm, object]] = {}
        for (b, v), c in y.items():
            groups.setdefault(b, {})[v] = c
        out: dict = {}
        for b, vs in groups.items():
            xb = x
            for k in range(self.n):
                for _ in range(b[k]):
                    xb = self._rmul_L(xb, k + 1)
            # share prefixes of reduced words
            memo: Dict[Tuple[int, ...], dict] = {(): xb}
            for v, c in sorted(vs.items(), key=lambda kv: reduced_word(kv[0])):
                word = reduced_word(v)
                start = len(word)
                while word[:start] not in memo:
                    start -= 1
                cur = memo[word[:start]]
                for m in range(start, len(word)):
                    cur = self._rmul_T(cur, word[m])
                    memo[word[: m + 1]] = cur
                for lab, val in cur.items():
                    _acc(R, out, lab, R.mul(val, c))
        return out

    def mul(self, x: "HeckeElement", y: "HeckeElement") -> "HeckeElement":
        if x.alg is not self or y.alg is not self:
            raise ValueError("parameter mismatch")
        return HeckeElement(self, self.mul_raw(x.c, y.c))

    # -- Murphy bases ------------------------------------------------------

    def Q_of(self, s: int):
        return self.params.Q[s - 1]

    def _young_sum(self, lam: Multipartition, signed: bool) -> dict:
        R = self.R
        blocks = []
        start = 1
        for part in lam:
            for row in part:
                blocks.append(list(range(start, start + row)))
                start += row
        out: dict = {}
        choices = [list(itertools.permutations(b)) for b in blocks]
        for pick in itertools.product(*choices):
            w = [0] * self.n
            for b, img in zip(blocks, pick):
                for src, dst in zip(b, img):
                    w[src - 1] = dst
            w = tuple(w)
            if signed:
                coeff = R.pow(R.neg(self.qinv), perm_length(w))
            else:
                coeff = R.one
            _acc(R, out, (self.zero_a, w), coeff)
        return out

    def _L_factor_product(self, factors: Iterable[Tuple[int, object]]) -> dict:
        """``prod (L_k - c)`` as a raw element."""
        R = self.R
        x = {(self.zero_a, self.id): R.one}
        for k, c in factors:
            x = self._rmul_Lpoly(x, k, (R.neg(c), R.one))
        return x

    def m_lambda(self, lam: Multipartition) -> "HeckeElement":
        sizes = [sum(p) for p in lam]
        factors = []
        for s in range(2, self.level + 1):
            for k in range(1, sum(sizes[: s - 1]) + 1):
                factors.append((k, self.Q_of(s)))
        return HeckeElement(self, self.mul_raw(self._L_factor_product(factors), self._young_sum(lam, False)))

    def n_lambda(self, lam: Multipartition) -> "HeckeElement":
        sizes = [sum(p) for p in lam]
        factors = []
        for s in range(1, self.level):
            for k in range(1, sum(sizes[: self.level - s]) + 1):
                factors.append((k, self.Q_of(s)))
        return HeckeElement(self, self.mul_raw(self._L_factor_product(factors), self._young_sum(lam, True)))

    def _sandwich(self, s: StandardTableau, core: dict, t: StandardTableau) -> dict:
        left = {(self.zero_a, perm_inverse(d_perm(s))): self.R.one}
        x = self.mul_raw(left, core)
        return self._rmul_word(x, reduced_word(d_perm(t)))

    def m_st(self, s: StandardTableau, t: StandardTableau) -> "HeckeElement":
        if s.shape != t.shape:
            raise ValueError("shape mismatch")
        return HeckeElement(self, self._sandwich(s, self.m_lambda(s.shape).c, t))

    def n_st(self, s: StandardTableau, t: StandardTableau) -> "HeckeElement":
        if s.shape != t.shape:
            raise ValueError("shape mismatch")
        R = self.R
        scale = R.pow(R.neg(self.qinv), perm_length(d_perm(s)) + perm_length(d_perm(t)))
        x = self._sandwich(s, self.n_lambda(s.shape).c, t)
        return HeckeElement(self, self._scale(x, scale))

    def murphy_star(self, x: "HeckeElement") -> "HeckeElement":
        """Anti-automorphism fixing every ``T_i`` and ``L_k``."""
        R = self.R
        out: dict = {}
        for (a, w), c in x.c.items():
            y = {(self.zero_a, perm_inverse(w)): c}
            for k in range(self.n):
                for _ in range(a[k]):
                    y = self._rmul_L(y, k + 1)
            for lab, v in y.items():
                _acc(R, out, lab, v)
        return HeckeElement(self, out)

    def tau(self, x: "HeckeElement"):
        if self.degenerate:
            a = (self.level - 1,) * self.n
        else:
            a = self.zero_a
        return x.c.get((a, self.id), self.R.zero)


class HeckeElement:
    """A finitely supported map ``(a, w) -> coefficient``."""

    __slots__ = ("alg", "c")

    def __init__(self, alg: HeckeAlgebra, coeffs: dict):
        self.alg = alg
        self.c = coeffs

    def _lift(self, other):
        if isinstance(other, HeckeElement):
            if other.alg is not self.alg:
                raise ValueError("parameter mismatch")
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        return HeckeElement(self.alg, self.alg._add(self.c, other.c))

    __radd__ = __add__

    def __neg__(self):
        R = self.alg.R
        return HeckeElement(self.alg, {k: R.neg(v) for k, v in self.c.items()})

    def __sub__(self, other):
        other = self._lift(other)
        return HeckeElement(self.alg, self.alg._add(self.c, other.c, self.alg.R.neg(self.alg.R.one)))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return self.alg.mul(self, other)
        return HeckeElement(self.alg, self.alg._scale(self.c, self.alg.R(other)))

    def __rmul__(self, other):
        # scalars commute with everything
        return HeckeElement(self.alg, self.alg._scale(self.c, self.alg.R(other)))

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            return self.alg is other.alg and self.c == other.c
        if other == 0:
            return not self.c
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    def __len__(self):
        return len(self.c)

    def coeff(self, a, w):
        return self.c.get((tuple(a), tuple(w)), self.alg.R.zero)

    def right_T(self, i: int):
        return HeckeElement(self.alg, self.alg._rmul_T(self.c, i))

    def right_L(self, k: int):
        return HeckeElement(self.alg, self.alg._rmul_L(self.c, k))

    def right_word(self, word):
        return HeckeElement(self.alg, self.alg._rmul_word(self.c, word))

    def right_Lpoly(self, k: int, coeffs):
        return HeckeElement(self.alg, self.alg._rmul_Lpoly(self.c, k, [self.alg.R(c) for c in coeffs]))

    def items(self):
        return sorted(self.c.items())

    def to_json(self):
        R = self.alg.R
        return [{"a": list(a), "w": list(w), "c": R.fmt(c)} for (a, w), c in sorted(self.c.items())]

    def __repr__(self):
        if not self.c:
            return "0"
        R = self.alg.R
        terms = []
        for (a, w), c in sorted(self.c.items()):
            mono = "".join(f"L{k + 1}^{e}" if e > 1 else f"L{k + 1}" for k, e in enumerate(a) if e)
            if w != self.alg.id:
                mono += "T" + "".join(str(i) for i in reduced_word(w))
            terms.append(f"{R.fmt(c)}*{mono or '1'}")
        return " + ".join(terms)


# ---------------------------------------------------------------------------
# semisimplicity


def poincare_product(params: HeckeParams):
    """``P_H`` (without the ``e``-condition)."""
    R, n, q = params.ring, params.n, params.q
    out = R.one
    Q = params.Q
    for r in range(len(Q)):
        for s in range(r + 1, len(Q)):
            for d in range(-n + 1, n):
                if params.degenerate:
                    term = R.sub(R.add(R(d), Q[r]), Q[s])
                else:
                    term = R.sub(R.mul(R.pow(q, d), Q[r]), Q[s])
                out = R.mul(out, term)
    return out


def quantum_char_of(params: HeckeParams) -> int:
    R, q = params.ring, params.q
    if isinstance(R, LocalizedPolyRing):
        c = R.constant_value(q)
        if c is None:
            return 0
        return quantum_characteristic(R.base, c)
    if isinstance(R, RatFunField):
        if not q.is_constant():
            return 0
        return quantum_characteristic(R.base, q.constant_value())
    if params.degenerate and R.characteristic == 0:
        # degenerate algebra over a field of characteristic 0
        return 0
    return quantum_characteristic(R, q)


def is_semisimple(params: HeckeParams) -> bool:
    e = quantum_char_of(params)
    if not (e == 0 or e > params.n):
        return False
    return not params.ring.is_zero(poincare_product(params))
