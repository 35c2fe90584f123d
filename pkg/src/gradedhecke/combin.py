"""Tableau combinatorics for cyclotomic Hecke algebras.

Conventions
-----------
* A multipartition is a tuple of partitions, each a tuple of positive parts.
* A node is ``(r, c, l)``: row, column, component, all 1-based.
* A standard tableau stores, per component, its rows of entries.
* Permutations are one-line tuples acting on the right of ``{1..n}``:
  ``w[k-1] = k.w`` and ``(uv)[k-1] = v[u[k-1]-1]``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .scalars import Field, Laurent, LocalizedPolyRing, RationalField, PrimeField

Partition = Tuple[int, ...]
Multipartition = Tuple[Partition, ...]
Node = Tuple[int, int, int]


# ---------------------------------------------------------------------------
# quiver data


@dataclass(frozen=True)
class QuiverData:
    """Quantum characteristic ``e`` and multicharge ``kappa``."""

    e: int
    kappa: Tuple[int, ...]

    def __post_init__(self):
        if self.e < 0 or self.e == 1:
            raise ValueError("e must be 0 or at least 2")
        if not self.kappa:
            raise ValueError("the multicharge must be non-empty")
        object.__setattr__(self, "kappa", tuple(int(k) for k in self.kappa))

    @property
    def level(self) -> int:
        return len(self.kappa)

    def res(self, i: int) -> int:
        """Canonical representative of a residue."""
        return i % self.e if self.e else i

    def res_eq(self, i: int, j: int) -> bool:
        return self.res(i) == self.res(j)

    def node_residue(self, node: Node) -> int:
        r, c, l = node
        return self.res(c - r + self.kappa[l - 1])

    def cartan(self, i: int, j: int) -> int:
        i, j = self.res(i), self.res(j)
        if i == j:
            return 2
        if self.e == 2:
            return -2
        if self.res_eq(i, j + 1) or self.res_eq(i, j - 1):
            return -1
        return 0

    def lam_alpha(self, i: int) -> int:
        """``(Lambda, alpha_i)``."""
        return sum(1 for k in self.kappa if self.res_eq(k, i))

    def vertices(self) -> List[int]:
        if self.e:
            return list(range(self.e))
        return sorted({self.res(k) for k in self.kappa})

    def is_edge_up(self, i: int, j: int) -> bool:
        """``j = i + 1`` in the quiver."""
        return self.res_eq(j, i + 1)


# ---------------------------------------------------------------------------
# multipartitions


def partitions(n: int) -> List[Partition]:
    """Partitions of ``n``, lexicographically decreasing."""
    out: List[Partition] = []

    def rec(rest, bound, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(rest, bound), 0, -1):
            prefix.append(part)
            rec(rest - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out


def size(lam: Multipartition) -> int:
    return sum(sum(p) for p in lam)


def partial_sums(lam: Multipartition, n: Optional[int] = None) -> Tuple[int, ...]:
    """Cumulative sums used by dominance, padded to ``n`` rows per component."""
    if n is None:
        n = size(lam)
    out = []
    before = 0
    for part in lam:
        acc = before
        for j in range(n):
            if j < len(part):
                acc += part[j]
            out.append(acc)
        before += sum(part)
    return tuple(out)


def mp_key(lam: Multipartition, n: Optional[int] = None):
    """Sort key: more dominant multipartitions come first."""
    return tuple(-x for x in partial_sums(lam, n))


def multipartitions(n: int, level: int) -> List[Multipartition]:
    if n < 0 or level < 1:
        raise ValueError("need n >= 0 and level >= 1")
    return list(_multipartitions(n, level))


@functools.lru_cache(maxsize=None)
def _multipartitions(n: int, level: int) -> Tuple[Multipartition, ...]:
    found = []
    for sizes in itertools.product(range(n + 1), repeat=level):
        if sum(sizes) != n:
            continue
        for parts in itertools.product(*(partitions(s) for s in sizes)):
            found.append(tuple(parts))
    found.sort(key=lambda lam: mp_key(lam, n))
    return tuple(found)


def dominates(lam: Multipartition, mu: Multipartition) -> bool:
    """``lam`` dominates-or-equals ``mu``."""
    n = max(size(lam), size(mu))
    a, b = partial_sums(lam, n), partial_sums(mu, n)
    return all(x >= y for x, y in zip(a, b))


def nodes(lam: Multipartition) -> List[Node]:
    return [
        (r + 1, c + 1, l + 1)
        for l, part in enumerate(lam)
        for r, row in enumerate(part)
        for c in range(row)
    ]


def addable_nodes(lam: Multipartition) -> List[Node]:
    out = []
    for l, part in enumerate(lam):
        for r in range(len(part) + 1):
            row = part[r] if r < len(part) else 0
            if r == 0 or part[r - 1] > row:
                out.append((r + 1, row + 1, l + 1))
    return out


def removable_nodes(lam: Multipartition) -> List[Node]:
    out = []
    for l, part in enumerate(lam):
        for r, row in enumerate(part):
            below = part[r + 1] if r + 1 < len(part) else 0
            if row > below:
                out.append((r + 1, row, l + 1))
    return out


def add_node(lam: Multipartition, node: Node) -> Multipartition:
    r, c, l = node
    part = list(lam[l - 1])
    if r - 1 == len(part):
        part.append(1)
    else:
        part[r - 1] += 1
    return lam[: l - 1] + (tuple(part),) + lam[l:]


def remove_node(lam: Multipartition, node: Node) -> Multipartition:
    r, c, l = node
    part = list(lam[l - 1])
    part[r - 1] -= 1
    if part[r - 1] == 0:
        part.pop()
    return lam[: l - 1] + (tuple(part),) + lam[l:]


def conjugate_partition(part: Partition) -> Partition:
    if not part:
        return ()
    return tuple(sum(1 for p in part if p > c) for c in range(part[0]))


def conjugate(lam: Multipartition) -> Multipartition:
    return tuple(conjugate_partition(p) for p in reversed(lam))


def is_below(a: Node, b: Node) -> bool:
    """``a`` is below ``b``: later component, or same component and lower row."""
    return a[2] > b[2] or (a[2] == b[2] and a[0] > b[0])


def is_above(a: Node, b: Node) -> bool:
    return is_below(b, a)


def shape_str(lam: Multipartition) -> str:
    return "|".join(",".join(str(p) for p in part) for part in lam)


def parse_shape(s: str) -> Multipartition:
    comps = s.split("|")
    return tuple(tuple(int(x) for x in c.split(",") if x.strip()) for c in comps)


# ---------------------------------------------------------------------------
# permutations


Perm = Tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_mul(u: Perm, v: Perm) -> Perm:
    return tuple(v[x - 1] for x in u)


def perm_inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = i + 1
    return tuple(out)


def perm_length(w: Perm) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def perm_from_word(word: Sequence[int], n: int) -> Perm:
    w = identity_perm(n)
    for i in word:
        w = right_mul_simple(w, i)
    return w


def right_mul_simple(w: Perm, i: int) -> Perm:
    """``w s_i``: swap the values ``i`` and ``i+1``."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def left_mul_simple(w: Perm, i: int) -> Perm:
    """``s_i w``: swap positions ``i`` and ``i+1``."""
    w = list(w)
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def right_ascent(w: Perm, i: int) -> bool:
    """``l(w s_i) > l(w)``: value ``i`` sits left of value ``i+1``."""
    return w.index(i) < w.index(i + 1)


def reduced_word(w: Perm) -> Tuple[int, ...]:
    """Lexicographically smallest reduced word (greedy smallest left descent)."""
    word = []
    w = tuple(w)
    while True:
        for i in range(1, len(w)):
            if w[i - 1] > w[i]:
                word.append(i)
                w = left_mul_simple(w, i)
                break
        else:
            return tuple(word)


def is_reduced_word_for(word: Sequence[int], w: Perm) -> bool:
    return len(word) == perm_length(w) and perm_from_word(word, len(w)) == tuple(w)


# ---------------------------------------------------------------------------
# standard tableaux


class StandardTableau:
    """A standard multitableau stored row by row, component by component."""

    __slots__ = ("rows", "shape", "n", "_pos", "_chain", "_hash")

    def __init__(self, rows):
        self.rows = tuple(tuple(tuple(int(x) for x in row) for row in comp) for comp in rows)
        self.shape: Multipartition = tuple(tuple(len(row) for row in comp) for comp in self.rows)
        self.n = size(self.shape)
        pos = {}
        for l, comp in enumerate(self.rows):
            for r, row in enumerate(comp):
                for c, x in enumerate(row):
                    pos[x] = (r + 1, c + 1, l + 1)
        if sorted(pos) != list(range(1, self.n + 1)):
            raise ValueError(f"entries of {self.rows} are not 1..n")
        for (r, c, l), x in ((v, k) for k, v in pos.items()):
            comp = self.rows[l - 1]
            if c > 1 and comp[r - 1][c - 2] > x:
                raise ValueError(f"{self.rows} is not standard")
            if r > 1 and comp[r - 2][c - 1] > x:
                raise ValueError(f"{self.rows} is not standard")
        self._pos = pos
        self._chain = None
        self._hash = hash(self.rows)

    def __eq__(self, other):
        return isinstance(other, StandardTableau) and self.rows == other.rows

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"StandardTableau({self.rows})"

    def __str__(self):
        return "(" + ", ".join("/".join("".join(str(x) if x < 10 else f"[{x}]" for x in row)
                                        for row in comp) or "-" for comp in self.rows) + ")"

    def node(self, k: int) -> Node:
        """``t^{-1}(k)``."""
        return self._pos[k]

    def entry(self, node: Node) -> int:
        r, c, l = node
        return self.rows[l - 1][r - 1][c - 1]

    def shape_chain(self) -> Tuple[Multipartition, ...]:
        """``(Shape(t|0), Shape(t|1), ..., Shape(t|n))``."""
        if self._chain is None:
            level = len(self.shape)
            lam: Multipartition = tuple(() for _ in range(level))
            chain = [lam]
            for k in range(1, self.n + 1):
                lam = add_node(lam, self._pos[k])
                chain.append(lam)
            self._chain = tuple(chain)
        return self._chain

    def restrict(self, k: int) -> "StandardTableau":
        rows = tuple(
            tuple(row for row in (tuple(x for x in row if x <= k) for row in comp) if row)
            for comp in self.rows
        )
        return StandardTableau(rows)

    def to_json(self):
        return [[list(row) for row in comp] for comp in self.rows]


def tableau_key(t: StandardTableau):
    """Sort key refining tableau dominance, most dominant first."""
    chain = t.shape_chain()
    return tuple(mp_key(chain[k], t.n) for k in range(t.n, 0, -1))


def tableau_dominates(s: StandardTableau, t: StandardTableau) -> bool:
    """``s`` dominates-or-equals ``t``."""
    cs, ct = s.shape_chain(), t.shape_chain()
    return all(dominates(a, b) for a, b in zip(cs, ct))


def pair_dominates(a, b) -> bool:
    """Strict pair dominance ``(u, v) > (s, t)`` for ``a = (u, v)``, ``b = (s, t)``."""
    u, v = a
    s, t = b
    if (u, v) == (s, t):
        return False
    if u.shape != s.shape:
        return dominates(u.shape, s.shape)
    return tableau_dominates(u, s) and tableau_dominates(v, t)


def pair_dominates_eq(a, b) -> bool:
    return tuple(a) == tuple(b) or pair_dominates(a, b)


@functools.lru_cache(maxsize=None)
def _standard_tableaux(lam: Multipartition) -> Tuple[StandardTableau, ...]:
    n = size(lam)
    fillings: List[Dict[Node, int]] = []

    def rec(mu, k, filling):
        if k == 0:
            fillings.append(dict(filling))
            return
        for node in removable_nodes(mu):
            filling[node] = k
            rec(remove_node(mu, node), k - 1, filling)
            del filling[node]

    rec(lam, n, {})
    out = []
    for filling in fillings:
        rows = tuple(
            tuple(tuple(filling[(r + 1, c + 1, l + 1)] for c in range(row)) for r, row in enumerate(part))
            for l, part in enumerate(lam)
        )
        out.append(StandardTableau(rows))
    out.sort(key=tableau_key)
    return tuple(out)


def standard_tableaux(lam: Multipartition) -> List[StandardTableau]:
    return list(_standard_tableaux(tuple(tuple(p) for p in lam)))


def initial_tableau(lam: Multipartition) -> StandardTableau:
    """``t^lam``: 1..n along rows, component by component."""
    k = itertools.count(1)
    return StandardTableau(tuple(tuple(tuple(next(k) for _ in range(row)) for row in part) for part in lam))


def conjugate_tableau(t: StandardTableau) -> StandardTableau:
    """``t'(r, c, l) = t(c, r, level - l + 1)``."""
    out = []
    for comp in reversed(t.rows):
        if not comp:
            out.append(())
            continue
        out.append(tuple(tuple(comp[r][c] for r in range(len(comp)) if len(comp[r]) > c)
                         for c in range(len(comp[0]))))
    return StandardTableau(tuple(out))


def t_lambda(lam: Multipartition) -> StandardTableau:
    """``t_lam = (t^{lam'})'``."""
    return conjugate_tableau(initial_tableau(conjugate(lam)))


def d_perm(t: StandardTableau) -> Perm:
    """``d(t)`` with ``t = t^lam d(t)``."""
    base = initial_tableau(t.shape)
    return tuple(t.entry(base.node(k)) for k in range(1, t.n + 1))


def d_word(t: StandardTableau) -> Tuple[int, ...]:
    return reduced_word(d_perm(t))


def w_lambda(lam: Multipartition) -> Perm:
    return d_perm(t_lambda(lam))


def act(t: StandardTableau, w: Perm) -> StandardTableau:
    """Right action ``t.w`` (replace each entry k by k.w); may be non-standard."""
    return StandardTableau(tuple(tuple(tuple(w[x - 1] for x in row) for row in comp) for comp in t.rows))


def all_tableaux(n: int, level: int) -> List[StandardTableau]:
    return [t for lam in multipartitions(n, level) for t in standard_tableaux(lam)]


# ---------------------------------------------------------------------------
# residues, degrees, defect


def residue_sequence(t: StandardTableau, Q: QuiverData) -> Tuple[int, ...]:
    return tuple(Q.node_residue(t.node(k)) for k in range(1, t.n + 1))


def std_of_residue(i: Sequence[int], level: int, Q: QuiverData) -> List[StandardTableau]:
    """All standard tableaux (any shape of size ``len(i)``) with residue sequence ``i``."""
    i = tuple(Q.res(x) for x in i)
    return list(_std_of_residue(i, level, Q))


@functools.lru_cache(maxsize=None)
def _std_of_residue(i, level, Q) -> Tuple[StandardTableau, ...]:
    n = len(i)
    # grow shapes one residue at a time
    states = [((tuple(() for _ in range(level))), ())]
    for k in range(n):
        nxt = []
        for lam, placed in states:
            for node in addable_nodes(lam):
                if Q.node_residue(node) == i[k]:
                    nxt.append((add_node(lam, node), placed + (node,)))
        states = nxt
    out = []
    for lam, placed in states:
        filling = {node: k + 1 for k, node in enumerate(placed)}
        rows = tuple(
            tuple(tuple(filling[(r + 1, c + 1, l + 1)] for c in range(row)) for r, row in enumerate(part))
            for l, part in enumerate(lam)
        )
        out.append(StandardTableau(rows))
    out.sort(key=lambda t: (mp_key(t.shape, n), tableau_key(t)))
    return tuple(out)


def residue_sequences(n: int, level: int, Q: QuiverData) -> List[Tuple[int, ...]]:
    """Residue sequences of standard tableaux of size ``n``, sorted."""
    return sorted({residue_sequence(t, Q) for t in all_tableaux(n, level)})


class NodeSets(NamedTuple):
    A: Tuple[Node, ...]
    R: Tuple[Node, ...]
    A_above: Tuple[Node, ...]
    R_above: Tuple[Node, ...]
    Add: Tuple[Node, ...]
    Rem: Tuple[Node, ...]
    Add_above: Tuple[Node, ...]
    Rem_above: Tuple[Node, ...]


def node_sets(t: StandardTableau, k: int, Q: QuiverData) -> NodeSets:
    lam = t.shape_chain()[k]
    here = t.node(k)
    res = Q.node_residue(here)
    add, rem = addable_nodes(lam), removable_nodes(lam)
    A = tuple(a for a in add if is_below(a, here))
    R = tuple(a for a in rem if is_below(a, here))
    Ap = tuple(a for a in add if is_above(a, here))
    Rp = tuple(a for a in rem if is_above(a, here))

    def same(nodes_):
        return tuple(a for a in nodes_ if Q.node_residue(a) == res)

    return NodeSets(A, R, Ap, Rp, same(A), same(R), same(Ap), same(Rp))


def degree(t: StandardTableau, Q: QuiverData) -> int:
    total = 0
    for k in range(1, t.n + 1):
        ns = node_sets(t, k, Q)
        total += len(ns.Add) - len(ns.Rem)
    return total


def codegree_above(t: StandardTableau, Q: QuiverData) -> int:
    """Codegree counted directly with the "above" node sets."""
    total = 0
    for k in range(1, t.n + 1):
        ns = node_sets(t, k, Q)
        total += len(ns.Add_above) - len(ns.Rem_above)
    return total


def codegree(t: StandardTableau, Q: QuiverData) -> int:
    return degree(conjugate_tableau(t), Q)


RootVector = Tuple[Tuple[int, int], ...]


def block_of(i: Sequence[int], Q: QuiverData) -> RootVector:
    counts: Dict[int, int] = {}
    for x in i:
        x = Q.res(x)
        counts[x] = counts.get(x, 0) + 1
    return tuple(sorted(counts.items()))


def root_str(beta: RootVector) -> str:
    return " + ".join(f"{c}*a{i}" if c != 1 else f"a{i}" for i, c in beta) or "0"


def defect(beta: RootVector, Q: QuiverData) -> int:
    lam_beta = sum(c * Q.lam_alpha(i) for i, c in beta)
    beta_beta = sum(ci * cj * Q.cartan(i, j) for i, ci in beta for j, cj in beta)
    assert beta_beta % 2 == 0
    return lam_beta - beta_beta // 2


def shape_block(lam: Multipartition, Q: QuiverData) -> RootVector:
    return block_of([Q.node_residue(a) for a in nodes(lam)], Q)


def blocks(n: int, level: int, Q: QuiverData) -> List[Tuple[RootVector, List[Multipartition]]]:
    found: Dict[RootVector, List[Multipartition]] = {}
    for lam in multipartitions(n, level):
        found.setdefault(shape_block(lam, Q), []).append(lam)
    return sorted(found.items(), key=lambda kv: mp_key(kv[1][0], n))


def graded_dim(lam: Multipartition, Q: QuiverData) -> Laurent:
    """Graded dimension of the Specht module: sum of ``t^deg``."""
    out: Dict[int, int] = {}
    for t in standard_tableaux(lam):
        d = degree(t, Q)
        out[d] = out.get(d, 0) + 1
    return Laurent(out)


def graded_dim_algebra(n: int, level: int, Q: QuiverData, beta: Optional[RootVector] = None) -> Laurent:
    total = Laurent()
    for lam in multipartitions(n, level):
        if beta is not None and shape_block(lam, Q) != beta:
            continue
        g = graded_dim(lam, Q)
        total = total + g * g
    return total


# ---------------------------------------------------------------------------
# positive tableaux


def is_positive(s: StandardTableau, Q: QuiverData) -> bool:
    i = residue_sequence(s, Q)
    level = len(s.shape)
    for k in range(1, s.n + 1):
        ns = node_sets(s, k, Q)
        if ns.Rem:
            return False
    for k in range(1, s.n + 1):
        ns = node_sets(s, k, Q)
        if not ns.Add:
            continue
        here = s.node(k)
        s_prev = s.restrict(k - 1)
        for t in std_of_residue(i[: k - 1], level, Q):
            if not tableau_dominates(t, s_prev):
                continue
            for alpha in addable_nodes(t.shape):
                if Q.node_residue(alpha) != i[k - 1] or not is_below(alpha, here):
                    continue
                if alpha not in ns.Add:
                    return False
    return True


def positive_exponents(s: StandardTableau, Q: QuiverData) -> Tuple[int, ...]:
    return tuple(len(node_sets(s, k, Q).Add) for k in range(1, s.n + 1))


def tableau_from_rows(*comps: str) -> StandardTableau:
    """Build a tableau from strings like ``"123/45"``; ``"-"`` is an empty component."""
    out = []
    for comp in comps:
        if comp in ("", "-"):
            out.append(())
            continue
        out.append(tuple(tuple(int(ch) for ch in row) for row in comp.split("/")))
    return StandardTableau(tuple(out))


# ---------------------------------------------------------------------------
# contents and gamma coefficients over the lift


@functools.lru_cache(maxsize=None)
def lift_ring(base: Field, q, e: int):
    """Coefficient ring of the lifted algebra.

    ``K[x][1/(x+q)]`` when ``q != 1``; the rationals (as a stand-in for the
    ``p``-local integers) in the degenerate case.
    """
    q = base(q)
    if q == base.one:
        return RationalField()
    if e > 0:
        return LocalizedPolyRing(base, base.neg(q))
    return LocalizedPolyRing(base, None)


def _is_degenerate(base: Field, q) -> bool:
    return base(q) == base.one


def lift_v(base: Field, q, e: int):
    ring = lift_ring(base, q, e)
    if _is_degenerate(base, q):
        return ring.one
    if e > 0:
        return ring.d_power(1)
    return ring(q)


def content(node: Node, Q: QuiverData, base: Field, q):
    """The lifted content of a node, an element of ``lift_ring``."""
    r, c, l = node
    ring = lift_ring(base, q, Q.e)
    kap = Q.kappa[l - 1]
    if _is_degenerate(base, q):
        if Q.e > 0:
            return ring(c - r + kap)
        raise ValueError("q = 1 requires positive characteristic")
    qq = base(q)
    if Q.e > 0:
        return ring.d_power(c - r + kap)
    # q^(c-r) (x^l + q^kappa)
    scale = base.pow(qq, c - r)
    coeffs = [base.zero] * (l + 1)
    coeffs[0] = base.mul(scale, base.pow(qq, kap))
    coeffs[l] = base.add(coeffs[l], scale)
    return ring.poly(coeffs)


def content_seq(t: StandardTableau, Q: QuiverData, base: Field, q) -> list:
    return [content(t.node(k), Q, base, q) for k in range(1, t.n + 1)]


def _to_field(ring, a):
    if isinstance(ring, LocalizedPolyRing):
        return ring.to_ratfun(a)
    return a


def lift_field(base: Field, q, e: int):
    ring = lift_ring(base, q, e)
    if isinstance(ring, LocalizedPolyRing):
        return ring.fraction_field
    return ring


def _diag_below(a: Node, b: Node) -> bool:
    """``a`` lies in a later component, or the same one on a lower diagonal."""
    return a[2] > b[2] or (a[2] == b[2] and a[1] - a[0] < b[1] - b[0])


def _diag_above(a: Node, b: Node) -> bool:
    return a != b and not _diag_below(a, b)


def gamma_sets(t: StandardTableau, k: int, rel=_diag_below) -> Tuple[List[Node], List[Node]]:
    """Addable and removable nodes of ``Shape(t|k-1)`` related to ``t^-1(k)``."""
    lam = t.shape_chain()[k - 1]
    here = t.node(k)
    A = [a for a in addable_nodes(lam) if a != here and rel(a, here)]
    R = [a for a in removable_nodes(lam) if rel(a, here)]
    return A, R


def _v_exponent(t: StandardTableau) -> int:
    return perm_length(d_perm(t)) + sum((p - 1) * p for part in t.shape for p in part) // 2


def _gamma_product(t, Q, base, q, rel, vexp):
    ring = lift_ring(base, q, Q.e)
    fld = lift_field(base, q, Q.e)
    v = _to_field(ring, lift_v(base, q, Q.e))
    out = fld.pow(v, vexp) if not fld.is_zero(v) else fld.one
    for k in range(1, t.n + 1):
        ck = content(t.node(k), Q, base, q)
        A, R = gamma_sets(t, k, rel)
        for a in A:
            diff = _to_field(ring, ring.sub(ck, content(a, Q, base, q)))
            if fld.is_zero(diff):
                raise ArithmeticError(f"zero factor in gamma for {t} at k={k}")
            out = fld.mul(out, diff)
        for a in R:
            diff = _to_field(ring, ring.sub(ck, content(a, Q, base, q)))
            if fld.is_zero(diff):
                raise ArithmeticError(f"zero denominator in gamma for {t} at k={k}")
            out = fld.div(out, diff)
    return out


def gamma(t: StandardTableau, Q: QuiverData, base: Field, q):
    """Scalar with ``f_tt f_tt = gamma_t f_tt``."""
    return _gamma_product(t, Q, base, q, _diag_below, _v_exponent(t))


def gamma_prime(t: StandardTableau, Q: QuiverData, base: Field, q):
    """Scalar with ``f'_tt f'_tt = gamma'_t f'_tt``."""
    tc = conjugate_tableau(t)
    return _gamma_product(tc, Q, base, q, _diag_above, -_v_exponent(t))
