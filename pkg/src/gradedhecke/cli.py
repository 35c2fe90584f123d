"""Command line front end.

Every subcommand builds a payload (JSON-ready dict), a list of tables for
CSV/LaTeX output, and a check report. The exit code is 0 when every check
passes, 1 on a failed identity and 2 on an invalid configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import combin
from .combin import QuiverData
from .scalars import Field, make_field, quantum_characteristic

DEFAULTS = {2: ("5", "4"), 3: ("7", "2"), 4: ("5", "2"), 0: ("rational", "2")}
FORMATS = ("json", "csv", "latex")


class ConfigError(ValueError):
    """Invalid run configuration (exit code 2)."""


@dataclass
class Table:
    title: str
    header: List[str]
    rows: List[List[str]]


@dataclass
class Result:
    payload: dict
    tables: List[Table] = dc_field(default_factory=list)
    failures: List[dict] = dc_field(default_factory=list)

    def check(self, name: str, ok: bool, **where):
        self.payload.setdefault("checks", []).append({"check": name, "pass": bool(ok), **where})
        if not ok:
            self.failures.append({"check": name, **where})

    def merge(self, report, label: str):
        summary = report.summary()
        self.payload.setdefault("reports", {})[label] = {k: {"pass": p, "fail": f} for k, (p, f) in summary.items()}
        for f in report.failures():
            self.failures.append({"check": f.get("relation", label), **{k: _plain(v) for k, v in f.items() if k != "relation"}})


@dataclass
class RunConfig:
    n: int
    e: int
    kappa: Tuple[int, ...]
    field: Field
    q: object
    degenerate: bool
    fmt: str
    out: Optional[str]
    max_dim: int

    @property
    def quiver(self) -> QuiverData:
        return QuiverData(self.e, self.kappa)

    @property
    def level(self) -> int:
        return len(self.kappa)

    @property
    def dim(self) -> int:
        return self.level ** self.n * math.factorial(self.n)

    def describe(self) -> dict:
        return {"n": self.n, "e": self.e, "multicharge": list(self.kappa),
                "field": "rational" if self.field.characteristic == 0 else f"GF({self.field.characteristic})",
                "q": self.field.fmt(self.q), "degenerate": self.degenerate}


def _plain(v):
    if isinstance(v, (str, int, float, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return str(v)


# ---------------------------------------------------------------------------
# configuration


def _read_config_file(path: str) -> Dict[str, str]:
    out = {}
    try:
        with open(path) as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key=value")
                k, v = line.split("=", 1)
                out[k.strip().replace("-", "_")] = v.strip()
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from None
    return out


def _parse_int_list(s: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in str(s).split(",") if x.strip())
    except ValueError:
        raise ConfigError(f"bad integer list {s!r}") from None


def _truthy(v) -> bool:
    return str(v).lower() in ("1", "true", "yes", "on")


def build_config(ns: argparse.Namespace) -> RunConfig:
    file_vals = _read_config_file(ns.config) if ns.config else {}
    known = {"n", "e", "multicharge", "p", "rational", "q", "degenerate", "format", "out", "max_dim"}
    unknown = set(file_vals) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")

    def pick(name, default=None):
        v = getattr(ns, name, None)
        if v is not None and v is not False:
            return v
        return file_vals.get(name, default)

    try:
        n = int(pick("n", 2))
        e = int(pick("e", 2))
        max_dim = int(pick("max_dim", 2000))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if n < 1:
        raise ConfigError("n must be positive")
    kappa = _parse_int_list(pick("multicharge", "0"))
    if not kappa:
        raise ConfigError("the multicharge must be non-empty")
    degenerate = _truthy(pick("degenerate", False))
    rational = _truthy(pick("rational", False))
    p = pick("p")
    q = pick("q")
    if rational and p is not None:
        raise ConfigError("--p and --rational are exclusive")
    if degenerate:
        if e < 2:
            raise ConfigError("the degenerate case needs e = p prime")
        p, q = p or str(e), q or "1"
    elif p is None and not rational:
        if e not in DEFAULTS:
            raise ConfigError(f"no default field for e = {e}; pass --p and --q")
        p, q = DEFAULTS[e][0], q or DEFAULTS[e][1]
    if rational:
        p = "rational"
        q = q or "2"
    if q is None:
        raise ConfigError("--q is required with --p")
    try:
        F = make_field(p)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    try:
        qv = F.parse(str(q))
        qe = quantum_characteristic(F, qv)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad q: {exc}") from None
    if qe != e:
        raise ConfigError(f"q = {q} has quantum characteristic {qe} over this field, not e = {e}")
    if degenerate != F.eq(qv, F.one):
        raise ConfigError("--degenerate is exactly the case q = 1")
    fmt = pick("format", "json")
    if fmt not in FORMATS:
        raise ConfigError(f"format must be one of {', '.join(FORMATS)}")
    cfg = RunConfig(n, e, kappa, F, qv, degenerate, fmt, pick("out"), max_dim)
    try:
        cfg.quiver
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return cfg


def _algebra_guard(cfg: RunConfig):
    if cfg.dim > cfg.max_dim:
        raise ConfigError(f"algebra dimension {cfg.dim} exceeds --max-dim {cfg.max_dim}")


def _generators(cfg: RunConfig):
    from .klr import KLRConfig, KLRGenerators

    _algebra_guard(cfg)
    return KLRGenerators(KLRConfig(cfg.field, cfg.q, cfg.quiver, cfg.n))


def _graded(cfg: RunConfig):
    from .graded import GradedAlgebra

    if cfg.degenerate:
        raise ConfigError("psi bases need q != 1")
    return GradedAlgebra(_generators(cfg))


def _shapes(cfg: RunConfig, shape: Optional[str]):
    if shape:
        lam = combin.parse_shape(shape)
        if len(lam) != cfg.level or combin.size(lam) != cfg.n:
            raise ConfigError(f"shape {shape} is not a {cfg.level}-multipartition of {cfg.n}")
        return [lam]
    return combin.multipartitions(cfg.n, cfg.level)


# ---------------------------------------------------------------------------
# subcommands


def cmd_tableaux(cfg: RunConfig, ns) -> Result:
    Q = cfg.quiver
    shapes = []
    rows = []
    for lam in _shapes(cfg, ns.shape):
        entries = []
        for t in combin.standard_tableaux(lam):
            rec = {"tableau": str(t), "residues": list(combin.residue_sequence(t, Q)),
                   "degree": combin.degree(t, Q), "codegree": combin.codegree(t, Q),
                   "positive": combin.is_positive(t, Q)}
            entries.append(rec)
            rows.append([combin.shape_str(lam), rec["tableau"], " ".join(map(str, rec["residues"])),
                         str(rec["degree"]), str(rec["codegree"]), str(rec["positive"]).lower()])
        shapes.append({"shape": combin.shape_str(lam), "tableaux": entries})
    res = Result({"config": cfg.describe(), "shapes": shapes},
                 [Table("tableaux", ["shape", "tableau", "residues", "degree", "codegree", "positive"], rows)])
    for lam in _shapes(cfg, ns.shape):
        beta = combin.shape_block(lam, Q)
        d = combin.defect(beta, Q)
        for t in combin.standard_tableaux(lam):
            if combin.degree(t, Q) + combin.codegree(t, Q) != d:
                res.check("deg t + deg t' = defect", False, tableau=str(t))
    return res


def cmd_gdim(cfg: RunConfig, ns) -> Result:
    Q = cfg.quiver
    rows = []
    shapes = {}
    for lam in combin.multipartitions(cfg.n, cfg.level):
        g = combin.graded_dim(lam, Q)
        shapes[combin.shape_str(lam)] = str(g)
        rows.append(["shape", combin.shape_str(lam), str(g)])
    blocks = {}
    for beta, _ in combin.blocks(cfg.n, cfg.level, Q):
        g = combin.graded_dim_algebra(cfg.n, cfg.level, Q, beta)
        blocks[combin.root_str(beta)] = str(g)
        rows.append(["block", combin.root_str(beta), str(g)])
    total = combin.graded_dim_algebra(cfg.n, cfg.level, Q)
    rows.append(["algebra", "", str(total)])
    res = Result({"config": cfg.describe(), "shapes": shapes, "blocks": blocks, "algebra": str(total)},
                 [Table("graded dimensions", ["kind", "label", "graded dimension"], rows)])
    res.check("dimension at t = 1", total.at_one() == cfg.dim, expected=cfg.dim, got=total.at_one())
    if ns.census:
        census = _graded(cfg).graded_dimension()
        res.payload["psi_census"] = str(census)
        res.check("psi census", census == total, census=str(census))
    return res


def cmd_blocks(cfg: RunConfig, ns) -> Result:
    Q = cfg.quiver
    out = []
    rows = []
    for beta, shapes in combin.blocks(cfg.n, cfg.level, Q):
        d = combin.defect(beta, Q)
        names = [combin.shape_str(s) for s in shapes]
        out.append({"beta": combin.root_str(beta), "defect": d, "shapes": names})
        rows.append([combin.root_str(beta), str(d), "; ".join(names)])
    return Result({"config": cfg.describe(), "blocks": out}, [Table("blocks", ["beta", "defect", "shapes"], rows)])


def cmd_idempotents(cfg: RunConfig, ns) -> Result:
    from .seminormal import IntegralityError, LiftParams

    G = _generators(cfg)
    H, F = G.H, G.F
    res = Result({"config": cfg.describe()})
    L = LiftParams(cfg.field, cfg.q, cfg.quiver, cfg.n, target=H)
    out = []
    rows = []
    total = H.zero()
    for i in G.weights:
        a = G.e_idem(i)
        total = total + a
        try:
            b = L.e_idem_specialized(i)
            agree = a == b
        except IntegralityError as exc:
            agree = False
            res.check("integrality of lifted e(i)", False, i=list(i), detail=str(exc))
        rec = {"i": list(i), "terms": len(a), "nonzero": bool(a), "routes_agree": agree}
        if ns.show:
            rec["element"] = a.to_json()
        out.append(rec)
        rows.append([" ".join(map(str, i)), str(len(a)), str(bool(a)).lower(), str(agree).lower()])
        res.check("interpolation e(i) = seminormal e(i)", agree, i=list(i))
    res.check("sum of e(i) = 1", total == H.one())
    res.payload.update(idempotents=out, crt_exponent=G.crt_exponent)
    res.tables.append(Table("idempotents", ["i", "terms", "nonzero", "routes agree"], rows))
    return res


def cmd_relations(cfg: RunConfig, ns) -> Result:
    from .klr import check_inverse_maps, check_relations

    G = _generators(cfg)
    rep = check_relations(G)
    inv = check_inverse_maps(G)
    res = Result({"config": cfg.describe()})
    res.merge(rep, "relations")
    res.merge(inv, "inverse maps")
    rows = [[k, str(p), str(f)] for k, (p, f) in list(rep.summary().items()) + list(inv.summary().items())]
    res.tables.append(Table("relations", ["relation", "pass", "fail"], rows))
    return res


def cmd_basis(cfg: RunConfig, ns) -> Result:
    A = _graded(cfg)
    F = A.F
    target = ns.basis
    base = "murphy" if target == "psi" else "dual-murphy"
    from . import linalg

    C = linalg.matmul(A._inverse(base), A._matrix(target), F)
    labels = [f"{s}|{t}" for s, t in A.pairs]
    matrix = [[F.fmt(x) for x in row] for row in C]
    res = Result({"config": cfg.describe(), "basis": target, "relative_to": base,
                  "pairs": labels, "degrees": [A.pair_degree(p) for p in A.pairs], "transition": matrix},
                 [Table(f"{target} in the {base} basis (columns)", ["pair"] + labels,
                        [[labels[a]] + matrix[a] for a in range(len(labels))])])
    res.merge(A.check_transition(target, base), "transition")
    degs = A.check_prime_degrees() if target == "psi-prime" else None
    if degs is not None:
        res.merge(degs, "degrees")
    else:
        for p in A.pairs:
            d = A.degree_of(A.element("psi", *p))
            res_ok = d == A.pair_degree(p)
            if not res_ok:
                res.check("deg psi_st = deg s + deg t", False, pair=f"{p[0]}|{p[1]}", got=str(d))
    return res


def cmd_gram(cfg: RunConfig, ns) -> Result:
    A = _graded(cfg)
    F = A.F
    out = []
    tables = []
    res = Result({"config": cfg.describe()})
    for lam in _shapes(cfg, ns.shape):
        g = A.gram(lam)
        rec = g.to_json()
        rec["degrees"] = [A.deg(t) for t in g.tableaux]
        rec["rank"] = g.rank()
        rec["simple_character"] = [{"i": list(i), "degree": d, "mult": m}
                                   for (i, d), m in sorted(A.simple_character(lam).items())]
        out.append(rec)
        names = [str(t) for t in g.tableaux]
        tables.append(Table(f"Gram {combin.shape_str(lam)}", [""] + names,
                            [[names[a]] + [F.fmt(x) for x in row] for a, row in enumerate(g.matrix)]))
        res.check("Gram form symmetric", g.is_symmetric(), shape=combin.shape_str(lam))
        res.check("Gram form homogeneous", g.respects_grading(), shape=combin.shape_str(lam))
    res.payload["gram"] = out
    res.tables = tables
    return res


def cmd_decomp(cfg: RunConfig, ns) -> Result:
    A = _graded(cfg)
    out = []
    tables = []
    res = Result({"config": cfg.describe()})
    for b in A.blocks():
        D = A.decomposition_matrix(b.beta)
        C = A.cartan(b.beta)
        U = A.ungraded_decomposition(b.beta)
        name = combin.root_str(b.beta)
        rec = {"beta": name, "defect": b.defect, **D.to_json(),
               "cartan": [[str(x) for x in row] for row in C]}
        out.append(rec)
        cols = [combin.shape_str(c) for c in D.cols]
        tables.append(Table(f"Dec {name}", [""] + cols,
                            [[combin.shape_str(r)] + [str(x) for x in row] for r, row in zip(D.rows, D.matrix())]))
        tables.append(Table(f"Cartan {name}", [""] + cols,
                            [[c] + [str(x) for x in row] for c, row in zip(cols, C)]))
        res.check("Dec at t = 1 matches ungraded oracle", D.at_one() == U.at_one() and D.cols == U.cols, beta=name)
    res.payload["blocks"] = out
    res.tables = tables
    return res


def cmd_pairing(cfg: RunConfig, ns) -> Result:
    A = _graded(cfg)
    F = A.F
    out = []
    tables = []
    res = Result({"config": cfg.describe()})
    for b in A.blocks():
        P, M = A.pairing_matrix(b.beta)
        name = combin.root_str(b.beta)
        labels = [f"{s}|{t}" for s, t in P]
        out.append({"beta": name, "pairs": labels, "matrix": [[F.fmt(x) for x in row] for row in M]})
        tables.append(Table(f"pairing {name}", [""] + labels,
                            [[labels[a]] + [F.fmt(x) for x in row] for a, row in enumerate(M)]))
        res.merge(A.check_pairing(b.beta), f"pairing {name}")
        res.merge(A.check_symmetric(b.beta), f"trace form {name}")
        for lam in b.shapes:
            res.merge(A.specht_duality_check(lam), f"Specht duality {combin.shape_str(lam)}")
    res.payload["blocks"] = out
    res.tables = tables
    return res


def cmd_appendix_z(cfg: RunConfig, ns) -> Result:
    if cfg.degenerate:
        raise ConfigError("the z elements need q != 1")
    G = _generators(cfg)
    F = G.F
    out = []
    rows = []
    res = Result({"config": cfg.describe()})
    for s in sorted(set(cfg.quiver.res(k) for k in cfg.kappa)):
        for eps in (1, -1):
            C, ok = G.verify_theorem_A5(s, eps)
            d = G.zns_exponents(s, eps)
            rec = {"s": s, "eps": "+" if eps > 0 else "-", "i": list(G.zns_weight(s, eps)),
                   "exponents": list(d), "degree": 2 * sum(d), "C": None if C is None else F.fmt(C)}
            out.append(rec)
            rows.append([str(s), rec["eps"], " ".join(map(str, rec["i"])), " ".join(map(str, d)),
                         str(rec["degree"]), str(rec["C"])])
            res.check("z = C e(i) y^d with C non-zero", ok, s=s, eps=rec["eps"])
    res.payload["z"] = out
    res.tables.append(Table("z elements", ["s", "eps", "i", "exponents", "degree", "C"], rows))
    return res


def cmd_zlambda(cfg: RunConfig, ns) -> Result:
    A = _graded(cfg)
    G = A.G
    out = []
    rows = []
    res = Result({"config": cfg.describe()})
    for lam in _shapes(cfg, ns.shape):
        beta = combin.shape_block(lam, A.Q)
        expect = (combin.defect(beta, A.Q) + A.deg(combin.initial_tableau(lam))
                  + A.deg(combin.initial_tableau(combin.conjugate(lam))))
        z = G.z_lambda(lam)
        got = A.degree_of(z) if z else "zero"
        rec = {"shape": combin.shape_str(lam), "terms": len(z), "degree": _plain(got), "expected": expect}
        if ns.show:
            rec["element"] = z.to_json()
        out.append(rec)
        rows.append([rec["shape"], str(len(z)), str(got), str(expect)])
        res.check("z_lambda homogeneous of the stated degree", got == expect, shape=rec["shape"])
    res.payload["z_lambda"] = out
    res.tables.append(Table("z_lambda", ["shape", "terms", "degree", "expected"], rows))
    return res


COMMANDS: Dict[str, Tuple[Callable, str]] = {
    "tableaux": (cmd_tableaux, "standard tableaux with residues, degrees and positivity"),
    "gdim": (cmd_gdim, "graded dimensions per shape, block and algebra"),
    "blocks": (cmd_blocks, "blocks with defect and shapes"),
    "idempotents": (cmd_idempotents, "e(i) by interpolation and by seminormal reduction"),
    "relations": (cmd_relations, "KLR relation report"),
    "basis": (cmd_basis, "psi or psi' transition matrix"),
    "gram": (cmd_gram, "graded Gram matrices of cell modules"),
    "decomp": (cmd_decomp, "graded decomposition and Cartan matrices"),
    "pairing": (cmd_pairing, "trace pairing between psi and psi'"),
    "appendix-z": (cmd_appendix_z, "one dimensional ideals z_n"),
    "zlambda": (cmd_zlambda, "z_lambda homogeneity"),
}


# ---------------------------------------------------------------------------
# output


def render(res: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(res.payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for k, t in enumerate(res.tables):
            if k:
                buf.write("\n")
            w.writerow([f"# {t.title}"])
            w.writerow(t.header)
            w.writerows(t.rows)
        return buf.getvalue()
    out = []
    for t in res.tables:
        cols = "l" * len(t.header)
        out.append(f"% {t.title}")
        out.append(f"\\begin{{tabular}}{{{cols}}}")
        out.append(" & ".join(_tex(x) for x in t.header) + r" \\ \hline")
        for row in t.rows:
            out.append(" & ".join(_tex(x) for x in row) + r" \\")
        out.append(r"\end{tabular}")
        out.append("")
    return "\n".join(out)


def _tex(s) -> str:
    s = str(s)
    for a, b in (("\\", r"\textbackslash{}"), ("&", r"\&"), ("%", r"\%"), ("_", r"\_"), ("#", r"\#")):
        s = s.replace(a, b)
    return f"${s}$" if "^" in s else s


# ---------------------------------------------------------------------------
# entry point


def make_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file; flags override it")
    common.add_argument("--n", type=int)
    common.add_argument("--e", type=int)
    common.add_argument("--multicharge", help="comma separated, e.g. 0,1")
    fld = common.add_mutually_exclusive_group()
    fld.add_argument("--p", help="prime field characteristic")
    fld.add_argument("--rational", action="store_true", default=None, help="work over the rationals")
    common.add_argument("--q", help="Hecke parameter")
    common.add_argument("--degenerate", action="store_true", default=None, help="q = 1, e = p")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--max-dim", dest="max_dim", type=int, help="refuse larger algebras (default 2000)")

    parser = argparse.ArgumentParser(prog="gradedhecke", description="Graded cyclotomic Hecke algebra computations.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=help_)
        if name in ("tableaux", "gram", "zlambda"):
            sp.add_argument("--shape", help="one shape, components separated by |, parts by commas")
        if name in ("idempotents", "zlambda"):
            sp.add_argument("--show", action="store_true", help="include full elements")
        if name == "basis":
            sp.add_argument("--basis", choices=("psi", "psi-prime"), default="psi")
        if name == "gdim":
            sp.add_argument("--census", action="store_true", help="also count psi basis degrees")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = make_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    from .graded import TheoremViolation
    from .klr import ConfigError as KLRConfigError

    try:
        cfg = build_config(ns)
        res = COMMANDS[ns.command][0](cfg, ns)
    except (ConfigError, KLRConfigError) as exc:
        print(json.dumps({"error": "invalid-config", "detail": str(exc)}), file=sys.stderr)
        return 2
    except TheoremViolation as exc:
        print(json.dumps({"error": "theorem-violation", "failed": [{"check": str(exc)}]}), file=sys.stderr)
        return 1
    text = render(res, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if res.failures:
        print(json.dumps({"error": "theorem-violation", "failed": [{k: _plain(v) for k, v in f.items()}
                                                                   for f in res.failures]}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
