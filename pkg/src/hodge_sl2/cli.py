"""Command line interface: ``hodge-sl2 {classify,hodge-tate,orbits,diamond}``.

Exit codes: 0 ok, 2 usage/parse error, 3 resource limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .config import RunConfig
from .nilpotent_orbits import enumerate_char_vectors, even_jm_classes, jm_parabolic_classes
from .real_forms import identify_real_form
from .rep_weights import adjoint_weight_system, hodge_numbers, weight_system
from .root_system import CartanType, SizeLimitError, build_root_system
from .sl2_classifier import (MTDomainSpec, admits_hodge_tate, classify, deligne_diamond,
                             format_grading, format_root)

SCHEMA_VERSION = 1


class UsageError(ValueError):
    pass


# -- parsing ------------------------------------------------------------------

def parse_type(s) -> CartanType:
    try:
        return CartanType.parse(s)
    except ValueError as e:
        raise UsageError(str(e)) from None


def parse_grading(s: str, rank: int) -> tuple:
    """Comma list of 1-based indices ("1,3"), or a 0/1 mask ("101" or "1,0,1")."""
    s = s.strip()
    if s.lower() in ("all", "borel"):
        return (1,) * rank
    if "," not in s and len(s) == rank > 1 and set(s) <= {"0", "1"}:
        return tuple(int(ch) for ch in s)
    try:
        vals = [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"cannot parse grading {s!r}") from None
    if len(vals) == rank and set(vals) <= {0, 1} and (0 in vals or len(set(vals)) < len(vals)):
        mask = tuple(vals)
    else:
        if any(not 1 <= v <= rank for v in vals) or len(set(vals)) != len(vals):
            raise UsageError(f"grading indices must be distinct and in 1..{rank}")
        mask = tuple(int(i + 1 in vals) for i in range(rank))
    if not any(mask):
        raise UsageError("grading must be nonzero")
    return mask


def parse_rep(s, rank):
    if s is None:
        return None
    try:
        lam = tuple(int(x) for x in s.split(","))
    except ValueError:
        raise UsageError(f"cannot parse highest weight {s!r}") from None
    if len(lam) != rank or any(x < 0 for x in lam):
        raise UsageError(f"highest weight needs {rank} nonnegative entries")
    return lam


# -- reports ------------------------------------------------------------------

def _q(x):
    return str(Fraction(x))


@dataclass
class ClassificationReport:
    domain: dict
    rows: list = field(default_factory=list)
    command: str = "classify"
    schema_version: int = SCHEMA_VERSION

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, s: str) -> "ClassificationReport":
        d = json.loads(s)
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError("unsupported schema version")
        return cls(**d)


def _domain(spec, cfg, lam=None, n=None):
    rs = spec.rs
    d = {
        "type": str(spec.cartan_type),
        "grading": list(spec.grading_coeffs),
        "E": format_grading(spec.E),
        "real_form": identify_real_form(rs, spec.E).full_name,
        "w0_generators": [i + 1 for i in spec.w0_generators],
        "rep": None if lam is None else list(lam),
        "n": n,
        "hodge_numbers": None,
    }
    return d


def _setup_rep(spec, lam, n, cfg):
    rs = spec.rs
    if lam is None:
        return adjoint_weight_system(rs), (0 if n is None else n)
    ws = weight_system(rs, lam, cfg.rep_cap)
    if n is None:
        n = int(2 * max(rs.evaluate(a, spec.E) for a, _ in ws.root_coords()))
    return ws, n


def _row(spec, c, ws=None, n=None):
    row = {
        "S_prime": [list(b) for b in c.base],
        "S_prime_str": [format_root(b) for b in c.base],
        "Z": list(c.Z),
        "Z_str": format_grading(c.Z),
        "zeta": [_q(z) for z in c.zeta],
        "levi_real_form": list(c.levi_real_form),
        "codim": c.codim,
        "hodge_tate": c.is_hodge_tate,
        "diamond": None,
    }
    if ws is not None:
        dd = deligne_diamond(spec, c, ws, n)
        row["diamond"] = sorted([p, q, m] for (p, q), m in dd.cells.items())
    return row


def build_report(spec, cfg, lam=None, n=None, diamonds=False):
    ws, n_eff = _setup_rep(spec, lam, n, cfg)
    dom = _domain(spec, cfg, lam, n_eff)
    if lam is not None:
        dom["hodge_numbers"] = list(hodge_numbers(ws, spec.E, n_eff).vector)
    classes = classify(spec, include_trivial=cfg.include_trivial, cap=cfg.weyl_cap)
    rows = [_row(spec, c, ws if diamonds else None, n_eff) for c in classes]
    return ClassificationReport(dom, rows)


# -- text rendering -----------------------------------------------------------

def render_diamond(cells) -> list:
    """ASCII grid, q increasing upward, '*' at occupied (p,q)."""
    pts = {(p, q) for p, q, _ in cells}
    ps = [p for p, _ in pts]
    qs = [q for _, q in pts]
    lo, hi = min(ps + qs), max(ps + qs)
    lines = []
    for q in range(hi, lo - 1, -1):
        lines.append(f"{q:>3} | " + " ".join("*" if (p, q) in pts else "." for p in range(lo, hi + 1)))
    lines.append("    +-" + "--" * (hi - lo + 1))
    lines.append("      " + " ".join(str(p)[-1] for p in range(lo, hi + 1)))
    return lines


def render_text(rep: ClassificationReport) -> str:
    d = rep.domain
    out = [f"type {d['type']}   E = {d['E']}   real form {d['real_form']}",
           f"W0 generated by simple reflections {d['w0_generators'] or 'none'}"]
    if d["rep"] is not None:
        out.append(f"V = V({','.join(map(str, d['rep']))}), n = {d['n']}, "
                   f"h = ({','.join(map(str, d['hodge_numbers']))})")
    out.append(f"{len(rep.rows)} class{'' if len(rep.rows) == 1 else 'es'}")
    for k, r in enumerate(rep.rows, 1):
        zeta = "0" if all(z == "0" for z in r["zeta"]) else "(" + ",".join(r["zeta"]) + ")"
        out.append(f"[{k}] S' = {{{', '.join(r['S_prime_str'])}}}   l^ss = {' x '.join(r['levi_real_form'])}")
        out.append(f"    Z = {r['Z_str']}   sigma(Z) = ({','.join(map(str, r['Z']))})   zeta = {zeta}")
        out.append(f"    codim = {r['codim']}   hodge-tate = {'yes' if r['hodge_tate'] else 'no'}")
        if r["diamond"] is not None:
            out += ["    " + line for line in render_diamond(r["diamond"])]
    return "\n".join(out)


# -- commands -----------------------------------------------------------------

def _spec_from(args):
    ct = parse_type(args.type)
    return MTDomainSpec(ct, parse_grading(args.grading, ct.rank)), ct


def cmd_classify(args, cfg):
    spec, ct = _spec_from(args)
    rep = build_report(spec, cfg, parse_rep(args.rep, ct.rank), args.n, args.diamonds)
    return rep.to_json() if args.format == "json" else render_text(rep)


def cmd_diamond(args, cfg):
    spec, ct = _spec_from(args)
    rep = build_report(spec, cfg, parse_rep(args.rep, ct.rank), args.n, diamonds=True)
    if args.row is not None:
        if not 1 <= args.row <= len(rep.rows):
            raise UsageError(f"row must be in 1..{len(rep.rows)}")
        rep.rows = [rep.rows[args.row - 1]]
    rep.command = "diamond"
    return rep.to_json() if args.format == "json" else render_text(rep)


def cmd_hodge_tate(args, cfg):
    spec, _ = _spec_from(args)
    classes = classify(spec, cap=cfg.weyl_cap)
    ok, wit = admits_hodge_tate(spec, classes)
    if args.format == "json":
        return json.dumps({"schema_version": SCHEMA_VERSION, "command": "hodge-tate",
                           "domain": _domain(spec, cfg), "admits": ok,
                           "witness": _row(spec, wit) if wit else None}, indent=2, sort_keys=True)
    if not ok:
        return "no"
    return "yes, S'={" + ", ".join(format_root(b) for b in wit.base) + "}"


def cmd_orbits(args, cfg):
    ct = parse_type(args.type)
    rs = build_root_system(ct)
    vecs = enumerate_char_vectors(rs, cfg.weyl_cap)
    if args.even_jm:
        sets = sorted((sorted(s) for s in even_jm_classes(rs, vecs)), key=lambda s: (-len(s), s))
        key, vals = "even_jm", sets
    elif args.jm:
        sets = sorted((sorted(s) for s in jm_parabolic_classes(rs, vecs)), key=lambda s: (-len(s), s))
        key, vals = "jm", sets
    else:
        key, vals = "char_vectors", sorted((list(v) for v in vecs), reverse=True)
    if args.format == "json":
        return json.dumps({"schema_version": SCHEMA_VERSION, "command": "orbits",
                           "type": str(ct), key: vals}, indent=2, sort_keys=True)
    head = {"even_jm": "even Jacobson-Morosov index sets",
            "jm": "Jacobson-Morosov index sets",
            "char_vectors": "characteristic vectors"}[key]
    lines = [f"{str(ct)}: {len(vals)} {head}"]
    for v in vals:
        lines.append(("  {" + ",".join(map(str, v)) + "}") if key != "char_vectors"
                     else "  (" + ",".join(map(str, v)) + ")")
    return "\n".join(lines)


def make_parser():
    p = argparse.ArgumentParser(prog="hodge-sl2", description=__doc__.splitlines()[0])
    p.add_argument("--weyl-cap", type=int, default=None,
                   help="maximum Weyl group order (default: $HODGE_SL2_WEYL_CAP or 10^6)")
    sub = p.add_subparsers(dest="command", required=True)

    def domain_args(q, rep=True):
        q.add_argument("type", help="Cartan type, e.g. C3")
        q.add_argument("--grading", required=True,
                       help="1-based indices '1,3' or a 0/1 mask '101'")
        if rep:
            q.add_argument("--rep", default=None, help="highest weight, fundamental-weight coords")
            q.add_argument("--n", type=int, default=None, help="weight of the Hodge structure")
        q.add_argument("--format", choices=["text", "json"], default="text")
        q.add_argument("--weyl-cap", type=int, default=argparse.SUPPRESS)

    q = sub.add_parser("classify", help="list the horizontal SL(2) classes")
    domain_args(q)
    q.add_argument("--diamonds", action="store_true")
    q.add_argument("--include-trivial", action="store_true")
    q.set_defaults(func=cmd_classify)

    q = sub.add_parser("diamond", help="Deligne diamonds of the classes")
    domain_args(q)
    q.add_argument("--row", type=int, default=None)
    q.add_argument("--include-trivial", action="store_true")
    q.set_defaults(func=cmd_diamond)

    q = sub.add_parser("hodge-tate", help="does the domain admit a Hodge-Tate degeneration")
    domain_args(q, rep=False)
    q.set_defaults(func=cmd_hodge_tate)

    q = sub.add_parser("orbits", help="complex nilpotent orbits")
    q.add_argument("type")
    g = q.add_mutually_exclusive_group()
    g.add_argument("--even-jm", action="store_true")
    g.add_argument("--jm", action="store_true")
    q.add_argument("--format", choices=["text", "json"], default="text")
    q.add_argument("--weyl-cap", type=int, default=argparse.SUPPRESS)
    q.set_defaults(func=cmd_orbits)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(include_trivial=getattr(args, "include_trivial", False))
    if args.weyl_cap is not None:
        cfg.weyl_cap = args.weyl_cap
    try:
        print(args.func(args, cfg))
    except UsageError as e:
        print(f"hodge-sl2: error: {e}", file=sys.stderr)
        return 2
    except SizeLimitError as e:
        print(f"hodge-sl2: resource limit: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"hodge-sl2: error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
