"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 input or parse error,
3 enumeration budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from flaghodge.errors import (
    EnumerationBudgetExceeded,
    FlagHodgeError,
    InvalidType,
    OracleMismatch,
    ParseError,
    RankError,
)
from flaghodge.flagcoh import compute_flag_cohomology, euler_number, euler_weyl, poincare_borel, poincare_coset
from flaghodge.polyring import eval_at_one
from flaghodge.rootsys import (
    BUDGET_ENV,
    DYNKIN_DIAGRAMS,
    LeviSpec,
    build_root_system,
    exponents,
    levi_decompose,
    levi_exponents,
)
from flaghodge.sasaki import (
    SasakiStructureRecord,
    betti_from_diamond,
    builtin_fixtures,
    check_finite_closed_leaves_vanishing,
    check_positivity_vanishing,
    closed_leaf_count_from_flag,
    diamond_from_flag,
    record_from_json,
    record_to_json,
    sphere_diamond,
    validate_diamond,
)

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

# Named node subsets; @E6 inside E7 is the 27-dimensional E7/E6.T example.
LEVI_ALIASES = {
    ("E", 7): {"@E6": (1, 2, 3, 4, 5, 6)},
    ("E", 8): {"@E6": (1, 2, 3, 4, 5, 6), "@E7": (1, 2, 3, 4, 5, 6, 7)},
}


@dataclass(frozen=True)
class GroupExpr:
    source: str
    cartan_type: str
    rank: int
    levi: tuple[int, ...] | None = None

    def render(self) -> str:
        out = f"{self.cartan_type}{self.rank}"
        if self.levi is not None:
            out += " --levi " + ",".join(str(n) for n in self.levi)
        return out


def parse_group_expr(text: str) -> GroupExpr:
    """Parse ``TYPE RANK [--levi NODES]``, e.g. ``"a3 --levi 1,3"``.

    Whitespace is ignored between tokens and the type letter is
    case-insensitive. ``NODES`` is a comma-separated list of 1-based
    Bourbaki node numbers or an alias such as ``@E6``.
    """
    i, n = 0, len(text)

    def skip(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    i = skip(i)
    if i >= n or text[i].upper() not in "ABCDEFG" or not text[i].isalpha():
        raise ParseError(text, i, "type letter A-G")
    t = text[i].upper()
    i = skip(i + 1)
    j = i
    while j < n and text[j].isdigit():
        j += 1
    if j == i:
        raise ParseError(text, i, "rank (a positive integer)")
    rank = int(text[i:j])
    i = skip(j)
    try:
        build_root_system(t, rank)
    except InvalidType as exc:
        raise RankError(str(exc)) from exc
    if i >= n:
        return GroupExpr(text, t, rank)
    if not text.startswith("--levi", i):
        raise ParseError(text, i, "'--levi' or end of input")
    i = skip(i + len("--levi"))
    if i < n and text[i] == "=":
        i = skip(i + 1)
    if i < n and text[i] == "@":
        name = text[i:].strip()
        aliases = LEVI_ALIASES.get((t, rank), {})
        if name.upper() not in {k.upper() for k in aliases}:
            known = ", ".join(sorted(aliases)) or "none"
            raise ParseError(text, i, f"a known alias for {t}{rank} ({known})")
        nodes = next(v for k, v in aliases.items() if k.upper() == name.upper())
        return GroupExpr(text, t, rank, tuple(nodes))
    nodes = []
    while True:
        j = i
        while j < n and text[j].isdigit():
            j += 1
        if j == i:
            raise ParseError(text, i, "node number")
        nodes.append(int(text[i:j]))
        i = skip(j)
        if i >= n:
            break
        if text[i] != ",":
            raise ParseError(text, i, "',' or end of input")
        i = skip(i + 1)
    return GroupExpr(text, t, rank, tuple(nodes))


def _group_and_levi(group: str, levi: str | None):
    src = group if levi is None or levi.strip() == "" else f"{group} --levi {levi}"
    expr = parse_group_expr(src)
    rs = build_root_system(expr.cartan_type, expr.rank)
    spec = LeviSpec(expr.levi or ()).check(rs)
    return expr, rs, spec


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _head(rs, spec, levi_group) -> str:
    nodes = ",".join(map(str, spec.node_subset)) or "-"
    return f"G = {rs.label}, Levi nodes {{{nodes}}} -> H = {levi_group.label}"


def cmd_poincare(args) -> int:
    _, rs, spec = _group_and_levi(args.group, args.levi)
    levi = levi_decompose(rs, spec)
    borel = poincare_borel(exponents(rs), levi_exponents(levi))
    payload = {
        "group": rs.label,
        "levi": list(spec.node_subset),
        "levi_type": levi.label,
        "poincare": list(borel.coefficients),
        "euler": eval_at_one(borel),
    }
    lines = [_head(rs, spec, levi), f"P_t(G/H) = {borel}"]
    code = EXIT_OK
    if args.verify:
        coset = poincare_coset(rs, spec)
        agree = coset == borel
        payload["poincare_coset"] = list(coset.coefficients)
        payload["agree"] = agree
        lines.append(f"Bruhat cells: {coset}")
        lines.append(f"methods agree: {'yes' if agree else 'NO'}")
        code = EXIT_OK if agree else EXIT_INVALID
    _emit(args, payload, "\n".join(lines))
    return code


def cmd_euler(args) -> int:
    _, rs, spec = _group_and_levi(args.group, args.levi)
    levi = levi_decompose(rs, spec)
    g_exp, l_exp = exponents(rs), levi_exponents(levi)
    routes = {
        "degrees": euler_number(g_exp, l_exp),
        "weyl_index": euler_weyl(rs, spec),
        "poincare_at_1": eval_at_one(poincare_borel(g_exp, l_exp)),
    }
    agree = len(set(routes.values())) == 1
    payload = {"group": rs.label, "levi": list(spec.node_subset), "levi_type": levi.label,
               "euler": routes["degrees"], "routes": routes, "agree": agree}
    lines = [
        _head(rs, spec, levi),
        f"prod (g_i+1)/(l_i+1)  = {routes['degrees']}",
        f"|W(G)| / |W(H)|       = {routes['weyl_index']}",
        f"P_t(G/H) at t = 1     = {routes['poincare_at_1']}",
        f"all routes agree: {'yes' if agree else 'NO'}",
    ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if agree else EXIT_INVALID


def cmd_diamond(args) -> int:
    _, rs, spec = _group_and_levi(args.group, args.levi)
    flag = compute_flag_cohomology(rs, spec)
    diamond = diamond_from_flag(flag)
    leaves = closed_leaf_count_from_flag(flag)
    record = SasakiStructureRecord(f"{flag.group}/{flag.levi}", diamond, leaves, "positive")
    payload = record_to_json(record)
    payload.update({"poincare": list(flag.poincare.coefficients), "euler": flag.euler,
                    "betti": list(betti_from_diamond(diamond))})
    lines = [
        f"{_head(rs, spec, levi_decompose(rs, spec))}, dim_C G/H = {flag.complex_dimension}",
        "basic Hodge diamond of the deformed homogeneous Sasakian structure:",
        diamond.render(),
        f"closed leaves: {leaves}",
    ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_sphere(args) -> int:
    if args.n < 1:
        raise ValueError("n must be at least 1")
    d = sphere_diamond(args.n)
    payload = {"n": d.n, "h": [list(r) for r in d.entries], "name": f"sphere_{2 * args.n + 1}"}
    _emit(args, payload, f"real cohomology S^{2 * args.n + 1}:\n{d.render()}")
    return EXIT_OK


def _load_records(path: str) -> list[SasakiStructureRecord]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: invalid JSON ({exc})") from exc
    items = data if isinstance(data, list) else [data]
    return [record_from_json(item) for item in items]


def cmd_validate(args) -> int:
    records = _load_records(args.file)
    out, ok = [], True
    for rec in records:
        report = validate_diamond(rec.diamond, lefschetz=args.lefschetz, subject=rec.name)
        if args.finite_leaves or rec.has_finite_closed_leaves:
            report = report + check_finite_closed_leaves_vanishing(rec, assume_finite=args.finite_leaves)
        if args.positive or rec.positivity == "positive":
            report = report + check_positivity_vanishing(rec, assume_positive=args.positive)
        ok = ok and report.ok
        out.append(report)
    payload = {"ok": ok, "records": [r.to_json() for r in out]}
    text = "\n".join(f"{r.subject}: {'ok' if r.ok else 'FAILED'}\n{r.render()}" for r in out)
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_fixtures(args) -> int:
    records = builtin_fixtures()
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for rec in records:
            (out / f"{rec.name}.json").write_text(
                json.dumps(record_to_json(rec), sort_keys=True, indent=2) + "\n", encoding="utf-8")
    payload = [dict(record_to_json(rec), betti=list(betti_from_diamond(rec.diamond))) for rec in records]
    blocks = []
    for rec in records:
        blocks.append(
            f"{rec.name}  (closed leaves: {rec.closed_leaf_count}, {rec.positivity})\n"
            f"{rec.diamond.render()}\nbetti: {list(betti_from_diamond(rec.diamond))}"
        )
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n\n".join(blocks) + "\n")
    return EXIT_OK


def _epilog() -> str:
    diagrams = "\n\n".join(DYNKIN_DIAGRAMS[t] for t in "ABCDEFG")
    aliases = "; ".join(
        f"{t}{r}: " + ", ".join(f"{k} = {','.join(map(str, v))}" for k, v in table.items())
        for (t, r), table in LEVI_ALIASES.items()
    )
    return (
        "Bourbaki node numbering:\n\n" + diagrams +
        f"\n\nLevi aliases: {aliases}\n"
        "The Levi node list selects the Dynkin subdiagram of H; omit it for G/T.\n"
        f"Enumeration cap: set {BUDGET_ENV} (default 10^7 cosets).\n"
        "Exit codes: 0 ok, 1 validation failure, 2 input error, 3 budget exceeded."
    )


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    grp = argparse.ArgumentParser(add_help=False)
    grp.add_argument("group", help="group expression such as A4 or E7")
    grp.add_argument("--levi", default=None, help="comma-separated Levi nodes, or an alias like @E6")

    parser = argparse.ArgumentParser(
        prog="flaghodge",
        description="Basic Hodge numbers of Sasakian structures over generalized flag manifolds.",
        epilog=_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
        parents=[fmt],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    raw = argparse.RawDescriptionHelpFormatter
    p = sub.add_parser("poincare", parents=[grp, fmt], help="Poincare polynomial of G/H",
                       epilog=_epilog(), formatter_class=raw)
    p.add_argument("--verify", action="store_true", help="also compute it from Bruhat cells")
    p.set_defaults(func=cmd_poincare)
    p = sub.add_parser("euler", parents=[grp, fmt], help="Euler number of G/H by three routes",
                       epilog=_epilog(), formatter_class=raw)
    p.set_defaults(func=cmd_euler)
    p = sub.add_parser("diamond", parents=[grp, fmt], help="basic Hodge diamond and closed-leaf count",
                       epilog=_epilog(), formatter_class=raw)
    p.set_defaults(func=cmd_diamond)
    p = sub.add_parser("sphere", parents=[fmt], help="diamond of a real cohomology (2n+1)-sphere")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_sphere)
    p = sub.add_parser("validate", parents=[fmt], help="validate diamonds stored as JSON")
    p.add_argument("file")
    p.add_argument("--lefschetz", action="store_true", help="also check h^{p,q} <= h^{p+1,q+1} for p+q < n")
    p.add_argument("--finite-leaves", action="store_true",
                   help="check off-diagonal vanishing as if the closed-leaf count were finite")
    p.add_argument("--positive", action="store_true",
                   help="check h^{p,0} = h^{0,q} = 0 as if the structure were positive")
    p.set_defaults(func=cmd_validate)
    p = sub.add_parser("fixtures", parents=[fmt], help="dump the built-in fixtures")
    p.add_argument("--out", help="also write one JSON file per fixture into this directory")
    p.set_defaults(func=cmd_fixtures)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args)
    except EnumerationBudgetExceeded as exc:
        print(f"error: {exc} (raise {BUDGET_ENV} to allow it)", file=sys.stderr)
        return EXIT_BUDGET
    except OracleMismatch as exc:
        print(f"error: internal consistency check failed: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (FlagHodgeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
