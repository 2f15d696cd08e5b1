"""Command-line front end.

Subcommands: `check` runs property checkers over a space file,
`construct` builds new spaces (product, subspace, sobrification,
b-closure, reflection), `corpus` replays the infinite-space
certificates against golden expectations, `enumerate` filters the small
spaces by a boolean property expression, and `export` draws a space as
a DOT diagram.  Exit codes: 0 success/Holds, 1 Refuted or expectation
mismatch, 2 toolkit error, 3 cap exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from typing import Any, Callable

from .b_topology import b_closure, is_b_closed
from .constructions import product, subspace
from .enumeration import all_spaces
from .errors import BadParams, CapExceeded, T0KitError, UsageError
from .finite_space import FiniteSpace, is_T1, iter_bits, mask_of, points_of
from .properties import (
    PropertyReport,
    is_co_sober,
    is_k_bounded_sober,
    is_open_well_filtered,
    is_sober,
    is_strong_d,
)
from .reflection_lab import (
    REGISTRY,
    construct_reflection,
    sobrify_bclosure,
    sobrify_irr,
)
from .report import render_dot, render_json, render_text
from .spacefile import SpaceDoc, parse_document, print_space
from .symbolic.alexandrov import check_cosober_alexandrov
from .symbolic.cofinite import check_owf
from .symbolic.intervals import check_kbs_holds, scott_full, scott_xn, scott_y
from .symbolic.johnstone import check_johnstone_claims
from .symbolic.verdicts import Verdict

# ----- properties exposed on the command line -----


def _t0_report(space: FiniteSpace) -> PropertyReport:
    return PropertyReport(
        "t0", True, "carrier invariant: spaces are validated T0 at construction"
    )


def _t1_report(space: FiniteSpace) -> PropertyReport:
    for x in range(space.n):
        for y in iter_bits(space.up[x]):
            if y != x:
                return PropertyReport(
                    "t1", False, "discreteness scan",
                    witness={"comparable_pair": [x, y]},
                )
    return PropertyReport("t1", True, "discreteness scan")


PROPERTIES: dict[str, Callable[[FiniteSpace], PropertyReport]] = {
    "sober": is_sober,
    "cosober": is_co_sober,
    "strongd": is_strong_d,
    "kbsober": is_k_bounded_sober,
    "owf": is_open_well_filtered,
    "t0": _t0_report,
    "t1": _t1_report,
}


# ----- plumbing -----


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we map to 64
        raise UsageError(message)


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _first_space(path: str) -> SpaceDoc:
    return parse_document(_read(path)).first_space()


def _emit(fmt: str, tree: dict[str, Any]) -> None:
    print(render_json(tree) if fmt == "json" else render_text(tree))


def _names_to_mask(doc: SpaceDoc, csv: str) -> int:
    names = [w.strip() for w in csv.split(",") if w.strip()]
    if not names:
        raise UsageError("--points needs at least one name")
    for w in names:
        if w not in doc.point_names:
            raise BadParams(f"{w} is not a point of {doc.name}")
    return mask_of(doc.index(w) for w in names)


# ----- check -----


def cmd_check(args) -> int:
    doc = _first_space(args.file)
    wanted = list(PROPERTIES) if args.property == "all" else [args.property]
    reports = {name: PROPERTIES[name](doc.space) for name in wanted}
    tree = {
        "command": "check",
        "file": args.file,
        "space": doc.name,
        "points": list(doc.point_names),
        "properties": {name: rep.as_tree() for name, rep in reports.items()},
    }
    _emit(args.format, tree)
    return 0 if all(rep.holds for rep in reports.values()) else 1


# ----- construct -----


def _named_doc_text(name: str, space: FiniteSpace, names: list[str],
                    comments: list[str]) -> str:
    if len(set(names)) != len(names):  # joined labels may collide
        comments = comments + [f"{f'p{i}'} = {n}" for i, n in enumerate(names)]
        names = [f"p{i}" for i in range(space.n)]
    return print_space(name, space, names, comments=comments)


def cmd_construct_product(args) -> int:
    a = _first_space(args.file)
    b = _first_space(args.file2)
    pr = product([a.space, b.space])
    names = [
        f"{a.point_names[i]}_{b.point_names[j]}"
        for i, j in (pr.coords(k) for k in range(pr.space.n))
    ]
    text = _named_doc_text(
        f"{a.name}_x_{b.name}", pr.space, names,
        [f"product of {a.name} ({a.space.n} points) and {b.name} ({b.space.n} points)"],
    )
    if args.format == "json":
        _emit("json", {
            "command": "construct product",
            "factors": [a.name, b.name],
            "points": pr.space.n,
            "document": text,
        })
    else:
        print(text, end="")
    return 0


def cmd_construct_subspace(args) -> int:
    doc = _first_space(args.file)
    mask = _names_to_mask(doc, args.points)
    sub = subspace(doc.space, mask)
    names = [doc.point_names[p] for p in sub.points]
    text = print_space(
        f"{doc.name}_sub", sub.space, names,
        comments=[f"subspace of {doc.name} on {', '.join(names)}"],
    )
    if args.format == "json":
        _emit("json", {
            "command": "construct subspace",
            "ambient": doc.name,
            "points": names,
            "document": text,
        })
    else:
        print(text, end="")
    return 0


def cmd_construct_sobrify(args) -> int:
    doc = _first_space(args.file)
    res = sobrify_irr(doc.space) if args.route == "irr" else sobrify_bclosure(doc.space)
    names = [f"q{i}" for i in range(res.space.n)]
    comments = [f"sobrification of {doc.name} via {res.route}"]
    comments += [
        f"unit: {doc.point_names[x]} -> q{res.unit.table[x]}"
        for x in range(doc.space.n)
    ]
    text = print_space(f"{doc.name}_sober", res.space, names, comments=comments)
    if args.format == "json":
        _emit("json", {
            "command": "construct sobrify",
            "route": res.route,
            "unit": {doc.point_names[x]: f"q{res.unit.table[x]}"
                     for x in range(doc.space.n)},
            "details": dict(res.details),
            "document": text,
        })
    else:
        print(text, end="")
    return 0


def cmd_construct_bclosure(args) -> int:
    doc = _first_space(args.file)
    mask = _names_to_mask(doc, args.points)
    cl = b_closure(doc.space, mask)
    tree = {
        "command": "construct bclosure",
        "space": doc.name,
        "subset": [doc.point_names[p] for p in points_of(mask)],
        "b_closure": [doc.point_names[p] for p in points_of(cl)],
        "is_b_closed": is_b_closed(doc.space, mask),
    }
    _emit(args.format, tree)
    return 0


def cmd_construct_reflect(args) -> int:
    doc = _first_space(args.file)
    res = construct_reflection(doc.space, REGISTRY[args.class_name])
    tree: dict[str, Any] = {
        "command": "construct reflect",
        "space": doc.name,
        "class": args.class_name,
        "found": res.found,
        "route": res.route,
    }
    if res.found:
        tree["unit"] = {
            doc.point_names[x]: f"q{res.unit.table[x]}"
            for x in range(doc.space.n)
        }
        tree["universal_property"] = {
            "holds": res.check.holds,
            "verified_factorizations": res.check.verified_objects,
            "test_bound": res.check.test_bound,
        }
        tree["document"] = print_space(
            f"{doc.name}_reflected", res.space,
            [f"q{i}" for i in range(res.space.n)],
            comments=[f"reflection of {doc.name} into class {args.class_name}"],
        )
    else:
        tree["details"] = dict(res.details)
    _emit(args.format, tree)
    return 0 if res.found else 1


# ----- corpus -----

_LABELS = {"holds": "Holds", "refuted": "Refuted", "holds_up_to": "HoldsUpTo"}


def _corpus_rows(bound: int) -> list[dict[str, Any]]:
    checks: list[tuple[str, Callable[[], Verdict], str, bool]] = [
        ("cofinite naturals: open well-filtered",
         lambda: check_owf(bound=max(bound, 8)), "refuted", True),
        ("alexandrov naturals: co-sober",
         lambda: check_cosober_alexandrov(bound=50), "holds", True),
        ("scott rationals [0,3]: k-bounded sober",
         lambda: check_kbs_holds(scott_full()), "holds", True),
        ("scott rationals [0,1) u {2}: k-bounded sober",
         lambda: check_kbs_holds(scott_y()), "refuted", True),
    ]
    for n in range(2, 7):
        checks.append((
            f"scott rationals [0,1) u (2-1/{n}, 2+1/{n}): k-bounded sober",
            lambda n=n: check_kbs_holds(scott_xn(n)), "holds", True,
        ))

    rows = []
    for name, thunk, kind, exact in checks:
        t0 = time.perf_counter()
        verdict = thunk()
        rows.append(_row(name, verdict, kind, exact, time.perf_counter() - t0))

    t0 = time.perf_counter()
    claims = check_johnstone_claims(bound=bound)
    secs = time.perf_counter() - t0
    expectations = [("holds", True), ("holds_up_to", False),
                    ("holds_up_to", False), ("holds", True)]
    for verdict, (kind, exact) in zip(claims, expectations):
        row = _row(f"johnstone dcpo: {verdict.claim}", verdict, kind, exact,
                   secs / len(claims))
        if verdict.claim.startswith("(1)") and row["match"]:
            row["match"] = verdict.details.get("nonempty_samples_refuted", 0) >= 3
        rows.append(row)
    return rows


def _row(name: str, verdict: Verdict, kind: str, exact: bool,
         secs: float) -> dict[str, Any]:
    return {
        "check": name,
        "verdict": verdict.label,
        "expected": _LABELS[kind],
        "match": verdict.kind == kind and verdict.exact == exact,
        "seconds": round(secs, 3),
        "report": verdict.as_tree(),
    }


def cmd_corpus(args) -> int:
    rows = _corpus_rows(args.bound)
    matched = sum(1 for r in rows if r["match"])
    total_secs = round(sum(r["seconds"] for r in rows), 3)
    if args.format == "json":
        _emit("json", {
            "command": "corpus run",
            "bound": args.bound,
            "matched": matched,
            "total": len(rows),
            "seconds": total_secs,
            "rows": rows,
        })
    else:
        for r in rows:
            mark = "ok      " if r["match"] else "MISMATCH"
            print(f"{mark} {r['check']}: {r['verdict']} "
                  f"(expected {r['expected']}) [{r['seconds']}s]")
            witness = r["report"].get("witness")
            if witness or not r["match"]:
                block = render_text({"witness": witness or r["report"]})
                print("\n".join("  " + line for line in block.splitlines()))
        print(f"corpus: {matched} of {len(rows)} matched in {total_secs}s")
    return 0 if matched == len(rows) else 1


# ----- enumerate -----


def _parse_where(expr: str):
    tokens = re.findall(r"[A-Za-z_][A-Za-z0-9_]*|[!&|()]|\S", expr)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise UsageError(f"bad --where expression at token {tok!r}")
        pos += 1
        return tok

    def atom():
        tok = peek()
        if tok == "(":
            take()
            node = disjunction()
            take(")")
            return node
        if tok == "!":
            take()
            return ("not", atom())
        if tok is None or not re.match(r"^[A-Za-z_]", tok):
            raise UsageError(f"bad --where expression at token {tok!r}")
        take()
        if tok not in PROPERTIES:
            raise UsageError(
                f"unknown property {tok!r}; choose from {', '.join(PROPERTIES)}"
            )
        return ("id", tok)

    def conjunction():
        node = atom()
        while peek() == "&":
            take()
            node = ("and", node, atom())
        return node

    def disjunction():
        node = conjunction()
        while peek() == "|":
            take()
            node = ("or", node, conjunction())
        return node

    node = disjunction()
    if pos != len(tokens):
        raise UsageError(f"bad --where expression at token {peek()!r}")
    return node


def _eval_where(node, space: FiniteSpace, memo: dict[str, bool]) -> bool:
    kind = node[0]
    if kind == "id":
        name = node[1]
        if name not in memo:
            memo[name] = PROPERTIES[name](space).holds
        return memo[name]
    if kind == "not":
        return not _eval_where(node[1], space, memo)
    left = _eval_where(node[1], space, memo)
    if kind == "and":
        return left and _eval_where(node[2], space, memo)
    return left or _eval_where(node[2], space, memo)


def cmd_enumerate(args) -> int:
    node = _parse_where(args.where) if args.where else None
    spaces = all_spaces(args.size)
    matches = []
    for i, sp in enumerate(spaces):
        if node is not None and not _eval_where(node, sp, {}):
            continue
        matches.append({
            "index": i,
            "points": sp.n,
            "cover": [f"x{x} < x{y}" for x, y in sorted(_covers(sp))],
        })
    _emit(args.format, {
        "command": "enumerate",
        "size": args.size,
        "where": args.where or "(none)",
        "total": len(spaces),
        "matched": len(matches),
        "spaces": matches,
    })
    return 0


def _covers(space: FiniteSpace) -> list[tuple[int, int]]:
    from .report import cover_pairs

    return cover_pairs(space)


# ----- export -----


def cmd_export(args) -> int:
    doc = _first_space(args.file)
    print(render_dot(doc.space, list(doc.point_names), graph_name=doc.name))
    return 0


# ----- parser -----


def build_parser() -> _Parser:
    fmt = _Parser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default="text",
                     help="report syntax (default text)")

    parser = _Parser(prog="t0kit",
                     description="Finite T0 spaces: property checks, "
                                 "constructions, and exact certificates.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_check = subs.add_parser("check", parents=[fmt],
                              help="run property checkers over a space file")
    p_check.add_argument("file")
    p_check.add_argument("--property", default="all",
                         choices=[*PROPERTIES, "all"])
    p_check.set_defaults(func=cmd_check)

    p_con = subs.add_parser("construct", help="build a new space")
    con_subs = p_con.add_subparsers(dest="construction", required=True)

    c = con_subs.add_parser("product", parents=[fmt])
    c.add_argument("file")
    c.add_argument("file2")
    c.set_defaults(func=cmd_construct_product)

    c = con_subs.add_parser("subspace", parents=[fmt])
    c.add_argument("file")
    c.add_argument("--points", required=True,
                   help="comma-separated point names")
    c.set_defaults(func=cmd_construct_subspace)

    c = con_subs.add_parser("sobrify", parents=[fmt])
    c.add_argument("file")
    c.add_argument("--route", choices=["irr", "bclosure"], default="irr")
    c.set_defaults(func=cmd_construct_sobrify)

    c = con_subs.add_parser("bclosure", parents=[fmt])
    c.add_argument("file")
    c.add_argument("--points", required=True,
                   help="comma-separated point names")
    c.set_defaults(func=cmd_construct_bclosure)

    c = con_subs.add_parser("reflect", parents=[fmt])
    c.add_argument("file")
    c.add_argument("--class", dest="class_name", required=True,
                   choices=sorted(REGISTRY))
    c.set_defaults(func=cmd_construct_reflect)

    p_corpus = subs.add_parser("corpus", parents=[fmt],
                               help="replay the certificate corpus")
    p_corpus.add_argument("action", choices=["run"])
    p_corpus.add_argument("--bound", type=int, default=30)
    p_corpus.set_defaults(func=cmd_corpus)

    p_enum = subs.add_parser("enumerate", parents=[fmt],
                             help="filter small spaces by properties")
    p_enum.add_argument("--size", type=int, required=True)
    p_enum.add_argument("--where",
                        help="boolean expression over property names "
                             "with !, &, | and parentheses")
    p_enum.set_defaults(func=cmd_enumerate)

    p_export = subs.add_parser("export", help="draw a space as DOT")
    p_export.add_argument("file")
    p_export.add_argument("--dot", action="store_true", required=True,
                          help="emit a DOT Hasse diagram")
    p_export.set_defaults(func=cmd_export)

    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 64
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except T0KitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
