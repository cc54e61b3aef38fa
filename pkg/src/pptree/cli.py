"""``ppt`` command line.

Exit codes: 0 success, 1 bad input or usage, 2 internal invariant failure.
JSON output renders every integer as a decimal string.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import forest
from .boxcore import (
    PptTriple,
    area_perimeter_of,
    box_from_triple,
    classify_non_primitive,
    family_fermat,
    family_plato,
    family_pythagoras,
    hats_of_triple,
    radii_of,
)
from .circlegeom import descartes_check
from .egypt import ef_four_term, ef_three_term, ef_two_term_hypotenuse, rhind_two_term
from .errors import InvariantViolation, PptError
from .forest import LETTERS, TreeKind
from .verify import run_all

# (tree, triple) -> note printed to stderr by `navigate`
KNOWN_PATH_NOTES = {
    (TreeKind.NEW, (15, 112, 113)):
        "some published listings give path CCC for this triple; the successor rule reaches it in two C steps",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _s(n: int) -> str:
    return str(n)


def triple_json(t) -> dict:
    return {"a": _s(t[0]), "b": _s(t[1]), "c": _s(t[2])}


def triple_text(t) -> str:
    return ",".join(str(x) for x in t)


def path_text(path: str) -> str:
    return path if path else "(root)"


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _ppt_arg(args) -> PptTriple:
    report = classify_non_primitive(args.a, args.b, args.c)
    if report.divisor != 1:
        raise UsageError(f"{args.a},{args.b},{args.c} is not primitive "
                         f"({report.divisor} x {triple_text(report.core)}); see `ppt info`")
    return report.core


def dot_graph(name: str, nodes: list[tuple[str, tuple]], edges: list[tuple[str, str, str]]) -> str:
    out = [f'digraph "{name}" {{', "  node [shape=box];"]
    for ident, t in nodes:
        out.append(f'  "n{ident}" [label="{triple_text(t)}"];')
    for src, dst, letter in edges:
        out.append(f'  "n{src}" -> "n{dst}" [label="{letter}"];')
    out.append("}")
    return "\n".join(out) + "\n"


# -- commands ------------------------------------------------------------------

def cmd_info(args) -> str:
    report = classify_non_primitive(args.a, args.b, args.c)
    t = report.core
    box = box_from_triple(t)
    primary, secondary = hats_of_triple(t)
    radii = radii_of(box)
    area, perimeter = area_perimeter_of(box)
    families = sorted(f.value for f in forest.classify_families(t))
    efs = {
        "four_term": ef_four_term(box),
        "three_term": ef_three_term(box),
        "two_term_hypotenuse": ef_two_term_hypotenuse(box),
    }
    paths = {kind.value: forest.locate(kind, t) for kind in TreeKind}
    descartes = descartes_check(radii)

    if args.format == "json":
        return dump_json({
            "input": triple_json((args.a, args.b, args.c)),
            "divisor": _s(report.divisor),
            "triple": triple_json(t),
            "primitive": report.divisor == 1,
            "box": {"q": _s(box.q), "q_prime": _s(box.q_prime), "p": _s(box.p), "p_prime": _s(box.p_prime)},
            "hats": {"primary": str(primary), "secondary": str(secondary)},
            "radii": {f"r{i}": _s(r) for i, r in enumerate(radii, 1)},
            "area": _s(area),
            "perimeter": _s(perimeter),
            "families": families,
            "egyptian": {k: {"target": str(d.target), "terms": [_s(x) for x in d.terms]} for k, d in efs.items()},
            "descartes": descartes,
            "paths": paths,
        })
    lines = [f"input: {args.a},{args.b},{args.c}"]
    if report.divisor == 1:
        lines.append("primitive: yes")
    else:
        lines.append(f"primitive: no (divisor {report.divisor}, core {triple_text(t)})")
    lines += [
        f"triple: {triple_text(t)}",
        f"box: {box}",
        f"hats: {primary}, {secondary}",
        f"radii: {triple_text(radii)}",
        f"area: {area}",
        f"perimeter: {perimeter}",
        f"families: {', '.join(families) if families else '-'}",
        f"ef4: {efs['four_term']}",
        f"ef3: {efs['three_term']}",
        f"ef2: {efs['two_term_hypotenuse']}",
        f"descartes: {'true' if descartes else 'false'}",
        f"path bh: {path_text(paths['bh'])}",
        f"path new: {path_text(paths['new'])}",
    ]
    return "\n".join(lines) + "\n"


def cmd_children(args) -> str:
    t = _ppt_arg(args)
    kids = forest.children(args.tree, t)
    if args.format == "json":
        return dump_json({
            "tree": args.tree,
            "triple": triple_json(t),
            "children": [{"letter": l, "triple": triple_json(k)} for l, k in zip(LETTERS, kids)],
        })
    return "".join(f"{l} {triple_text(k)}\n" for l, k in zip(LETTERS, kids))


def cmd_parent(args) -> str:
    t = _ppt_arg(args)
    up = forest.parent(args.tree, t)
    if args.format == "json":
        body = {"tree": args.tree, "triple": triple_json(t), "parent": None, "letter": None}
        if up is not None:
            body.update(parent=triple_json(up[0]), letter=up[1])
        return dump_json(body)
    if up is None:
        return "(root)\n"
    return f"{up[1]} {triple_text(up[0])}\n"


def cmd_navigate(args) -> str:
    path = forest.parse_path(args.path)
    nodes = forest.trace(args.tree, path)
    target = nodes[-1]
    note = KNOWN_PATH_NOTES.get((TreeKind.parse(args.tree), tuple(target)))
    if note:
        print(f"note: {note}", file=sys.stderr)
    if args.format == "json":
        return dump_json({"tree": args.tree, "path": path, "triple": triple_json(target)})
    if args.format == "dot":
        idents = [path[:i] for i in range(len(nodes))]
        edges = [(idents[i], idents[i + 1], path[i]) for i in range(len(path))]
        return dot_graph(f"{args.tree}_path", list(zip(idents, nodes)), edges)
    return triple_text(target) + "\n"


def cmd_locate(args) -> str:
    t = _ppt_arg(args)
    path = forest.locate(args.tree, t)
    if args.format == "json":
        return dump_json({"tree": args.tree, "triple": triple_json(t), "path": path, "depth": _s(len(path))})
    return path_text(path) + "\n"


def cmd_level(args) -> str:
    n = args.n
    level = forest.enumerate_level(args.tree, n, max_depth=args.max_depth)
    paths = list(forest.level_paths(n))
    if args.format == "json":
        return dump_json({
            "tree": args.tree,
            "level": _s(n),
            "nodes": [{"path": p, "triple": triple_json(t)} for p, t in zip(paths, level)],
        })
    if args.format == "dot":
        nodes, edges = [], []
        for d in range(n + 1):
            for p, t in zip(forest.level_paths(d), forest.enumerate_level(args.tree, d, max_depth=args.max_depth)):
                nodes.append((p, t))
                if p:
                    edges.append((p[:-1], p, p[-1]))
        return dot_graph(f"{args.tree}_level_{n}", nodes, edges)
    return "".join(f"{path_text(p)} {triple_text(t)}\n" for p, t in zip(paths, level))


FAMILIES = {"plato": family_plato, "pythagoras": family_pythagoras, "fermat": family_fermat}


def cmd_family(args) -> str:
    t = FAMILIES[args.name](args.n)
    if args.format == "json":
        return dump_json({"family": args.name, "n": _s(args.n), "triple": triple_json(t)})
    return triple_text(t) + "\n"


def cmd_rhind(args) -> str:
    decomps = rhind_two_term(args.n)
    if args.format == "json":
        return dump_json({
            "target": f"2/{args.n}",
            "decompositions": [[_s(x) for x in d.terms] for d in decomps],
        })
    return "".join(f"{d}\n" for d in decomps)


def cmd_verify(args) -> tuple[str, int]:
    for name in ("max_c", "max_p", "depth"):
        if getattr(args, name) < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    results = run_all(max_c=args.max_c, max_p=args.max_p, depth=args.depth)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        out = dump_json({
            "ok": not failed,
            "suites": [
                {"name": r.name, "count": _s(r.count), "unit": r.unit, "ok": r.ok, "failure": r.failure,
                 "counterexample": None if r.ok else repr(r.counterexample)}
                for r in results
            ],
        })
    else:
        lines = [r.line() for r in results]
        if failed:
            lines.append(f"FAILED: {', '.join(r.name for r in failed)}")
        else:
            n = results[1].count
            lines.append(f"ok: {n} PPT{'' if n == 1 else 's'} round-tripped on both trees")
        out = "\n".join(lines) + "\n"
    return out, 2 if failed else 0


COMMANDS = {
    "info": cmd_info,
    "children": cmd_children,
    "parent": cmd_parent,
    "navigate": cmd_navigate,
    "locate": cmd_locate,
    "level": cmd_level,
    "family": cmd_family,
    "rhind": cmd_rhind,
    "verify": cmd_verify,
}

DOT_COMMANDS = {"level", "navigate"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tree", choices=[k.value for k in TreeKind], default="bh", type=str.lower)
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--max-depth", type=int, default=forest.DEFAULT_MAX_DEPTH)

    parser = _Parser(prog="ppt", description="Primitive Pythagorean triples, Fibonacci boxes and their trees.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def triple_cmd(name, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        for side in "abc":
            p.add_argument(side, type=int)
        return p

    triple_cmd("info", "everything known about one triple")
    triple_cmd("children", "the three children of a PPT")
    triple_cmd("parent", "the parent of a PPT and its letter")
    triple_cmd("locate", "path code of a PPT")
    p = sub.add_parser("navigate", parents=[common], help="follow a path code from (3,4,5)")
    p.add_argument("path", nargs="?", default="")
    p = sub.add_parser("level", parents=[common], help="all triples on one level")
    p.add_argument("n", type=int)
    p = sub.add_parser("family", parents=[common], help="n-th member of a classical family")
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("n", type=int)
    p = sub.add_parser("rhind", parents=[common], help="two-term expansions of 2/n")
    p.add_argument("n", type=int)
    p = sub.add_parser("verify", parents=[common], help="run the invariant suites")
    p.add_argument("--max-c", type=int, default=3000)
    p.add_argument("--max-p", type=int, default=200)
    p.add_argument("--depth", type=int, default=6)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.format == "dot" and args.command not in DOT_COMMANDS:
            raise UsageError("dot output is only available for `level` and `navigate`")
        result = COMMANDS[args.command](args)
    except (PptError, UsageError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        if exc.counterexample is not None:
            print(f"counterexample: {exc.counterexample!r}", file=sys.stderr)
        return 2
    out, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
