"""Invariant suites shared by ``ppt verify`` and the test-suite.

Every suite walks a finite family of inputs in a fixed order and stops at
the first failing input, which is reported as the counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import _kernels, forest
from .boxcore import (
    ROOT_BOX,
    FibBox,
    PptTriple,
    area_perimeter_of,
    box_from_triple,
    family_fermat,
    family_plato,
    family_pythagoras,
    is_primitive_box,
    normalize_box,
    pell_shift,
    primitive_boxes,
    radii_of,
    triple_from_box,
)
from .circlegeom import (
    check_layout,
    circle_layout,
    descartes_check,
    inexradii_of_triangle,
    reflect,
    tangency_points,
)
from .egypt import ef_four_term, ef_three_term, ef_two_term_hypotenuse, rhind_brute_force, rhind_two_term
from .errors import InvariantViolation, PptError
from .forest import LETTERS, TreeKind


@dataclass
class SuiteResult:
    name: str
    count: int
    unit: str
    failure: Optional[str] = None
    counterexample: object = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def line(self) -> str:
        if self.ok:
            return f"{self.name}: ok ({self.count} {self.unit})"
        return f"{self.name}: FAIL at {_fmt(self.counterexample)}: {self.failure}"


def _fmt(x) -> str:
    if isinstance(x, FibBox):
        return str(x)
    if isinstance(x, tuple) and all(isinstance(v, int) for v in x):
        return ",".join(str(v) for v in x)
    return repr(x)


def _check(cond: bool, msg: str, where) -> None:
    if not cond:
        raise InvariantViolation(msg, where)


def _run(name: str, unit: str, body: Callable[[], int]) -> SuiteResult:
    try:
        return SuiteResult(name, body(), unit)
    except (InvariantViolation, PptError) as exc:
        return SuiteResult(name, 0, unit, f"{type(exc).__name__}: {exc}", getattr(exc, "counterexample", None))


# -- trees -------------------------------------------------------------------

def check_trees(depth: int) -> int:
    """Box/matrix agreement, parent-of-child, uniqueness and circle promotion to ``depth``."""
    nodes_seen = 0
    for kind in TreeKind:
        seen = set()
        level = [forest.ROOT_TRIPLE]
        for d in range(depth + 1):
            enumerated = forest.enumerate_level(kind, d, max_depth=max(depth, forest.DEFAULT_MAX_DEPTH))
            _check(enumerated == level, f"{kind.value} level {d} enumeration differs from node-wise children",
                   enumerated[0] if enumerated else None)
            nxt = []
            for node in level:
                _check(node not in seen, f"{kind.value}: duplicate node", node)
                seen.add(node)
                kids = forest.children(kind, node)
                if kind is TreeKind.BH:
                    pr = radii_of(box_from_triple(node))
                    promoted = (pr.r3, pr.r4, pr.r2)
                for letter, kid in zip(LETTERS, kids):
                    back = forest.parent(kind, kid)
                    _check(back == (node, letter), f"{kind.value}: parent of child {letter} is {back}", node)
                    if kind is TreeKind.BH:
                        _check(radii_of(box_from_triple(kid)).r1 == promoted[LETTERS.index(letter)],
                               f"circle promotion fails for child {letter}", node)
                if d < depth:
                    nxt.extend(kids)
            nodes_seen += len(level)
            level = nxt
    return nodes_seen // 2


# -- oracle round trips ----------------------------------------------------------

def oracle_triples(max_c: int) -> list[PptTriple]:
    return [PptTriple(*row) for row in _kernels.ppt_sieve(max_c).tolist()]


def check_roundtrips(max_c: int) -> int:
    triples = oracle_triples(max_c)
    for kind in TreeKind:
        paths = set()
        for t in triples:
            _check(triple_from_box(box_from_triple(t)) == t, "box round trip fails", t)
            path = forest.locate(kind, t)
            _check(path not in paths, f"{kind.value}: path {path!r} reused", t)
            paths.add(path)
            _check(forest.navigate(kind, path) == t, f"{kind.value}: navigate({path!r}) misses", t)
    return len(triples)


# -- boxes ---------------------------------------------------------------------

def check_box(box: FibBox) -> None:
    q, qq, p, pp = box.entries()
    _check(qq == p - q and pp == p + q, "key equations", box)
    _check(qq % 2 == 1 and pp % 2 == 1 and (q % 2) != (p % 2), "parity", box)
    x, y = Fraction(q, p), Fraction(qq, pp)
    _check(x * y + x + y == 1, "xy + x + y = 1", box)
    _check(x == Fraction(pp - qq, pp + qq) and y == Fraction(p - q, p + q), "cross identity", box)
    _check(q * pp + qq * p == p * pp - q * qq == p * p + q * q, "hypotenuse three ways", box)
    a, b, c = t = triple_from_box(box)
    r1, r2, r3, r4 = radii_of(box)
    _check(r1 + r2 + r3 == r4, "r1 + r2 + r3 = r4", box)
    _check(a == r1 + r2 == r4 - r3 and b == r1 + r3 == r4 - r2 and c == r2 + r3 == r4 - r1,
           "sides as radius sums", box)
    area, perimeter = area_perimeter_of(box)
    _check(r1 * r4 == r2 * r3 == area and 2 * area == a * b, "r1 r4 = r2 r3 = area", box)
    _check(perimeter == r1 + r2 + r3 + r4 == a + b + c, "perimeter", box)
    _check(box_from_triple(t) == box, "box round trip", box)


def check_normalize(max_p_prime: int) -> int:
    """Every box (primitive or not) with ``p' <= max_p_prime`` normalises correctly."""
    n = 0
    for p in range(2, max_p_prime):
        for q in range(1, min(p, max_p_prime - p + 1)):
            box = FibBox.from_column(q, p)
            core, m = normalize_box(box)
            _check(is_primitive_box(core), "normalize_box result not primitive", box)
            big, small = triple_from_box(box), triple_from_box(core)
            _check(sorted(big[:2]) == sorted(m * v for v in small[:2]) and big[2] == m * small[2],
                   f"triple is not {m} x core", box)
            n += 1
    return n


def check_boxes(max_p_prime: int) -> int:
    n = 0
    for box in primitive_boxes(max_p_prime):
        check_box(box)
        n += 1
    check_normalize(max_p_prime)
    return n


# -- families --------------------------------------------------------------------

def check_families(n_max: int = 20, pell_steps: int = 30, binary_max: int = 1024, middle_max: int = 100) -> int:
    for n in range(n_max + 1):
        _check(forest.navigate(TreeKind.BH, "A" * n) == family_plato(n + 1), f"BH A^{n}", n)
        _check(forest.navigate(TreeKind.BH, "B" * n) == family_fermat(n), f"BH B^{n}", n)
        _check(forest.navigate(TreeKind.BH, "C" * n) == family_pythagoras(n + 1), f"BH C^{n}", n)
    box = ROOT_BOX
    for i in range(pell_steps):
        box = pell_shift(box)
        a, b, _ = triple_from_box(box)
        _check(is_primitive_box(box) and abs(a - b) == 1, f"Pell shift {i + 1}", box)
    for n in range(1, binary_max + 1):
        _check(forest.navigate(TreeKind.NEW, forest.pythagoras_path(n)) == family_pythagoras(n),
               "binary subtree", n)
    for n in range(1, middle_max + 1):
        _check(forest.new_children(family_pythagoras(n))[1] == family_plato(n + 1), "middle successor", n)
    return n_max + 1 + pell_steps + binary_max + middle_max


# -- Egyptian fractions ----------------------------------------------------------------

def check_egypt(max_p_prime: int, rhind_max: int = 101) -> int:
    n = 0
    for box in primitive_boxes(max_p_prime):
        r1, r2, r3, r4 = radii_of(box)
        four, three, two = ef_four_term(box), ef_three_term(box), ef_two_term_hypotenuse(box)
        _check(len(set(four.terms)) == 4, "four-term denominators not distinct", box)
        _check(sum(four.terms) == sum(triple_from_box(box)), "four-term denominators != perimeter", box)
        _check(four.target - Fraction(1, r1) == three.target
               and set(three.terms) == set(four.terms) - {r1}, "three-term is four-term minus 1/r1", box)
        _check(three.target - Fraction(1, r4) == two.target
               and set(two.terms) == set(three.terms) - {r4}, "two-term is three-term minus 1/r4", box)
        n += 1
    for k in range(3, rhind_max + 1, 2):
        got = {d.terms for d in rhind_two_term(k)}
        _check(got == rhind_brute_force(k), "rhind_two_term differs from brute force", k)
    return n


# -- geometry --------------------------------------------------------------------

def check_geometry(max_p_prime: int) -> int:
    n = 0
    for box in primitive_boxes(max_p_prime):
        layout = circle_layout(box)
        _check(not check_layout(layout), "tangency distances", box)
        tang = tangency_points(layout)
        u, v, w = tang.line
        _check(all(u * tang[k][0] + v * tang[k][1] == w for k in tang.on_line), "collinear four", box)
        _check(all(u * tang[k][0] + v * tang[k][1] != w for k in tang.off_line), "off-line pair", box)
        p1, p2 = (tang[k] for k in tang.off_line)
        _check(reflect(p1, tang.line) == p2 and reflect(p2, tang.line) == p1, "reflection pairing", box)
        _check(descartes_check(layout.radii), "Descartes equation", box)
        _check(inexradii_of_triangle(triple_from_box(box)) == tuple(sorted(layout.radii)), "in/ex-radii", box)
        n += 1
    return n


def run_all(max_c: int = 3000, max_p: int = 200, depth: int = 6) -> list[SuiteResult]:
    return [
        _run("trees", f"nodes per tree to depth {depth}", lambda: check_trees(depth)),
        _run("oracle", "PPTs" if max_c >= 13 else "PPT", lambda: check_roundtrips(max_c)),
        _run("boxes", "primitive boxes", lambda: check_boxes(max_p)),
        _run("families", "family checks", check_families),
        _run("egyptian", "primitive boxes", lambda: check_egypt(max_p)),
        _run("geometry", "primitive boxes", lambda: check_geometry(max_p)),
    ]
