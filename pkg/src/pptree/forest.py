"""The two ternary trees of primitive Pythagorean triples.

Both trees are rooted at (3, 4, 5) and every PPT occurs exactly once in each.
Children are produced two ways, by a box/half-angle rule and by a constant
3x3 matrix acting on the column vector ``(a, b, c)``; the two routes are
compared on every call.

Path codes are words over ``A``, ``B``, ``C`` (first, middle, last child).
"""

from __future__ import annotations

import enum
from itertools import product
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .boxcore import (
    ROOT_TRIPLE,
    FibBox,
    Hat,
    PptTriple,
    box_from_hat,
    box_from_triple,
    hats_of_triple,
    triple_from_box,
)
from .errors import DepthLimit, DomainError, InvalidTriple, InvariantViolation, MalformedPath

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

LETTERS = "ABC"
DEFAULT_MAX_DEPTH = 12


class TreeKind(enum.Enum):
    BH = "bh"
    NEW = "new"

    @classmethod
    def parse(cls, name) -> "TreeKind":
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            raise DomainError(f"unknown tree {name!r}; expected 'bh' or 'new'") from None


class Family(enum.Enum):
    PLATO = "Plato"
    PYTHAGORAS = "Pythagoras"
    FERMAT_PELL = "FermatPell"


# Barning-Hall: (Plato, Fermat, Pythagoras) children
BH_MATRICES: tuple[Matrix, Matrix, Matrix] = (
    ((-1, 2, 2), (-2, 1, 2), (-2, 2, 3)),
    ((1, 2, 2), (2, 1, 2), (2, 2, 3)),
    ((1, -2, 2), (2, -1, 2), (2, -2, 3)),
)

# New tree: HAT maps q/p -> 2q/(p+q), (p-q)/2p, (p+q)/2p rewritten via
# p^2 = (a+c)/2, q^2 = (c-a)/2, pq = b/2
NEW_MATRICES: tuple[Matrix, Matrix, Matrix] = (
    ((2, 1, -1), (-2, 2, 2), (-2, 1, 3)),
    ((2, 1, 1), (2, -2, 2), (2, -1, 3)),
    ((2, -1, 1), (2, 2, 2), (2, 1, 3)),
)


def bh_matrices() -> tuple[Matrix, Matrix, Matrix]:
    return BH_MATRICES


def new_matrices() -> tuple[Matrix, Matrix, Matrix]:
    return NEW_MATRICES


def matrices(tree) -> tuple[Matrix, Matrix, Matrix]:
    return BH_MATRICES if TreeKind.parse(tree) is TreeKind.BH else NEW_MATRICES


def mat_vec(m: Matrix, v: Sequence[int]) -> tuple[int, int, int]:
    return tuple(r[0] * v[0] + r[1] * v[1] + r[2] * v[2] for r in m)


def det3(m: Matrix) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adjugate3(m: Matrix) -> Matrix:
    (a, b, c), (d, e, f), (g, h, i) = m
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def _trusted(v) -> PptTriple:
    # matrix images of PPTs are PPTs; skip revalidation on hot paths
    return tuple.__new__(PptTriple, (int(v[0]), int(v[1]), int(v[2])))


def _as_ppt(t) -> PptTriple:
    if isinstance(t, PptTriple):
        return t
    try:
        return PptTriple(*t)
    except TypeError:
        raise InvalidTriple(f"expected three integers, got {t!r}") from None


def parse_path(path: str) -> str:
    word = path.strip().upper()
    bad = set(word) - set(LETTERS)
    if bad:
        raise MalformedPath(f"path {path!r} contains letters outside A/B/C: {''.join(sorted(bad))}")
    return word


# -- Barning-Hall ----------------------------------------------------------

def _bh_box_children(box: FibBox) -> tuple[FibBox, FibBox, FibBox]:
    # flip second column / both / first column, keep the new first row
    q, qq, p, pp = box.entries()
    rows = ((q, pp), (p, pp), (p, qq))
    return tuple(FibBox.from_column(r0, r0 + r1) for r0, r1 in rows)


def bh_children(t) -> tuple[PptTriple, PptTriple, PptTriple]:
    t = _as_ppt(t)
    by_matrix = tuple(mat_vec(m, t) for m in BH_MATRICES)
    by_box = tuple(triple_from_box(b) for b in _bh_box_children(box_from_triple(t)))
    if by_matrix != by_box:
        raise InvariantViolation(
            f"Barning-Hall children of {tuple(t)}: matrices give {by_matrix}, "
            f"boxes give {tuple(map(tuple, by_box))}", t)
    return tuple(_trusted(v) for v in by_box)


def bh_parent(t) -> Optional[tuple[PptTriple, str]]:
    """Parent and the letter ``t`` hangs under, or ``None`` at the root.

    The two row differences of the child box become the parent's first
    column (smaller on top).
    """
    t = _as_ppt(t)
    if t == ROOT_TRIPLE:
        return None
    box = box_from_triple(t)
    d1, d2 = abs(box.q - box.q_prime), box.p_prime - box.p
    parent = triple_from_box(FibBox.from_column(min(d1, d2), max(d1, d2)))

    candidates = []
    for letter, m in zip(LETTERS, BH_MATRICES):
        det = det3(m)
        v = tuple(x // det for x in mat_vec(adjugate3(m), t))
        if min(v) > 0 and v[2] < t[2] and v[0] ** 2 + v[1] ** 2 == v[2] ** 2:
            candidates.append((v, letter))
    if len(candidates) != 1 or candidates[0][0] != tuple(parent):
        raise InvariantViolation(
            f"Barning-Hall parent of {tuple(t)}: boxes give {tuple(parent)}, inverse matrices give {candidates}",
            t)
    letter = candidates[0][1]
    if bh_children(parent)[LETTERS.index(letter)] != t:
        raise InvariantViolation(f"{tuple(t)} is not child {letter} of {tuple(parent)}", t)
    return parent, letter


# -- New tree -------------------------------------------------------------

def new_child_hats(h: Hat) -> tuple[Hat, Hat, Hat]:
    q, p = h.num, h.den
    return Hat(2 * q, p + q), Hat(p - q, 2 * p), Hat(p + q, 2 * p)


def new_children(t) -> tuple[PptTriple, PptTriple, PptTriple]:
    t = _as_ppt(t)
    primary, _ = hats_of_triple(t)
    by_hat = tuple(triple_from_box(box_from_hat(h)) for h in new_child_hats(primary))
    by_matrix = tuple(mat_vec(m, t) for m in NEW_MATRICES)
    if by_matrix != by_hat:
        raise InvariantViolation(
            f"New-tree children of {tuple(t)}: matrices give {by_matrix}, "
            f"HAT maps give {tuple(map(tuple, by_hat))}", t)
    return tuple(_trusted(v) for v in by_hat)


def new_parent_hat(h: Hat) -> Optional[tuple[Hat, str]]:
    """Halve the even entry, replace the other by the positive difference."""
    qh, ph = h.num, h.den
    if (qh, ph) == (1, 2):
        return None
    if qh % 2 == 0:
        return Hat(qh // 2, ph - qh // 2), "A"
    half = ph // 2
    if qh < half:
        return Hat(half - qh, half), "B"
    return Hat(qh - half, half), "C"


def new_parent(t) -> Optional[tuple[PptTriple, str]]:
    t = _as_ppt(t)
    primary, _ = hats_of_triple(t)
    step = new_parent_hat(primary)
    if step is None:
        return None
    hat, letter = step
    parent = triple_from_box(box_from_hat(hat))
    if new_children(parent)[LETTERS.index(letter)] != t:
        raise InvariantViolation(f"{tuple(t)} is not child {letter} of {tuple(parent)}", t)
    return parent, letter


# -- both trees --------------------------------------------------------------

def children(tree, t) -> tuple[PptTriple, PptTriple, PptTriple]:
    return bh_children(t) if TreeKind.parse(tree) is TreeKind.BH else new_children(t)


def parent(tree, t) -> Optional[tuple[PptTriple, str]]:
    return bh_parent(t) if TreeKind.parse(tree) is TreeKind.BH else new_parent(t)


def navigate(tree, path: str) -> PptTriple:
    kind = TreeKind.parse(tree)
    step = bh_children if kind is TreeKind.BH else new_children
    node = ROOT_TRIPLE
    for letter in parse_path(path):
        node = step(node)[LETTERS.index(letter)]
    return node


def trace(tree, path: str) -> list[PptTriple]:
    """Nodes visited by ``path``, root first."""
    kind = TreeKind.parse(tree)
    step = bh_children if kind is TreeKind.BH else new_children
    nodes = [ROOT_TRIPLE]
    for letter in parse_path(path):
        nodes.append(step(nodes[-1])[LETTERS.index(letter)])
    return nodes


def locate(tree, t) -> str:
    """Path code of ``t``; walks parents up to the root (c strictly decreases)."""
    kind = TreeKind.parse(tree)
    t = _as_ppt(t)
    up = bh_parent if kind is TreeKind.BH else new_parent
    letters = []
    node = t
    while True:
        step = up(node)
        if step is None:
            break
        node, letter = step
        letters.append(letter)
    path = "".join(reversed(letters))
    if navigate(kind, path) != t:
        raise InvariantViolation(f"path {path!r} does not lead back to {tuple(t)}", t)
    return path


def level_array(tree, n: int, max_depth: int = DEFAULT_MAX_DEPTH) -> np.ndarray:
    """Level ``n`` as an ``(3**n, 3)`` array in lexicographic path order.

    int64 while values stay small, object (Python int) beyond that.
    """
    if n < 0:
        raise DomainError(f"level must be >= 0, got {n}")
    if n > max_depth:
        raise DepthLimit(f"level {n} exceeds the depth cap {max_depth}")
    mats = matrices(tree)
    mats_i64 = np.array(mats, dtype=np.int64)
    nodes = np.array([ROOT_TRIPLE], dtype=np.int64)
    # every child hypotenuse is below 8 * parent hypotenuse
    for _ in range(n):
        if nodes.dtype == np.int64 and int(nodes[:, 2].max()) * 8 < _kernels.INT64_SAFE:
            nodes = _kernels.expand_level(nodes, mats_i64)
        else:
            nodes = _kernels.expand_level_numpy(nodes.astype(object), np.array(mats, dtype=object))
    return nodes


def enumerate_level(tree, n: int, max_depth: int = DEFAULT_MAX_DEPTH) -> list[PptTriple]:
    return [_trusted(row) for row in level_array(tree, n, max_depth).tolist()]


def level_paths(n: int):
    """Path codes of level ``n`` in the order used by :func:`enumerate_level`."""
    return ("".join(w) for w in product(LETTERS, repeat=n))


def pythagoras_path(n: int) -> str:
    """New-tree path of B(n): binary numeral of ``n`` minus its leading 1, 0 -> A, 1 -> C."""
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    return bin(n)[3:].replace("0", "A").replace("1", "C")


def classify_families(t) -> frozenset[Family]:
    a, b, c = _as_ppt(t)
    out = set()
    if c - a == 2:
        out.add(Family.PLATO)
    if c - b == 1:
        out.add(Family.PYTHAGORAS)
    if abs(a - b) == 1:
        out.add(Family.FERMAT_PELL)
    return frozenset(out)
