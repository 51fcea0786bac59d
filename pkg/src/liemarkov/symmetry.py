"""Permutation symmetries of model subspaces.

A state permutation is a symmetry of a model when conjugating every rate
matrix by the corresponding permutation matrix lands back in the model.
Conjugation preserves nonnegativity of off-diagonal entries, so testing
span preservation is equivalent to testing the stochastic cone.  With
k <= 4 the maximal symmetry group is found by brute force over all k!
candidates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .cayley import Perm, compose, identity_perm, invert
from .linalg import Matrix
from .modelgen import ModelSubspace, contains


@dataclass(frozen=True)
class SymmetryGroup:
    order_k: int
    elements: tuple[Perm, ...]
    name: str

    def __len__(self) -> int:
        return len(self.elements)


def perm_matrix(p: Perm) -> Matrix:
    """Standard permutation matrix: entry (p(j), j) = 1.

    Satisfies perm_matrix(p o q) == perm_matrix(p) @ perm_matrix(q).
    """
    k = len(p)
    return tuple(
        tuple(1 if p[j] == i else 0 for j in range(k)) for i in range(k)
    )


def perm_order(p: Perm) -> int:
    """Multiplicative order of a permutation."""
    n = 1
    q = p
    e = identity_perm(len(p))
    while q != e:
        q = compose(q, p)
        n += 1
    return n


def cycle_string(p: Perm) -> str:
    """Cycle notation with 1-based points; identity renders as 'e'."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = p[x]
        parts.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
    return "".join(parts) if parts else "e"


def parse_perm(text: str, k: int) -> Perm:
    """Parse 1-based cycle notation like '(1 2)(3 4)'; 'e' or '()' is identity."""
    text = text.strip()
    image = list(range(k))
    if text in ("e", "()", ""):
        return tuple(image)
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"bad cycle notation: {text!r}")
    moved: set[int] = set()
    for part in text[1:-1].split(")("):
        points = [int(tok) - 1 for tok in part.replace(",", " ").split()]
        if any(not 0 <= x < k for x in points) or len(set(points)) != len(points):
            raise ValueError(f"bad cycle {part!r} for k={k}")
        if moved & set(points):
            raise ValueError(f"cycles are not disjoint in {text!r}")
        moved.update(points)
        for a, b in zip(points, points[1:] + points[:1]):
            image[a] = b
    return tuple(image)


def symmetry_group(m: ModelSubspace) -> SymmetryGroup:
    """The maximal group of state permutations preserving the span.

    Testing all k! candidates makes maximality automatic; membership of
    every conjugated rref basis element is decided exactly.
    """
    elements = []
    for p in itertools.permutations(range(m.order)):
        if all(
            contains(m, linalg.conjugate(b, p)) is not None
            for b in m.rref_matrices()
        ):
            elements.append(tuple(p))
    g = tuple(sorted(elements))
    return SymmetryGroup(m.order, g, name_group_elements(m.order, g))


def is_closed_group(elements: tuple[Perm, ...]) -> bool:
    """Group axioms for a set of permutations (closure gives the rest)."""
    s = set(elements)
    if identity_perm(len(elements[0])) not in s:
        return False
    return all(compose(p, q) in s for p in s for q in s) and all(
        invert(p) in s for p in s
    )


def name_group_elements(k: int, elements: tuple[Perm, ...]) -> str:
    """Identify the abstract type of a subgroup of S_k, k <= 4.

    Order plus element orders distinguish every subgroup type that
    occurs: Z4 has an element of order 4 where V4 does not, S3 is the
    only order-6 subgroup of S4, and so on.
    """
    n = len(elements)
    orders = sorted(perm_order(p) for p in elements)
    if n == 1:
        return "trivial"
    if n == 2:
        return "Z2"
    if n == 3:
        return "Z3"
    if n == 4:
        return "Z4" if 4 in orders else "V4"
    if n == 6 and k <= 4:
        return "S3"
    if n == 8 and k == 4:
        return "D4"
    if n == 12 and k == 4:
        return "A4"
    if n == 24 and k == 4:
        return "S4"
    return f"order-{n} subgroup"


def name_group(g: SymmetryGroup) -> str:
    return name_group_elements(g.order_k, g.elements)


def variant_count(g: SymmetryGroup) -> int:
    """Number of distinct isomorphic variants of a model: k! / |G|."""
    import math

    return math.factorial(g.order_k) // len(g.elements)
