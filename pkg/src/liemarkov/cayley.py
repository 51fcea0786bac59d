"""Finite semigroups as Cayley tables: validation, relabeling, enumeration.

A Cayley table of order k is a k x k array ``table`` with entries in
{0..k-1}, where ``table[i][j]`` is the index of the product a_i * a_j.
Entries are 0-based everywhere inside the package; the text file format
(and every rendered report) uses 1-based indices.

Isomorphism is relabeling by a permutation; anti-isomorphism is
multiplication reversal, i.e. table transposition.  Enumeration returns
one canonical representative per isomorphism class and deliberately does
NOT merge anti-isomorphic classes, because reversal can change the
derived Markov model drastically (the left regular representation is not
reversal-invariant).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

Perm = tuple[int, ...]
"""A permutation of {0..k-1} stored as an image array: p[i] is the image of i."""

MAX_ENUM_ORDER = 4


class MalformedTableError(ValueError):
    """Raised for out-of-range entries or a ragged table."""


class CayleyFormatError(ValueError):
    """Raised by the text-format parser; message names block and line."""


@dataclass(frozen=True)
class CayleyTable:
    """Multiplication table of a (candidate) semigroup of order k."""

    order: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = self.order
        if k < 1:
            raise MalformedTableError(f"order must be >= 1, got {k}")
        if len(self.table) != k or any(len(row) != k for row in self.table):
            raise MalformedTableError(f"table is not {k}x{k}")
        for row in self.table:
            for x in row:
                if not 0 <= x < k:
                    raise MalformedTableError(
                        f"entry {x} out of range 0..{k - 1}"
                    )

    def __lt__(self, other: "CayleyTable") -> bool:
        return self.table < other.table


def make_table(rows: Sequence[Sequence[int]]) -> CayleyTable:
    """Build a CayleyTable from nested 0-based sequences."""
    return CayleyTable(len(rows), tuple(tuple(row) for row in rows))


def is_associative(t: CayleyTable) -> bool:
    """Check (a*b)*c == a*(b*c) for all k^3 triples."""
    m = t.table
    rng = range(t.order)
    for a in rng:
        ma = m[a]
        for b in rng:
            mab = m[ma[b]]
            mb = m[b]
            for c in rng:
                if mab[c] != ma[mb[c]]:
                    return False
    return True


def identity_perm(k: int) -> Perm:
    return tuple(range(k))


def all_perms(k: int) -> list[Perm]:
    return [tuple(p) for p in itertools.permutations(range(k))]


def compose(p: Perm, q: Perm) -> Perm:
    """(p o q)(x) = p(q(x))."""
    return tuple(p[q[x]] for x in range(len(p)))


def invert(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def apply_perm(t: CayleyTable, p: Perm) -> CayleyTable:
    """Relabel elements by p: result r has r[p(i)][p(j)] = p(t[i][j])."""
    if len(p) != t.order:
        raise MalformedTableError(
            f"permutation on {len(p)} points applied to order-{t.order} table"
        )
    k = t.order
    m = t.table
    out = [[0] * k for _ in range(k)]
    for i in range(k):
        pi = p[i]
        for j in range(k):
            out[pi][p[j]] = p[m[i][j]]
    return CayleyTable(k, tuple(tuple(row) for row in out))


def reverse(t: CayleyTable) -> CayleyTable:
    """The anti-isomorphic copy: reversed multiplication, i.e. the transpose."""
    return CayleyTable(t.order, tuple(zip(*t.table)))


def canonical_form(t: CayleyTable) -> CayleyTable:
    """Lexicographically minimal relabeling (row-major entry comparison).

    Two tables are isomorphic iff their canonical forms are equal.
    """
    k = t.order
    best = t.table
    for p in itertools.permutations(range(k)):
        cand = _relabel_rows(t.table, p, k)
        if cand < best:
            best = cand
    return CayleyTable(k, best)


def _relabel_rows(m, p, k) -> tuple[tuple[int, ...], ...]:
    inv = [0] * k
    for i, x in enumerate(p):
        inv[x] = i
    # row i of the relabeled table is p(t[inv(i)][inv(j)])
    return tuple(
        tuple(p[m[inv_i][inv_j]] for inv_j in inv) for inv_i in inv
    )


def enumerate_semigroups(k: int) -> list[CayleyTable]:
    """All semigroups of order k up to isomorphism, canonical and sorted.

    Depth-first fill of the table in row-major order with incremental
    associativity pruning: after each placement, every triple whose four
    participating products just became defined is checked.  A completed
    table is kept only if it equals its own canonical form, so the result
    holds exactly one representative per isomorphism class.
    Anti-isomorphic classes are kept separate.
    """
    if not 1 <= k <= MAX_ENUM_ORDER:
        raise ValueError(
            f"order {k} not supported: enumeration is limited to "
            f"1 <= k <= {MAX_ENUM_ORDER}"
        )
    found: list[tuple[tuple[int, ...], ...]] = []
    cells = [(i, j) for i in range(k) for j in range(k)]
    m = [[-1] * k for _ in range(k)]
    # occ[v] lists the (a, b) cells currently holding value v, so triples in
    # which a fresh cell participates as an *outer* product are found fast.
    occ: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    rng = range(k)
    perms = list(itertools.permutations(range(k)))

    def consistent(i: int, j: int) -> bool:
        v = m[i][j]
        # (i, j, c): products t[i][j]=v and t[j][c]; outer t[v][c], t[i][t[j][c]]
        mj = m[j]
        mv = m[v]
        mi = m[i]
        for c in rng:
            jc = mj[c]
            if jc >= 0:
                left = mv[c]
                right = mi[jc]
                if left >= 0 and right >= 0 and left != right:
                    return False
        # (a, i, j): products t[a][i], t[i][j]=v; outer t[t[a][i]][j], t[a][v]
        for a in rng:
            ai = m[a][i]
            if ai >= 0:
                left = m[ai][j]
                right = m[a][v]
                if left >= 0 and right >= 0 and left != right:
                    return False
        # (a, b, j) with t[a][b] == i: outer product on the left is the new cell
        for (a, b) in occ[i]:
            bj = m[b][j]
            if bj >= 0:
                right = m[a][bj]
                if right >= 0 and right != v:
                    return False
        # (i, b, c) with t[b][c] == j: outer product on the right is the new cell
        for (b, c) in occ[j]:
            ib = m[i][b]
            if ib >= 0:
                left = m[ib][c]
                if left >= 0 and left != v:
                    return False
        return True

    def fill(pos: int):
        if pos == len(cells):
            table = tuple(tuple(row) for row in m)
            for p in perms:
                if _relabel_rows(table, p, k) < table:
                    return
            found.append(table)
            return
        i, j = cells[pos]
        for v in rng:
            m[i][j] = v
            occ[v].append((i, j))
            if consistent(i, j):
                fill(pos + 1)
            occ[v].pop()
        m[i][j] = -1

    fill(0)
    found.sort()
    return [CayleyTable(k, t) for t in found]


def anti_iso_census(tables: Iterable[CayleyTable]) -> tuple[int, int]:
    """Split canonical class representatives into self-dual and paired.

    Returns (self_dual_count, pair_count): the number of classes equal to
    the class of their own reversal, and the number of unordered
    {class, reversed class} pairs.  self_dual + 2 * pairs == total.
    """
    tables = list(tables)
    keys = {t.table for t in tables}
    self_dual = 0
    paired = 0
    for t in tables:
        rev = canonical_form(reverse(t))
        if rev.table not in keys:
            raise ValueError(
                "input is not closed under reversal: expected canonical "
                "representatives of every class of one order"
            )
        if rev.table == t.table:
            self_dual += 1
        else:
            paired += 1
    if paired % 2:
        raise AssertionError("reversal pairing must be even")
    return self_dual, paired // 2


# --- text format -----------------------------------------------------------
#
# One or more blocks; each block is k lines of k whitespace-separated
# 1-based integers; blocks are separated by blank lines; '#' starts a
# comment line.


def parse_tables(text: str) -> list[CayleyTable]:
    """Parse the Cayley-table text format (1-based entries)."""
    blocks: list[list[tuple[int, list[int]]]] = []
    current: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if current:
                blocks.append(current)
                current = []
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise CayleyFormatError(
                f"block {len(blocks) + 1}, line {lineno}: "
                f"non-integer token in {line!r}"
            ) from None
        current.append((lineno, values))
    if current:
        blocks.append(current)

    tables = []
    for b, block in enumerate(blocks, start=1):
        k = len(block)
        rows = []
        for lineno, values in block:
            if len(values) != k:
                raise CayleyFormatError(
                    f"block {b}, line {lineno}: expected {k} entries "
                    f"(block has {k} rows), got {len(values)}"
                )
            for x in values:
                if not 1 <= x <= k:
                    raise CayleyFormatError(
                        f"block {b}, line {lineno}: entry {x} outside 1..{k}"
                    )
            rows.append(tuple(x - 1 for x in values))
        tables.append(CayleyTable(k, tuple(rows)))
    if not tables:
        raise CayleyFormatError("no table blocks found")
    return tables


def format_tables(tables: Iterable[CayleyTable], header: str | None = None) -> str:
    """Render tables in the text format (1-based), blocks separated by blank lines."""
    chunks = []
    if header:
        chunks.append("\n".join("# " + line for line in header.splitlines()))
    for t in tables:
        chunks.append(
            "\n".join(" ".join(str(x + 1) for x in row) for row in t.table)
        )
    return "\n\n".join(chunks) + "\n"
