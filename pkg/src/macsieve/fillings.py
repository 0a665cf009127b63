"""Skew shapes, coinversion-free fillings, and E_{lam/mu}(x;q,0).

A filling is coinversion-free when every triple (left neighbor a, cell b,
lower cell c in b's column) is an inversion triple: the entries increase
counter-clockwise, ties broken by role (b < c < a for equal values), and an
absent left neighbor counts as infinity, which forces b > c.  The predicate
``is_cof`` is the single source of truth; every construction validates
against it.

``macdonald_e`` computes the defining sum over all coinversion-free fillings
by a dynamic program over columns: a filling is determined by its column
sets, the arrangement of each column depends only on the previous column's
arrangement, and descent contributions are local to adjacent columns.  The
brute-force route ``macdonald_e_by_enumeration`` is kept as the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator

from .core import Composition, Partition, QPoly, conjugate, parse_partition, partition, partition_str
from .symfunc import MONOMIAL, SymPoly, sympoly_from_exponents


class NoValidFilling(Exception):
    """No coinversion-free arrangement exists for the requested column sets."""


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram outer/inner; inner may be empty for a straight shape.

    Cells are (row, col), 1-based, English notation: row i holds the cells
    (i, j) with inner_i < j <= outer_i.
    """

    outer: Partition
    inner: Partition = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer", partition(self.outer))
        object.__setattr__(self, "inner", partition(self.inner))
        if len(self.inner) > len(self.outer) or any(
            m > l for m, l in zip(self.inner, self.outer)
        ):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    # -- geometry -------------------------------------------------------------

    @property
    def ncols(self) -> int:
        return self.outer[0] if self.outer else 0

    @property
    def nrows(self) -> int:
        return len(self.outer)

    def inner_at(self, i: int) -> int:
        return self.inner[i - 1] if i - 1 < len(self.inner) else 0

    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(1, self.nrows + 1)
            for j in range(self.inner_at(i) + 1, self.outer[i - 1] + 1)
        ]

    def contains(self, i: int, j: int) -> bool:
        return (
            1 <= i <= self.nrows
            and self.inner_at(i) < j <= self.outer[i - 1]
        )

    def col_range(self, j: int) -> tuple[int, int]:
        """Rows of column j are lo+1 .. hi (possibly empty)."""
        outer_c = conjugate(self.outer)
        inner_c = conjugate(self.inner)
        hi = outer_c[j - 1] if j - 1 < len(outer_c) else 0
        lo = inner_c[j - 1] if j - 1 < len(inner_c) else 0
        return lo, hi

    def col_height(self, j: int) -> int:
        lo, hi = self.col_range(j)
        return hi - lo

    def col_heights(self) -> tuple[int, ...]:
        return tuple(self.col_height(j) for j in range(1, self.ncols + 1))

    def conjugate_shape(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    def is_straight(self) -> bool:
        return not self.inner

    # -- text -------------------------------------------------------------------

    @staticmethod
    def parse(text: str) -> "SkewShape":
        """Parse ``4,2,1`` or ``4,2,1/2,1``."""
        outer, _, inner = text.partition("/")
        return SkewShape(parse_partition(outer), parse_partition(inner) if inner else ())

    def __str__(self) -> str:
        if self.inner:
            return f"{partition_str(self.outer)}/{partition_str(self.inner)}"
        return partition_str(self.outer)


@dataclass(frozen=True)
class Filling:
    """Values on the cells of a skew shape; row i lists its cells left to
    right (inner cells skipped)."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        expect = [self.shape.outer[i] - self.shape.inner_at(i + 1) for i in range(self.shape.nrows)]
        if [len(r) for r in self.rows] != expect:
            raise ValueError("row lengths do not match the shape")

    def value(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - self.shape.inner_at(i) - 1]

    def column_values(self, j: int) -> list[int]:
        """Entries of column j, top to bottom."""
        lo, hi = self.shape.col_range(j)
        return [self.value(i, j) for i in range(lo + 1, hi + 1)]

    def column_sets(self) -> tuple[tuple[int, ...], ...]:
        """Per-column entry sets as ascending tuples (the canonical key)."""
        return tuple(
            tuple(sorted(self.column_values(j))) for j in range(1, self.shape.ncols + 1)
        )

    def weight(self, m: int | None = None) -> Composition:
        top = m if m is not None else max((v for r in self.rows for v in r), default=0)
        counts = [0] * top
        for r in self.rows:
            for v in r:
                counts[v - 1] += 1
        return tuple(counts)

    def label(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "rows": [list(r) for r in self.rows],
        }

    @staticmethod
    def from_json(data: dict) -> "Filling":
        shape = SkewShape(tuple(data["outer"]), tuple(data.get("inner", ())))
        return Filling(shape, tuple(tuple(r) for r in data["rows"]))

    def __repr__(self) -> str:
        return f"Filling({self.shape}: {self.label()})"


# ---------------------------------------------------------------------------
# The coinversion-free predicate
# ---------------------------------------------------------------------------


def _triple_ok(va: int | None, vb: int, vc: int) -> bool:
    """Inversion-triple test; va is None when the a-box is absent (infinity).

    Roles break ties: for equal values b(1) < c(2) < a(3).
    """
    if va is None:
        return vb > vc
    ka, kb, kc = (va, 3), (vb, 1), (vc, 2)
    return (kc < kb < ka) or (kb < ka < kc) or (ka < kc < kb)


def is_cof(filling: Filling) -> bool:
    """True iff every triple is an inversion triple and columns are distinct."""
    shape = filling.shape
    for j in range(1, shape.ncols + 1):
        lo, hi = shape.col_range(j)
        col = filling.column_values(j)
        if len(set(col)) != len(col):
            return False
        for bi in range(len(col)):
            rb = lo + 1 + bi
            va = filling.value(rb, j - 1) if shape.contains(rb, j - 1) else None
            for ci in range(bi + 1, len(col)):
                if not _triple_ok(va, col[bi], col[ci]):
                    return False
    return True


def descents(filling: Filling) -> set[tuple[int, int]]:
    """Cells whose in-shape left neighbor is strictly smaller."""
    shape = filling.shape
    out = set()
    for (i, j) in shape.cells():
        if shape.contains(i, j - 1) and filling.value(i, j - 1) < filling.value(i, j):
            out.add((i, j))
    return out


def maj(filling: Filling) -> int:
    """Sum of leg+1 over descents; leg of (i,j) is outer_i - j."""
    shape = filling.shape
    return sum(shape.outer[i - 1] - j + 1 for (i, j) in descents(filling))


# ---------------------------------------------------------------------------
# Column arrangement: greedy construction of the unique filling
# ---------------------------------------------------------------------------


def _arrange_column(entries: tuple[int, ...], lefts: list[int | None]) -> list[int] | None:
    """Place ``entries`` into a column, top to bottom, against left values.

    Greedy rule: each cell takes the largest unused entry that is <= its left
    neighbor (infinity when absent), else the largest unused.  Returns None
    when the result violates some triple, which signals that a search
    fallback is needed.
    """
    avail = sorted(entries)
    placed: list[int] = []
    for left in lefts:
        pick = None
        if left is None:
            pick = avail[-1]
        else:
            for v in reversed(avail):
                if v <= left:
                    pick = v
                    break
            if pick is None:
                pick = avail[-1]
        avail.remove(pick)
        placed.append(pick)
    return placed if _column_ok(placed, lefts) else None


def _column_ok(placed: list[int], lefts: list[int | None]) -> bool:
    for bi in range(len(placed)):
        for ci in range(bi + 1, len(placed)):
            if not _triple_ok(lefts[bi], placed[bi], placed[ci]):
                return False
    return True


def _search_column(entries: tuple[int, ...], lefts: list[int | None]) -> list[list[int]]:
    """All valid arrangements of a column; brute-force fallback and oracle."""
    from itertools import permutations

    return [list(p) for p in permutations(entries) if _column_ok(list(p), lefts)]


def from_column_sets(
    shape: SkewShape, sets: list[tuple[int, ...]] | tuple[tuple[int, ...], ...]
) -> Filling:
    """The unique coinversion-free filling with the given column sets.

    Built greedily column by column and validated; a full search backs up the
    greedy rule so that a greedy miss surfaces as a difference from the
    oracle in tests, not as a wrong answer.
    """
    sets = [tuple(sorted(s)) for s in sets]
    if len(sets) != shape.ncols:
        raise NoValidFilling(f"need {shape.ncols} column sets, got {len(sets)}")
    rows: list[list[int]] = [[] for _ in range(shape.nrows)]
    prev: dict[int, int] = {}
    for j in range(1, shape.ncols + 1):
        lo, hi = shape.col_range(j)
        if len(sets[j - 1]) != hi - lo:
            raise NoValidFilling(
                f"column {j} needs {hi - lo} entries, got {len(sets[j - 1])}"
            )
        if len(set(sets[j - 1])) != len(sets[j - 1]):
            raise NoValidFilling(f"column {j} entries not distinct")
        lefts: list[int | None] = [
            prev.get(r) if shape.contains(r, j - 1) else None for r in range(lo + 1, hi + 1)
        ]
        placed = _arrange_column(sets[j - 1], lefts)
        if placed is None:
            found = _search_column(sets[j - 1], lefts)
            if not found:
                raise NoValidFilling(f"column {j}: sets {sets[j - 1]} admit no arrangement")
            placed = found[0]
        prev = {lo + 1 + k: v for k, v in enumerate(placed)}
        for k, v in enumerate(placed):
            rows[lo + k].append(v)
    filling = Filling(shape, tuple(tuple(r) for r in rows))
    if not is_cof(filling):
        raise NoValidFilling("constructed filling failed validation")
    return filling


def enumerate_cof(shape: SkewShape, m: int) -> Iterator[Filling]:
    """All coinversion-free fillings with entries in [m], each exactly once,
    ordered lexicographically on the sequence of (ascending) column sets."""
    heights = shape.col_heights()
    if any(h > m for h in heights):
        return
    pools = [list(combinations(range(1, m + 1), h)) for h in heights]
    for sets in product(*pools):
        yield from_column_sets(shape, list(sets))


def enumerate_cof_content(shape: SkewShape, content: Composition) -> Iterator[Filling]:
    """Coinversion-free fillings with weight exactly ``content``."""
    m = len(content)
    heights = shape.col_heights()
    if any(h > m for h in heights):
        return
    pools = [list(combinations(range(1, m + 1), h)) for h in heights]
    target = tuple(content)

    def rec(j: int, counts: list[int], chosen: list[tuple[int, ...]]) -> Iterator[Filling]:
        if j == len(pools):
            if tuple(counts) == target:
                yield from_column_sets(shape, chosen)
            return
        remaining = sum(heights[j:])
        if sum(target) - sum(counts) != remaining:
            return
        for s in pools[j]:
            ok = True
            for v in s:
                if counts[v - 1] + 1 > target[v - 1]:
                    ok = False
                    break
            if not ok:
                continue
            for v in s:
                counts[v - 1] += 1
            yield from rec(j + 1, counts, chosen + [s])
            for v in s:
                counts[v - 1] -= 1

    yield from rec(0, [0] * m, [])


def count_cof(shape: SkewShape, m: int) -> int:
    """Product over columns of binom(m, height): the column-set count."""
    import math

    out = 1
    for h in shape.col_heights():
        out *= math.comb(m, h)
    return out


def extended_filling(filling: Filling, big: int) -> Filling:
    """Fill the inner cells of row i with big - i, giving a straight-shape
    filling with the same major index.  Requires big > max entry + nrows."""
    shape = filling.shape
    top = max((v for r in filling.rows for v in r), default=0)
    if big <= top + shape.nrows:
        raise ValueError("big must exceed max entry + number of rows")
    rows = []
    for i in range(1, shape.nrows + 1):
        rows.append((big - i,) * shape.inner_at(i) + filling.rows[i - 1])
    return Filling(SkewShape(shape.outer), tuple(rows))


# ---------------------------------------------------------------------------
# E_{lam/mu}(x; q, 0)
# ---------------------------------------------------------------------------


def macdonald_e_by_enumeration(shape: SkewShape, m: int) -> SymPoly:
    """Reference route: sum q^maj x^F over enumerate_cof (the oracle)."""
    raw: dict[tuple[int, ...], QPoly] = {}
    for f in enumerate_cof(shape, m):
        vec = f.weight(m)
        raw[vec] = raw.get(vec, QPoly.zero()) + QPoly.q_power(maj(f))
    return sympoly_from_exponents(raw, m, check=True)


def _column_transitions(shape: SkewShape, m: int, j: int, arrangements):
    """For each arrangement of column j-1, the (new arrangement, maj shift,
    chosen set) transitions into column j."""
    lo, hi = shape.col_range(j)
    lo_prev, hi_prev = shape.col_range(j - 1) if j > 1 else (0, 0)
    out = {}
    legs = [shape.outer[r - 1] - j + 1 for r in range(lo + 1, hi + 1)]
    for arr in arrangements:
        prev = {lo_prev + 1 + k: v for k, v in enumerate(arr)}
        lefts: list[int | None] = [
            prev.get(r) if shape.contains(r, j - 1) else None for r in range(lo + 1, hi + 1)
        ]
        moves = []
        for entries in combinations(range(1, m + 1), hi - lo):
            placed = _arrange_column(entries, lefts)
            if placed is None:
                found = _search_column(entries, lefts)
                if not found:
                    raise NoValidFilling(
                        f"column {j}: sets {entries} admit no arrangement"
                    )
                placed = found[0]
            shift = sum(
                legs[k]
                for k, v in enumerate(placed)
                if lefts[k] is not None and lefts[k] < v
            )
            moves.append((tuple(placed), shift, entries))
        out[arr] = moves
    return out


def macdonald_e(shape: SkewShape, m: int) -> SymPoly:
    """E_{lam/mu}(x_1..x_m; q, 0) in the monomial basis.

    Computed by the column dynamic program described in the module docstring;
    identical by construction to the enumeration route, which tests verify.
    The result is collected with a full symmetry check.
    """
    if any(h > m for h in shape.col_heights()):
        return SymPoly.zero(m)
    # state: (arrangement of current column, content so far) -> q-polynomial
    states: dict[tuple[tuple[int, ...], tuple[int, ...]], QPoly] = {
        ((), (0,) * m): QPoly.one()
    }
    for j in range(1, shape.ncols + 1):
        arrangements = {arr for arr, _ in states}
        trans = _column_transitions(shape, m, j, arrangements)
        nxt: dict[tuple[tuple[int, ...], tuple[int, ...]], QPoly] = {}
        for (arr, content), poly in states.items():
            for placed, shift, entries in trans[arr]:
                cnt = list(content)
                for v in entries:
                    cnt[v - 1] += 1
                key = (placed, tuple(cnt))
                add = poly.shift(shift)
                nxt[key] = nxt.get(key, QPoly.zero()) + add if key in nxt else add
        states = nxt
    raw: dict[tuple[int, ...], QPoly] = {}
    for (_, content), poly in states.items():
        raw[content] = raw.get(content, QPoly.zero()) + poly
    return sympoly_from_exponents(raw, m, check=True)


def principal_maj_poly(shape: SkewShape, m: int) -> QPoly:
    """E_{lam/mu}(1^m; q, 0): the maj generating function over all fillings.

    Same dynamic program as ``macdonald_e`` with the content dropped, so it
    scales to shapes whose filling count is far beyond enumeration.
    """
    if any(h > m for h in shape.col_heights()):
        return QPoly.zero()
    states: dict[tuple[int, ...], QPoly] = {(): QPoly.one()}
    for j in range(1, shape.ncols + 1):
        trans = _column_transitions(shape, m, j, set(states))
        nxt: dict[tuple[int, ...], QPoly] = {}
        for arr, poly in states.items():
            for placed, shift, _ in trans[arr]:
                add = poly.shift(shift)
                nxt[placed] = nxt.get(placed, QPoly.zero()) + add if placed in nxt else add
        states = nxt
    total = QPoly.zero()
    for poly in states.values():
        total = total + poly
    return total
