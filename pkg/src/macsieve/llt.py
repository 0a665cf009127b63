"""Vertical-strip LLT polynomials and the inversion statistic.

A tuple of vertical strips holds one single-column skew shape 1^a/1^b per
slot; cell (r, 1) of a strip has content 1 - r, with box (1,1) on the zero
diagonal.  Entries strictly increase up each strip.  Two entries u in strip
i and v in strip j with u > v form an inversion when i < j and the contents
agree, or i > j and u's content is one less than v's.

The q-power normalizing an LLT polynomial to a skew Macdonald polynomial is
the minimum inversion count over all fillings; entries can always be packed
into 1..#cells without changing the inversion set, so that bound makes the
minimization finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Composition, Partition, QPoly, conjugate, partition
from .fillings import SkewShape, macdonald_e
from .rsk_charge import Tableau, postfix_charge
from .symfunc import SCHUR, SymPoly, ssyt_tableaux, sympoly_from_exponents, to_schur


class ColumnTooTall(ValueError):
    """The skew shape has a column of more than two boxes."""


@dataclass(frozen=True)
class VStripTuple:
    """Strips (a_j, b_j) with a_j >= b_j >= 0: the column shapes 1^a/1^b."""

    strips: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "strips", tuple((int(a), int(b)) for a, b in self.strips))
        for a, b in self.strips:
            if not a >= b >= 0:
                raise ValueError(f"bad strip {(a, b)}")

    def size(self) -> int:
        return sum(a - b for a, b in self.strips)

    def cell_contents(self) -> list[tuple[int, ...]]:
        """Per strip, the contents of its cells from bottom (row b+1) up."""
        return [tuple(1 - r for r in range(b + 1, a + 1)) for a, b in self.strips]

    @staticmethod
    def parse(text: str) -> "VStripTuple":
        strips = []
        for chunk in text.split(","):
            a, _, b = chunk.partition("/")
            strips.append((int(a), int(b) if b else 0))
        return VStripTuple(tuple(strips))

    def __str__(self) -> str:
        return ",".join(f"{a}/{b}" for a, b in self.strips)


def content_of_cell(strip: tuple[int, int], row: int) -> int:
    """Content of the cell in row ``row`` of a vertical strip: 1 - row."""
    a, b = strip
    if not b < row <= a:
        raise ValueError(f"row {row} not in strip {strip}")
    return 1 - row


def _pair_rules(nu: VStripTuple) -> list[list[list[tuple[int, int, bool]]]]:
    """For each strip pair s < t, the comparisons producing inversions.

    Entries are (cell index in s, cell index in t, flag) where the flag
    distinguishes same-content pairs (inversion when s-entry > t-entry) from
    shifted pairs (t's content = s-cell content - 1 ... inversion when the
    t-entry exceeds the s-entry).
    """
    contents = nu.cell_contents()
    k = len(contents)
    rules: list[list[list[tuple[int, int, bool]]]] = [
        [[] for _ in range(k)] for _ in range(k)
    ]
    for s in range(k):
        for t in range(s + 1, k):
            pos_s = {c: i for i, c in enumerate(contents[s])}
            pos_t = {c: i for i, c in enumerate(contents[t])}
            for c, i in pos_s.items():
                if c in pos_t:
                    rules[s][t].append((i, pos_t[c], True))
                # strip t has the larger index: its cell at content c-1
                # pairs with s's cell at content c for the shifted case
                if c - 1 in pos_t:
                    rules[s][t].append((i, pos_t[c - 1], False))
    return rules


def _pair_inv(fs, ft, rule) -> int:
    total = 0
    for i, j, same in rule:
        if same:
            if fs[i] > ft[j]:
                total += 1
        else:
            if ft[j] > fs[i]:
                total += 1
    return total


def _strip_fillings(nu: VStripTuple, m: int) -> list[list[tuple[int, ...]]]:
    return [
        [c for c in combinations(range(1, m + 1), a - b)] for a, b in nu.strips
    ]


def inv_count(nu: VStripTuple, filling: tuple[tuple[int, ...], ...]) -> int:
    """Total inversions of one tuple filling (values per strip, bottom up)."""
    rules = _pair_rules(nu)
    k = len(nu.strips)
    total = 0
    for s in range(k):
        for t in range(s + 1, k):
            total += _pair_inv(filling[s], filling[t], rules[s][t])
    return total


def llt_poly(nu: VStripTuple, m: int) -> SymPoly:
    """Sum of q^inv x^T over all tuple fillings with entries <= m."""
    pools = _strip_fillings(nu, m)
    rules = _pair_rules(nu)
    k = len(pools)
    raw: dict[tuple[int, ...], QPoly] = {}
    counts: dict[tuple[int, ...], dict[int, int]] = {}
    chosen: list[tuple[int, ...]] = [()] * k
    content = [0] * m

    def rec(s: int, inv: int) -> None:
        if s == k:
            key = tuple(content)
            counts.setdefault(key, {})
            counts[key][inv] = counts[key].get(inv, 0) + 1
            return
        for f in pools[s]:
            add = 0
            for t in range(s):
                add += _pair_inv(chosen[t], f, rules[t][s])
            chosen[s] = f
            for v in f:
                content[v - 1] += 1
            rec(s + 1, inv + add)
            for v in f:
                content[v - 1] -= 1

    rec(0, 0)
    for key, by_inv in counts.items():
        raw[key] = QPoly({d: c for d, c in by_inv.items()})
    return sympoly_from_exponents(raw, m, check=True)


def mininv(nu: VStripTuple) -> int:
    """Minimum inversion count over all fillings, entries bounded by the
    total cell count (packing entries never raises the count)."""
    bound = max(nu.size(), 1)
    pools = _strip_fillings(nu, bound)
    rules = _pair_rules(nu)
    k = len(pools)
    best = None
    chosen: list[tuple[int, ...]] = [()] * k

    def rec(s: int, inv: int) -> None:
        nonlocal best
        if best is not None and inv >= best and s < k:
            # inversions only accumulate, so this branch cannot win
            if inv > best:
                return
        if s == k:
            if best is None or inv < best:
                best = inv
            return
        for f in pools[s]:
            add = 0
            for t in range(s):
                add += _pair_inv(chosen[t], f, rules[t][s])
            if best is not None and inv + add >= best:
                continue
            chosen[s] = f
            rec(s + 1, inv + add)

    rec(0, 0)
    assert best is not None
    return best


def strips_from_skew(shape: SkewShape) -> tuple[VStripTuple, Composition]:
    """Rows of a flat skew shape (every column at most two boxes) as strips
    1^(outer_i)/1^(inner_i), plus the row sizes."""
    if any(h > 2 for h in shape.col_heights()):
        raise ColumnTooTall(f"{shape} has a column with more than two boxes")
    strips = tuple(
        (shape.outer[i], shape.inner_at(i + 1)) for i in range(shape.nrows)
    )
    alpha = tuple(shape.outer[i] - shape.inner_at(i + 1) for i in range(shape.nrows))
    return VStripTuple(strips), alpha


def llt_schur_via_charge(shape: SkewShape, m: int) -> SymPoly:
    """Schur coefficients of the normalized LLT polynomial from charge:
    sum over rho of s_{rho'} sum over SSYT(rho, alpha) of q^(postfix charge),
    postfix content the inner shape."""
    from .core import partitions_of

    nu, alpha = strips_from_skew(shape)
    coeffs: dict[Partition, QPoly] = {}
    for rho in partitions_of(sum(alpha)):
        total = QPoly.zero()
        for rows in ssyt_tableaux(rho, content=alpha):
            total = total + QPoly.q_power(
                postfix_charge(shape.inner, Tableau(rows).reading_word())
            )
        if not total.is_zero():
            coeffs[conjugate(rho)] = total
    if sum(alpha) == 0:
        coeffs[()] = QPoly.one()
    return SymPoly(m, SCHUR, coeffs)


def verify_llt_theorem(shape: SkewShape, m: int, exact_mininv: bool = True) -> dict:
    """Both routes to the same polynomial: E on the conjugate shape equals
    q^(-mininv) LLT, and the charge-side Schur expansion matches.

    With ``exact_mininv`` unset and m >= cell count, the minimum is read off
    the lowest q-power of the computed polynomial instead of an independent
    minimization (the two agree; the equivalence is itself under test
    elsewhere).
    """
    nu, alpha = strips_from_skew(shape)
    llt = llt_poly(nu, m)
    if exact_mininv:
        mi = mininv(nu)
    else:
        if m < nu.size():
            raise ValueError("lowest-power shortcut needs m >= cell count")
        mi = min(
            (c.lowest_degree() for c in llt.coeffs.values() if not c.is_zero()),
            default=0,
        )
    e_side = macdonald_e(shape.conjugate_shape(), m)
    shifted = e_side.map_coeffs(lambda c: c.shift(mi))
    monomial_ok = shifted == llt
    charge_side = llt_schur_via_charge(shape, m).map_coeffs(lambda c: c.shift(mi))
    llt_schur = to_schur(llt)
    charge_trim = SymPoly(
        m, SCHUR, {k: v for k, v in charge_side.coeffs.items() if len(k) <= m}
    )
    charge_ok = charge_trim == llt_schur
    return {
        "shape": str(shape),
        "tuple": str(nu),
        "mininv": mi,
        "monomial_ok": monomial_ok,
        "charge_ok": charge_ok,
        "ok": monomial_ok and charge_ok,
    }
