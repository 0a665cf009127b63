"""Burge words, the RSK variant, charge, and the Schur expansion of
E_{lam/mu}(x;q,0).

A filling turns into a Burge word with one biletter per cell: the entry on
top, its column index on the bottom.  Biletters sort by increasing top and,
within equal tops, by decreasing bottom.  The bottom row is the charge word:
appending the postfix for the conjugate inner shape makes its content a
partition, and the postfix charge of the charge word equals the major index
of the filling.

RSK row-inserts the bottom row while recording the top row, giving (P, Q)
with P semistandard and Q^t semistandard; the insertion rule bumps the
leftmost entry strictly greater than the inserted one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .core import (
    Composition,
    Partition,
    QPoly,
    conjugate,
    is_partition,
    partition,
    q_factorial,
)
from .fillings import Filling, SkewShape, macdonald_e
from .symfunc import (
    SCHUR,
    SymPoly,
    kostka_number,
    schur_polynomial,
    ssyt_tableaux,
    to_schur,
)

Word = tuple[int, ...]


class NotAPermutation(ValueError):
    pass


class NonPartitionContent(ValueError):
    pass


class ContentMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# Burge words and tableaux
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BurgeWord:
    """Two-row array, top weakly increasing, bottom strictly decreasing
    within each block of equal tops; all biletters distinct."""

    top: Word
    bottom: Word

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError("rows differ in length")
        if any(x < 1 for x in self.top + self.bottom):
            raise ValueError("entries must be positive")
        for i in range(len(self.top) - 1):
            if self.top[i] > self.top[i + 1]:
                raise ValueError("top row not weakly increasing")
            if self.top[i] == self.top[i + 1] and self.bottom[i] <= self.bottom[i + 1]:
                raise ValueError("bottom row not strictly decreasing within a block")

    def __len__(self) -> int:
        return len(self.top)

    @staticmethod
    def from_biletters(pairs) -> "BurgeWord":
        ordered = sorted(pairs, key=lambda p: (p[0], -p[1]))
        return BurgeWord(tuple(p[0] for p in ordered), tuple(p[1] for p in ordered))

    def to_json(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    @staticmethod
    def from_json(data: dict) -> "BurgeWord":
        return BurgeWord(tuple(data["top"]), tuple(data["bottom"]))


@dataclass(frozen=True)
class Tableau:
    """Row-based tableau.  With ``transposed`` unset the rows weakly increase
    and columns strictly increase; a recording tableau sets ``transposed``,
    meaning its transpose is semistandard."""

    rows: tuple[Word, ...]
    transposed: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if not is_partition(tuple(len(r) for r in self.rows)):
            raise ValueError("row lengths must weakly decrease")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    def size(self) -> int:
        return sum(self.shape)

    def content(self, m: int | None = None) -> Composition:
        top = m if m is not None else max((v for r in self.rows for v in r), default=0)
        counts = [0] * top
        for r in self.rows:
            for v in r:
                counts[v - 1] += 1
        return tuple(counts)

    def transpose(self) -> "Tableau":
        if not self.rows:
            return Tableau((), not self.transposed)
        cols = [
            tuple(r[j] for r in self.rows if len(r) > j) for j in range(len(self.rows[0]))
        ]
        return Tableau(tuple(cols), not self.transposed)

    def is_semistandard(self) -> bool:
        t = self.transpose() if self.transposed else self
        for r in t.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for r1, r2 in zip(t.rows, t.rows[1:]):
            if any(a >= b for a, b in zip(r1, r2)):
                return False
        return True

    def reading_word(self) -> Word:
        """Rows bottom to top, each left to right."""
        out: list[int] = []
        for r in reversed(self.rows):
            out.extend(r)
        return tuple(out)

    def label(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape),
            "rows": [list(r) for r in self.rows],
            "transposed": self.transposed,
        }

    def __repr__(self) -> str:
        return f"Tableau({self.label()}{'^t' if self.transposed else ''})"


def burge_word(filling: Filling) -> BurgeWord:
    """One biletter (entry over column index) per cell, in Burge order."""
    pairs = []
    shape = filling.shape
    for j in range(1, shape.ncols + 1):
        for v in filling.column_values(j):
            pairs.append((v, j))
    return BurgeWord.from_biletters(pairs)


def charge_word(filling: Filling) -> Word:
    """The bottom row of the Burge word: the column word of the filling."""
    return burge_word(filling).bottom


def filling_from_burge(shape: SkewShape, word: BurgeWord) -> Filling:
    """Rebuild the unique filling of ``shape`` with the biletters of ``word``."""
    from .fillings import from_column_sets

    sets: list[list[int]] = [[] for _ in range(shape.ncols)]
    for v, j in zip(word.top, word.bottom):
        sets[j - 1].append(v)
    return from_column_sets(shape, [tuple(sorted(s)) for s in sets])


# ---------------------------------------------------------------------------
# RSK
# ---------------------------------------------------------------------------


def _insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Row-insert x, bumping the leftmost entry strictly greater; returns the
    (row, col) of the new cell, 0-based."""
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return i, 0
        row = rows[i]
        # leftmost entry strictly greater than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > x:
                hi = mid
            else:
                lo = mid + 1
        if lo == len(row):
            row.append(x)
            return i, len(row) - 1
        row[lo], x = x, row[lo]
        i += 1


def rsk(word: BurgeWord, trace: bool = False):
    """Insert the bottom row, recording the top row.

    Returns (P, Q); with ``trace`` returns the list of (P, Q) after each
    biletter instead.
    """
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    steps = []
    for t, b in zip(word.top, word.bottom):
        i, _ = _insert(p_rows, b)
        if i == len(q_rows):
            q_rows.append([])
        q_rows[i].append(t)
        if trace:
            steps.append(
                (
                    Tableau(tuple(tuple(r) for r in p_rows)),
                    Tableau(tuple(tuple(r) for r in q_rows), transposed=True),
                )
            )
    result = (
        Tableau(tuple(tuple(r) for r in p_rows)),
        Tableau(tuple(tuple(r) for r in q_rows), transposed=True),
    )
    return steps if trace else result


def rsk_inverse(p: Tableau, q: Tableau) -> BurgeWord:
    """Invert RSK: repeatedly un-insert the cell recorded last.

    Among cells of Q holding the maximal label, the bottommost was added
    last (equal labels sit in a vertical strip of Q).
    """
    if p.shape != q.shape:
        raise ValueError("shapes differ")
    p_rows = [list(r) for r in p.rows]
    q_rows = [list(r) for r in q.rows]
    pairs: list[tuple[int, int]] = []
    while any(p_rows):
        label = max(r[-1] for r in q_rows if r)
        row = max(i for i, r in enumerate(q_rows) if r and r[-1] == label)
        q_rows[row].pop()
        x = p_rows[row].pop()
        for i in range(row - 1, -1, -1):
            r = p_rows[i]
            # rightmost entry strictly less than x
            lo, hi = 0, len(r)
            while lo < hi:
                mid = (lo + hi) // 2
                if r[mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            r[lo - 1], x = x, r[lo - 1]
        pairs.append((label, x))
        p_rows = [r for r in p_rows if r] or p_rows
        q_rows = [r for r in q_rows if r] or q_rows
        if not any(p_rows):
            break
    return BurgeWord.from_biletters(pairs)


# ---------------------------------------------------------------------------
# Charge
# ---------------------------------------------------------------------------


def charge_perm(word: Word) -> int:
    """Charge of a permutation word: positions pos(i); ascents of the inverse
    at i contribute k-i."""
    k = len(word)
    pos = [0] * (k + 1)
    seen = set()
    for idx, v in enumerate(word):
        if not 1 <= v <= k or v in seen:
            raise NotAPermutation(f"{word} is not a permutation of 1..{k}")
        seen.add(v)
        pos[v] = idx
    return sum(k - i for i in range(1, k) if pos[i + 1] > pos[i])


def _content_partition(word: Word) -> Partition:
    if not word:
        return ()
    top = max(word)
    counts = [0] * top
    for v in word:
        counts[v - 1] += 1
    if any(c == 0 for c in counts) or any(
        a < b for a, b in zip(counts, counts[1:])
    ):
        raise NonPartitionContent(f"content of {word} is not a partition")
    return tuple(counts)


def standard_subwords(word: Word) -> list[Word]:
    """Split a partition-content word into its standard subwords.

    Mark the rightmost 1, then scan leftward (cyclically) for 2, 3, ...;
    extract, remove, and repeat on what is left.
    """
    word = tuple(word)
    _content_partition(word)
    positions = list(range(len(word)))
    out: list[Word] = []
    while positions:
        top = max(word[p] for p in positions)
        marked: list[int] = []
        idx = len(positions)  # scan starts just past the right end
        for target in range(1, top + 1):
            j = idx - 1
            while True:
                if j < 0:
                    j = len(positions) - 1
                if positions[j] >= 0 and word[positions[j]] == target:
                    marked.append(positions[j])
                    positions[j] = -1  # tombstone within this round
                    idx = j
                    break
                j -= 1
        marked.sort()
        out.append(tuple(word[p] for p in marked))
        positions = [p for p in positions if p >= 0]
    return out


def charge(word: Word) -> int:
    """Charge of a word with partition content: sum over standard subwords."""
    return sum(charge_perm(w) for w in standard_subwords(word))


def charge_tableau(t: Tableau) -> int:
    return charge(t.reading_word())


def postfix_charge(mu: Partition, word: Word) -> int:
    """charge of word . l^(mu_l) ... 2^(mu_2) 1^(mu_1); needs content+mu to
    be a partition."""
    mu = partition(mu)
    top = max([len(mu)] + [v for v in word] + [0])
    counts = [0] * top
    for v in word:
        counts[v - 1] += 1
    for i, p in enumerate(mu):
        counts[i] += p
    if not is_partition(tuple(counts)):
        raise ContentMismatch(f"content of word plus {mu} is not a partition")
    postfix: list[int] = []
    for i in range(len(mu), 0, -1):
        postfix.extend([i] * mu[i - 1])
    return charge(tuple(word) + tuple(postfix))


# ---------------------------------------------------------------------------
# Schur expansion of E_{lam/mu}(x;q,0) and corollaries
# ---------------------------------------------------------------------------


def column_content(shape: SkewShape) -> Composition:
    """alpha_i = (outer)'_i - (inner)'_i: the column heights."""
    return shape.col_heights()


def kq_coefficient(shape: SkewShape, nu: Partition) -> QPoly:
    """K^nu_{lam/mu}(q) = sum over SSYT(nu, alpha) of q^(postfix charge),
    postfix given by the conjugate inner shape."""
    nu = partition(nu)
    alpha = column_content(shape)
    mu_c = conjugate(shape.inner)
    total = QPoly.zero()
    for rows in ssyt_tableaux(nu, content=alpha):
        total = total + QPoly.q_power(postfix_charge(mu_c, Tableau(rows).reading_word()))
    return total


def schur_expansion_via_charge(shape: SkewShape, m: int | None = None) -> SymPoly:
    """The Schur expansion of E_{lam/mu}: sum over nu of K^nu(q) s_{nu'}."""
    if m is None:
        m = max(shape.size(), 1)
    from .core import partitions_of

    coeffs: dict[Partition, QPoly] = {}
    for nu in partitions_of(shape.size()):
        c = kq_coefficient(shape, nu)
        if not c.is_zero():
            coeffs[conjugate(nu)] = c
    if shape.size() == 0:
        coeffs[()] = QPoly.one()
    return SymPoly(m, SCHUR, coeffs)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition, m: int | None = None) -> int:
    """Littlewood-Richardson c^lam_{mu,nu} via expanding s_mu s_nu (oracle)."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    if m is None:
        m = max(sum(lam), 1)
    prod = schur_polynomial(mu, m) * schur_polynomial(nu, m)
    c = to_schur(prod).coefficient(lam)
    val = c.constant_value()
    assert val is not None
    return val


def lr_checks(shape: SkewShape, m: int | None = None) -> dict:
    """Check the specializations of K^nu(q): q=0 gives Littlewood-Richardson
    coefficients, q=1 gives Kostka numbers."""
    from .core import partitions_of

    alpha = column_content(shape)
    report = {"shape": str(shape), "cases": [], "ok": True}
    for nu in partitions_of(shape.size()):
        kq = kq_coefficient(shape, nu)
        at0 = kq.coefficient(0)
        at1 = kq.at_one()
        lr = lr_coefficient(shape.outer, shape.inner, conjugate(nu), m)
        kostka = kostka_number(nu, alpha)
        ok = at0 == lr and at1 == kostka
        report["cases"].append(
            {"nu": list(nu), "kq": kq.text(), "lr": lr, "kostka": kostka, "ok": ok}
        )
        report["ok"] = report["ok"] and ok
    return report


def product_as_skew_shape(lam: Partition, mu: Partition) -> SkewShape:
    """The shape kappa/c^r realizing E_lam * E_mu as one skew polynomial:
    lam shifted right by c = mu_1 and stacked above mu."""
    lam, mu = partition(lam), partition(mu)
    c = mu[0] if mu else 0
    r = len(lam)
    kappa = tuple(c + p for p in lam) + mu
    return SkewShape(partition(kappa), (c,) * r)


def product_as_skew_check(lam: Partition, mu: Partition, m: int) -> bool:
    """E_lam * E_mu = E_{(lam+c, mu)/c^r} in m variables."""
    shape = product_as_skew_shape(lam, mu)
    lhs = macdonald_e(SkewShape(partition(lam)), m) * macdonald_e(SkewShape(partition(mu)), m)
    rhs = macdonald_e(shape, m)
    return lhs == rhs


def mahonian_check(mu: Partition, n: int) -> bool:
    """Distribution of postfix charge over S_n against the closed product."""
    from itertools import permutations

    mu = partition(mu)
    lhs = QPoly.zero()
    for sigma in permutations(range(1, n + 1)):
        lhs = lhs + QPoly.q_power(postfix_charge(mu, sigma))
    mu_c = list(conjugate(mu)) + [0] * n
    lam_c = [mu_c[i] + 1 for i in range(n)] + mu_c[n:]
    lam = conjugate(partition(tuple(lam_c)))
    mu_pad = tuple(mu) + (0,) * (len(lam) - len(mu))
    ds = [li - mi for li, mi in zip(lam, mu_pad)]
    # n! * prod [d]_q!/d! = multinomial(n; ds) * prod [d]_q!, all integral
    multinomial = math.factorial(n)
    for d in ds:
        multinomial //= math.factorial(d)
    rhs = QPoly.from_int(multinomial)
    for d in ds:
        rhs = rhs * q_factorial(d)
    return lhs == rhs
