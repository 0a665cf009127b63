"""Exact symmetric polynomials in m variables with QPoly coefficients.

Supports the monomial and Schur bases, conversion between them by Kostka
unitriangularity, the omega involution, the plethysm p_k[.], and principal
specializations.  Kostka numbers come from semistandard-tableau enumeration
(memoized horizontal-strip recursion), which doubles as the test oracle.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator

from .core import Composition, Partition, QPoly, conjugate, partition

MONOMIAL = "monomial"
SCHUR = "schur"


class NonSymmetricInput(ValueError):
    """A raw polynomial was not symmetric (some monomial orbit had
    inconsistent coefficients)."""


class MixedParameters(ValueError):
    """Principal specialization at x_i = q^(i-1) needs constant coefficients,
    otherwise the two q's would collide."""


def _distinct_permutations(items: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset, lexicographically descending."""
    pool = sorted(items, reverse=True)
    n = len(pool)

    def rec(remaining: list[int]) -> Iterator[tuple[int, ...]]:
        if not remaining:
            yield ()
            return
        seen = set()
        for i, v in enumerate(remaining):
            if v in seen:
                continue
            seen.add(v)
            for rest in rec(remaining[:i] + remaining[i + 1:]):
                yield (v,) + rest

    yield from rec(pool)


def monomial_orbit(nu: Partition, m: int) -> Iterator[tuple[int, ...]]:
    """Exponent vectors of m_nu(x_1..x_m): distinct rearrangements of nu
    padded with zeros to length m."""
    if len(nu) > m:
        return
    yield from _distinct_permutations(tuple(nu) + (0,) * (m - len(nu)))


def orbit_size(nu: Partition, m: int) -> int:
    """Number of monomials in m_nu(x_1..x_m)."""
    if len(nu) > m:
        return 0
    mults: dict[int, int] = {}
    for p in nu:
        mults[p] = mults.get(p, 0) + 1
    mults[0] = m - len(nu)
    out = math.factorial(m)
    for cnt in mults.values():
        out //= math.factorial(cnt)
    return out


class SymPoly:
    """A symmetric polynomial in x_1..x_m, with QPoly coefficients, tagged by
    basis.  Treated as immutable.

    Monomial-basis keys always have length <= m.  Schur-basis keys may be
    longer; such s_lam vanish in m variables but are kept so that omega (which
    conjugates keys) stays exact before a final monomial expansion.
    """

    __slots__ = ("m", "basis", "coeffs")

    def __init__(self, m: int, basis: str, coeffs: dict[Partition, QPoly]):
        if basis not in (MONOMIAL, SCHUR):
            raise ValueError(f"unknown basis {basis!r}")
        if m < 1:
            raise ValueError("m must be >= 1")
        clean = {partition(k): v for k, v in coeffs.items() if not v.is_zero()}
        if basis == MONOMIAL and any(len(k) > m for k in clean):
            raise ValueError("monomial key longer than the number of variables")
        self.m = m
        self.basis = basis
        self.coeffs = clean

    # -- basics --------------------------------------------------------------

    @staticmethod
    def zero(m: int, basis: str = MONOMIAL) -> "SymPoly":
        return SymPoly(m, basis, {})

    @staticmethod
    def one(m: int, basis: str = MONOMIAL) -> "SymPoly":
        return SymPoly(m, basis, {(): QPoly.one()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int | None:
        """Common degree when homogeneous, else None; None when zero."""
        degs = {sum(k) for k in self.coeffs}
        return degs.pop() if len(degs) == 1 else None

    def coefficient(self, key: Partition) -> QPoly:
        return self.coeffs.get(partition(key), QPoly.zero())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymPoly):
            return NotImplemented
        return (self.m, self.basis, self.coeffs) == (other.m, other.basis, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.m, self.basis, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other: "SymPoly") -> "SymPoly":
        if (self.m, self.basis) != (other.m, other.basis):
            raise ValueError("mixed m or basis")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, QPoly.zero()) + v
        return SymPoly(self.m, self.basis, out)

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + other.scale(QPoly.from_int(-1))

    def scale(self, c: QPoly | int) -> "SymPoly":
        cc = c if isinstance(c, QPoly) else QPoly.from_int(c)
        return SymPoly(self.m, self.basis, {k: v * cc for k, v in self.coeffs.items()})

    def __mul__(self, other: "SymPoly") -> "SymPoly":
        """Product via raw monomial expansion (monomial basis only)."""
        if self.basis != MONOMIAL or other.basis != MONOMIAL:
            raise ValueError("multiply in the monomial basis")
        if self.m != other.m:
            raise ValueError("mixed m")
        a = self.exponents()
        b = other.exponents()
        raw: dict[tuple[int, ...], QPoly] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                raw[key] = raw.get(key, QPoly.zero()) + prod
        return sympoly_from_exponents(raw, self.m, check=False)

    def __repr__(self) -> str:
        return f"SymPoly(m={self.m}, {self.text()})"

    # -- expansions ------------------------------------------------------------

    def exponents(self) -> dict[tuple[int, ...], QPoly]:
        """Dense expansion: exponent vector (length m) -> coefficient."""
        if self.basis != MONOMIAL:
            return from_schur(self).exponents()
        out: dict[tuple[int, ...], QPoly] = {}
        for nu, c in self.coeffs.items():
            for vec in monomial_orbit(nu, self.m):
                out[vec] = c
        return out

    def eval_ones(self) -> QPoly:
        """Substitute every x_i = 1."""
        if self.basis != MONOMIAL:
            return from_schur(self).eval_ones()
        total = QPoly.zero()
        for nu, c in self.coeffs.items():
            total = total + c * orbit_size(nu, self.m)
        return total

    def map_coeffs(self, fn) -> "SymPoly":
        return SymPoly(self.m, self.basis, {k: fn(v) for k, v in self.coeffs.items()})

    # -- text / JSON -------------------------------------------------------------

    def text(self) -> str:
        """Canonical text; keys in decreasing lex order."""
        if not self.coeffs:
            return "0"
        tag = "m" if self.basis == MONOMIAL else "s"
        chunks = []
        for key in sorted(self.coeffs, reverse=True):
            c = self.coeffs[key]
            base = f"{tag}[{','.join(map(str, key))}]"
            const = c.constant_value()
            if const == 1:
                chunks.append(base)
            elif const is not None and const >= 0:
                chunks.append(f"{const}*{base}")
            elif c.coefficients() and len(c.coefficients()) == 1 and c == QPoly.q_power(c.degree()):
                chunks.append(f"{c.text()}*{base}")
            else:
                chunks.append(f"({c.text()})*{base}")
        return " + ".join(chunks)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "basis": self.basis,
            "terms": [
                {"key": list(k), "coeff": self.coeffs[k].text()}
                for k in sorted(self.coeffs, reverse=True)
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "SymPoly":
        coeffs = {
            tuple(term["key"]): QPoly.parse(term["coeff"]) for term in data["terms"]
        }
        return SymPoly(data["m"], data["basis"], coeffs)


def sympoly_from_exponents(
    raw: dict[tuple[int, ...], QPoly], m: int, check: bool = True
) -> SymPoly:
    """Collect a dense exponent->coefficient dict into the monomial basis.

    With ``check`` set, every orbit must carry one constant coefficient;
    a mismatch raises NonSymmetricInput.
    """
    out: dict[Partition, QPoly] = {}
    for vec, c in raw.items():
        if c.is_zero():
            continue
        key = tuple(sorted((x for x in vec if x), reverse=True))
        if key in out:
            if check and out[key] != c:
                raise NonSymmetricInput(f"orbit of {key} has unequal coefficients")
        else:
            out[key] = c
    if check:
        for key, c in out.items():
            expected = orbit_size(key, m)
            seen = sum(
                1
                for vec in raw
                if tuple(sorted((x for x in vec if x), reverse=True)) == key
            )
            if seen != expected:
                raise NonSymmetricInput(f"orbit of {key} incomplete ({seen}/{expected})")
            for vec in monomial_orbit(key, m):
                if raw.get(vec, QPoly.zero()) != c:
                    raise NonSymmetricInput(f"orbit of {key} has unequal coefficients")
    return SymPoly(m, MONOMIAL, out)


# ---------------------------------------------------------------------------
# Semistandard tableaux and Kostka numbers
# ---------------------------------------------------------------------------


def horizontal_strips(lam: Partition, size: int) -> Iterator[Partition]:
    """Partitions mu inside lam with lam/mu a horizontal strip of |size|."""

    def rec(i: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            if remaining == 0:
                yield ()
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        hi = lam[i]
        for mu_i in range(hi, lo - 1, -1):
            removed = hi - mu_i
            if removed > remaining:
                continue
            for rest in rec(i + 1, remaining - removed):
                yield (mu_i,) + rest

    for mu in rec(0, size):
        yield partition(mu)


def ssyt_tableaux(
    lam: Partition,
    content: Composition | None = None,
    max_entry: int | None = None,
    inner: Partition = (),
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Semistandard tableaux of (skew) shape lam/inner as row tuples.

    With ``content`` the letter i is used exactly content[i-1] times; with
    ``max_entry`` all fillings with entries <= max_entry are produced.  Rows
    list only the cells outside ``inner``.
    """
    lam = partition(lam)
    inner = partition(inner)
    if any((inner[i] if i < len(inner) else 0) > lam[i] for i in range(len(lam))) or len(
        inner
    ) > len(lam):
        raise ValueError("inner shape not contained in outer")
    if content is not None:
        letters = len(content)
        sizes = list(content)
        if sum(sizes) != sum(lam) - sum(inner):
            return
    else:
        if max_entry is None:
            raise ValueError("need content or max_entry")
        letters = max_entry
        sizes = None

    def rec(shape: tuple[int, ...], letter: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        # chains inner <= ... <= lam; letter fills shape/previous
        if letter == 0:
            if partition(shape) == inner:
                yield tuple(() for _ in shape)
            return
        strip_sizes = (
            [sizes[letter - 1]] if sizes is not None else range(sum(shape) - sum(inner), -1, -1)
        )
        for size in strip_sizes:
            for mu in horizontal_strips(partition(shape), size):
                if any((inner[i] if i < len(inner) else 0) > (mu[i] if i < len(mu) else 0)
                       for i in range(len(inner))):
                    continue
                for smaller in rec(mu, letter - 1):
                    rows = []
                    for i in range(len(shape)):
                        lo = mu[i] if i < len(mu) else 0
                        prev = smaller[i] if i < len(smaller) else ()
                        rows.append(prev + (letter,) * (shape[i] - lo))
                    yield tuple(rows)

    for rows in rec(lam, letters):
        # drop trailing empty rows beyond the outer shape
        yield tuple(rows[i] for i in range(len(lam)))


@lru_cache(maxsize=None)
def _kostka_sorted(lam: Partition, nu: Partition) -> int:
    if sum(lam) != sum(nu):
        return 0
    if not lam:
        return 1
    if not nu:
        return 0
    total = 0
    *rest, last = nu
    for mu in horizontal_strips(lam, last):
        total += _kostka_sorted(mu, tuple(rest))
    return total


def kostka_number(lam: Partition, content: Composition) -> int:
    """K_{lam,content}: number of SSYT of shape lam with the given content.

    Kostka numbers are symmetric in the content, so it is canonicalized to a
    partition before the memoized count.
    """
    nu = tuple(sorted((c for c in content if c), reverse=True))
    return _kostka_sorted(partition(lam), nu)


@lru_cache(maxsize=None)
def _schur_coeffs(lam: Partition, m: int) -> tuple[tuple[Partition, int], ...]:
    n = sum(lam)
    out = []
    for nu in _partitions_cached(n):
        if len(nu) > m:
            continue
        k = kostka_number(lam, nu)
        if k:
            out.append((nu, k))
    return tuple(out)


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    from .core import partitions_of

    return tuple(partitions_of(n))


def schur_polynomial(lam: Partition, m: int) -> SymPoly:
    """s_lam(x_1..x_m) in the monomial basis; coefficients are Kostka numbers."""
    lam = partition(lam)
    return SymPoly(
        m, MONOMIAL, {nu: QPoly.from_int(k) for nu, k in _schur_coeffs(lam, m)}
    )


def elementary(k: int, m: int) -> SymPoly:
    """e_k in m variables."""
    if k < 0 or k > m:
        return SymPoly.zero(m)
    return SymPoly(m, MONOMIAL, {(1,) * k: QPoly.one()})


def complete(k: int, m: int) -> SymPoly:
    """h_k in m variables."""
    coeffs = {nu: QPoly.one() for nu in _partitions_cached(k) if len(nu) <= m}
    return SymPoly(m, MONOMIAL, coeffs)


def power_sum(k: int, m: int) -> SymPoly:
    """p_k in m variables."""
    if k == 0:
        return SymPoly.one(m)
    return SymPoly(m, MONOMIAL, {(k,): QPoly.one()})


# ---------------------------------------------------------------------------
# Basis conversion, omega, plethysm, specialization
# ---------------------------------------------------------------------------


def to_schur(f: SymPoly) -> SymPoly:
    """Monomial basis -> Schur basis by subtracting lead terms.

    Keys are processed in decreasing lex order, which refines dominance for a
    fixed degree, so Kostka unitriangularity makes the elimination exact.
    """
    if f.basis == SCHUR:
        return f
    work = dict(f.coeffs)
    out: dict[Partition, QPoly] = {}
    while work:
        lam = max(work)
        c = work.pop(lam)
        if c.is_zero():
            continue
        out[lam] = out.get(lam, QPoly.zero()) + c
        for nu in _partitions_cached(sum(lam)):
            if nu == lam or len(nu) > f.m:
                continue
            k = kostka_number(lam, nu)
            if k:
                work[nu] = work.get(nu, QPoly.zero()) - c * k
    return SymPoly(f.m, SCHUR, out)


def from_schur(f: SymPoly) -> SymPoly:
    """Schur basis -> monomial basis; keys longer than m drop out (s_lam = 0)."""
    if f.basis == MONOMIAL:
        return f
    out: dict[Partition, QPoly] = {}
    for lam, c in f.coeffs.items():
        if len(lam) > f.m:
            continue
        for nu, k in _schur_coeffs(lam, f.m):
            out[nu] = out.get(nu, QPoly.zero()) + c * k
    return SymPoly(f.m, MONOMIAL, out)


def omega_on_schur(f: SymPoly) -> SymPoly:
    """The omega involution: coefficient of s_lam moves to s_{lam'}."""
    if f.basis != SCHUR:
        raise ValueError("omega acts on the Schur basis")
    return SymPoly(f.m, SCHUR, {conjugate(k): v for k, v in f.coeffs.items()})


def plethysm_pk(k: int, f: SymPoly) -> SymPoly:
    """p_k[f] = f(x_1^k, x_2^k, ...): every monomial key nu becomes k*nu."""
    if f.basis != MONOMIAL:
        raise ValueError("plethysm acts on the monomial basis")
    if k < 1:
        raise ValueError("k must be >= 1")
    return SymPoly(f.m, MONOMIAL, {tuple(k * p for p in key): v for key, v in f.coeffs.items()})


def pleth_omega_check(k: int, f: SymPoly) -> bool:
    """Check p_k[omega f] = (-1)^((k+1)n) omega(p_k[f]) for homogeneous f.

    Both sides are computed independently at k*deg(f) variables; smaller m
    would truncate Schur keys and could falsify a true identity, since omega
    does not commute with dropping variables.
    """
    fs = to_schur(f) if f.basis == MONOMIAL else f
    n = fs.degree()
    if n is None:
        raise ValueError("f must be homogeneous and nonzero")
    m_eff = max(k * n, 1)
    wide = SymPoly(m_eff, SCHUR, fs.coeffs)
    lhs = plethysm_pk(k, from_schur(omega_on_schur(wide)))
    rhs_schur = omega_on_schur(to_schur(plethysm_pk(k, from_schur(wide))))
    sign = -1 if ((k + 1) * n) % 2 else 1
    rhs = from_schur(rhs_schur).scale(sign)
    return lhs == rhs


def principal_spec(f: SymPoly, mode: str) -> QPoly:
    """Principal specializations of a monomial-basis polynomial.

    mode "ones":   x_i = 1 for all i.
    mode "powers": x_i = q^(i-1); requires constant coefficients, otherwise
    MixedParameters is raised.
    """
    if f.basis != MONOMIAL:
        raise ValueError("specialize in the monomial basis")
    if mode == "ones":
        return f.eval_ones()
    if mode != "powers":
        raise ValueError(f"unknown mode {mode!r}")
    total = QPoly.zero()
    for nu, c in f.coeffs.items():
        cval = c.constant_value()
        if cval is None:
            raise MixedParameters(f"coefficient of m_{nu} is {c.text()}, not constant")
        acc = QPoly.zero()
        for vec in monomial_orbit(nu, f.m):
            acc = acc + QPoly.q_power(sum(e * i for i, e in enumerate(vec)))
        total = total + acc * cval
    return total


def coeff_monomial(f: SymPoly, nu: Partition) -> QPoly:
    """[m_nu] f for a monomial-basis f (zero when absent)."""
    if f.basis != MONOMIAL:
        raise ValueError("coefficient extraction needs the monomial basis")
    return f.coefficient(nu)
