"""Group actions on coinversion-free fillings and cyclic sieving checks.

The generator phi rotates each block of n consecutive column sets one step to
the right and rebuilds the unique filling.  A filling is fixed by phi^d
exactly when its column-set tuple is gcd(d,n)-periodic inside each block;
that equivalence is immediate from the action on sets and is also verified
exhaustively on small instances by the test suite.  verify_csp counts fixed
points by applying the action element by element whenever the set is small
enough to enumerate, and falls back to counting periodic column-set tuples
for the huge instances; the polynomial side always comes from an exact
evaluation mod a cyclotomic polynomial, never from the product formula under
test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .core import (
    Composition,
    Partition,
    QPoly,
    conjugate,
    cyclotomic,
    eval_at_unity,
    mult_count,
    partition,
    scale,
)
from .fillings import (
    Filling,
    SkewShape,
    count_cof,
    enumerate_cof,
    enumerate_cof_content,
    from_column_sets,
    macdonald_e,
    principal_maj_poly,
)
from .symfunc import MixedParameters, coeff_monomial, principal_spec

#: fillings beyond this are not enumerated one by one
ENUMERATION_LIMIT = 200_000


class ShapeNotDivisible(ValueError):
    """Column heights are not constant on blocks of n consecutive columns."""


# ---------------------------------------------------------------------------
# The phi action
# ---------------------------------------------------------------------------


def _check_blocks(shape: SkewShape, n: int) -> None:
    heights = shape.col_heights()
    if len(heights) % n:
        raise ShapeNotDivisible(f"{len(heights)} columns do not split into blocks of {n}")
    for b in range(0, len(heights), n):
        if len(set(heights[b : b + n])) > 1:
            raise ShapeNotDivisible(f"block {b // n + 1} has unequal column heights")


def _rotate_sets(sets: tuple[tuple[int, ...], ...], n: int, d: int = 1):
    out = list(sets)
    for b in range(0, len(sets), n):
        block = sets[b : b + n]
        out[b : b + n] = block[-d % n :] + block[: -d % n] if n else block
    return tuple(out)


def phi(filling: Filling, n: int) -> Filling:
    """Rotate each block of n consecutive columns one step to the right."""
    _check_blocks(filling.shape, n)
    return from_column_sets(filling.shape, _rotate_sets(filling.column_sets(), n))


def phi_power(filling: Filling, n: int, d: int) -> Filling:
    _check_blocks(filling.shape, n)
    return from_column_sets(filling.shape, _rotate_sets(filling.column_sets(), n, d % n))


def orbits(
    shape: SkewShape, n: int, m: int, content: Composition | None = None
) -> list[list[Filling]]:
    """Orbit partition of the fillings under phi; each orbit starts at its
    least element in enumeration order and follows repeated phi."""
    _check_blocks(shape, n)
    pool = (
        list(enumerate_cof(shape, m))
        if content is None
        else list(enumerate_cof_content(shape, content))
    )
    seen: set[tuple] = set()
    out = []
    for f in pool:
        key = f.column_sets()
        if key in seen:
            continue
        orbit = []
        cur = f
        while cur.column_sets() not in seen:
            seen.add(cur.column_sets())
            orbit.append(cur)
            cur = phi(cur, n)
        out.append(orbit)
    return out


# ---------------------------------------------------------------------------
# CSP verification
# ---------------------------------------------------------------------------


@dataclass
class CspCheck:
    d: int
    fixed: int
    value: int | None
    residue: str
    ok: bool

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "fixed": self.fixed,
            "f_at_root": self.value if self.value is not None else self.residue,
            "ok": self.ok,
        }


@dataclass
class CspReport:
    triple: dict
    checks: list[CspCheck]
    passed: bool
    applicable: bool = True
    witness: str | None = None
    lyndon: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "triple": self.triple,
            "checks": [c.to_json() for c in self.checks],
            "pass": self.passed,
        }
        if not self.applicable:
            out["applicable"] = False
            out["witness"] = self.witness
        if self.lyndon:
            out["lyndon"] = self.lyndon
        if self.notes:
            out["notes"] = self.notes
        return out

    def table(self) -> str:
        lines = ["  d  fixed  f(xi^d)"]
        for c in self.checks:
            val = c.value if c.value is not None else c.residue
            mark = "ok" if c.ok else "MISMATCH"
            lines.append(f"  {c.d}  {c.fixed}  {val}  {mark}")
        return "\n".join(lines)


def verify_csp(
    n: int, poly: QPoly, fixed_counts: Callable[[int], int], triple: dict | None = None
) -> CspReport:
    """Check fixed(d) = poly at a primitive n-th root raised to d, exactly.

    ``fixed_counts(d)`` must count fixed points of the d-th power of the
    generator by direct means; the polynomial is reduced mod Phi_{n/gcd(n,d)}
    and must land on that same integer.
    """
    checks = []
    passed = True
    for d in range(1, n + 1):
        e = n // math.gcd(n, d)
        val = eval_at_unity(poly, e)
        as_int = val.is_integer()
        fixed = fixed_counts(d)
        ok = as_int is not None and as_int == fixed
        passed = passed and ok
        checks.append(
            CspCheck(d, fixed, as_int, val.residue.text(), ok)
        )
    return CspReport(triple or {}, checks, passed)


# ---------------------------------------------------------------------------
# Fixed-point counting
# ---------------------------------------------------------------------------


def count_phi_fixed(
    shape: SkewShape, n: int, d: int, m: int, content: Composition | None = None
) -> int:
    """Fixed points of phi^d, by orbit-free direct application when the set
    is small, else by counting gcd(d,n)-periodic column-set tuples."""
    _check_blocks(shape, n)
    total = count_cof(shape, m)
    if total <= ENUMERATION_LIMIT and (content is None or total <= ENUMERATION_LIMIT):
        pool = (
            enumerate_cof(shape, m)
            if content is None
            else enumerate_cof_content(shape, content)
        )
        cnt = 0
        for f in pool:
            if phi_power(f, n, d) == f:
                cnt += 1
        return cnt
    g = math.gcd(d, n)
    if content is None:
        out = 1
        heights = shape.col_heights()
        for b in range(0, len(heights), n):
            out *= math.comb(m, heights[b]) ** g
        return out
    return _periodic_content_counts(shape, n, g, m)[tuple(content)]


def _periodic_content_counts(
    shape: SkewShape, n: int, g: int, m: int
) -> dict[tuple[int, ...], int]:
    """Content vector -> number of g-periodic column-set tuples.

    Each block contributes g freely chosen sets, each repeated n/g times.
    """
    reps = n // g
    heights = shape.col_heights()
    states: dict[tuple[int, ...], int] = {(0,) * m: 1}
    for b in range(0, len(heights), n):
        h = heights[b]
        for _ in range(g):
            nxt: dict[tuple[int, ...], int] = {}
            for s in combinations(range(1, m + 1), h):
                for content, cnt in states.items():
                    vec = list(content)
                    for v in s:
                        vec[v - 1] += reps
                    key = tuple(vec)
                    nxt[key] = nxt.get(key, 0) + cnt
            states = nxt
    return states


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------


def macdonald_csp_suite(
    lam: Partition, n: int, m: int, mu: Partition = ()
) -> CspReport:
    """The main (and skew) cyclic sieving check, plus the Lyndon-like family
    condition for every divisor of n."""
    lam, mu = partition(lam), partition(mu)
    shape = SkewShape(scale(n, lam), scale(n, mu))
    poly = principal_maj_poly(shape, m)
    report = verify_csp(
        n,
        poly,
        lambda d: count_phi_fixed(shape, n, d, m),
        {"set": f"COF({shape},{m})", "action": f"phi (n={n})", "f": poly.text()},
    )
    for d in range(1, n + 1):
        if n % d:
            continue
        smaller = SkewShape(scale(n // d, lam), scale(n // d, mu))
        lhs = principal_maj_poly(smaller, m).at_one()
        rhs = eval_at_unity(poly, d).is_integer()
        ok = rhs is not None and lhs == rhs
        report.lyndon.append({"d": d, "f_smaller_at_1": lhs, "f_at_root": rhs, "ok": ok})
        report.passed = report.passed and ok
    return report


def refined_csp_suite(lam: Partition, n: int, nu: Composition) -> CspReport:
    """Cyclic sieving on fillings of shape n*lam with content nu, with
    f = the coefficient of m_{sort(nu)} in the full expansion."""
    lam = partition(lam)
    nu = tuple(nu)
    m = len(nu)
    shape = SkewShape(scale(n, lam))
    if sum(nu) != shape.size():
        raise ValueError("content does not match the shape size")
    full = macdonald_e(shape, m)
    key = tuple(sorted((x for x in nu if x), reverse=True))
    poly = coeff_monomial(full, key)
    return verify_csp(
        n,
        poly,
        lambda d: count_phi_fixed(shape, n, d, m, content=nu),
        {
            "set": f"COF({shape},content={list(nu)})",
            "action": f"phi (n={n})",
            "f": poly.text(),
        },
    )


# ---------------------------------------------------------------------------
# Binary matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if any(v not in (0, 1) for r in self.entries for v in r):
            raise ValueError("entries must be 0/1")
        if len({len(r) for r in self.entries}) > 1:
            raise ValueError("ragged matrix")

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(r) for r in self.entries)

    def col_sums(self) -> tuple[int, ...]:
        return tuple(sum(r[j] for r in self.entries) for j in range(self.ncols))

    def rotate_blocks(self, n: int) -> "BinaryMatrix":
        """Rotate each block of n consecutive columns one step right."""
        cols = list(range(self.ncols))
        perm = []
        for b in range(0, self.ncols, n):
            block = cols[b : b + n]
            perm.extend(block[-1:] + block[:-1])
        return BinaryMatrix(
            tuple(tuple(r[j] for j in perm) for r in self.entries)
        )


def matrix_to_filling(mat: BinaryMatrix, shape: SkewShape) -> Filling:
    """M(i,j) = 1 iff column j of the filling contains i."""
    sets = []
    for j in range(1, shape.ncols + 1):
        sets.append(tuple(i + 1 for i in range(mat.nrows) if mat.entries[i][j - 1]))
    for j, s in enumerate(sets, 1):
        if len(s) != shape.col_height(j):
            raise ContentMismatchMatrix(f"column {j} sum does not match the shape")
    return from_column_sets(shape, sets)


def filling_to_matrix(filling: Filling, m: int) -> BinaryMatrix:
    shape = filling.shape
    rows = []
    for i in range(1, m + 1):
        rows.append(
            tuple(
                1 if i in filling.column_values(j) else 0
                for j in range(1, shape.ncols + 1)
            )
        )
    return BinaryMatrix(tuple(rows))


class ContentMismatchMatrix(ValueError):
    pass


def matrix_equivariance_check(lam: Partition, n: int, nu: Composition) -> dict:
    """On every matrix with row content nu and column content (n*lam)':
    rotating blocks then mapping equals mapping then phi."""
    lam = partition(lam)
    shape = SkewShape(scale(n, lam))
    m = len(nu)
    checked = 0
    failures = []
    for f in enumerate_cof_content(shape, tuple(nu)):
        mat = filling_to_matrix(f, m)
        back = matrix_to_filling(mat, shape)
        lhs = matrix_to_filling(mat.rotate_blocks(n), shape)
        rhs = phi(f, n)
        checked += 1
        if back != f or lhs != rhs:
            failures.append(f.label())
    return {"checked": checked, "failures": failures, "ok": not failures}


# ---------------------------------------------------------------------------
# The sigma action
# ---------------------------------------------------------------------------


def sigma_action(filling: Filling, sigma: tuple[int, ...]) -> Filling:
    """Relabel entries by the permutation sigma of [m] (one-line notation)
    and rebuild the unique filling."""
    sets = [
        tuple(sorted(sigma[v - 1] for v in s)) for s in filling.column_sets()
    ]
    return from_column_sets(filling.shape, sets)


def permutation_order(sigma: tuple[int, ...]) -> int:
    return math.lcm(*(len(c) for c in _cycles(sigma))) if sigma else 1


def _cycles(sigma: tuple[int, ...]) -> list[list[int]]:
    seen = set()
    out = []
    for start in range(1, len(sigma) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        cur = sigma[start - 1]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            cur = sigma[cur - 1]
        out.append(cyc)
    return out


def is_nearly_free(sigma: tuple[int, ...]) -> bool:
    """All orbits of one common size, plus at most one extra fixed point."""
    lengths = sorted(len(c) for c in _cycles(sigma))
    if not lengths:
        return True
    big = lengths[-1]
    others = [l for l in lengths if l != big]
    return others in ([], [1])


def sigma_power(sigma: tuple[int, ...], d: int) -> tuple[int, ...]:
    out = tuple(range(1, len(sigma) + 1))
    for _ in range(d):
        out = tuple(sigma[v - 1] for v in out)
    return out


def sigma_csp_suite(lam: Partition, m: int, sigma: tuple[int, ...]) -> CspReport:
    """Cyclic sieving under entry relabelling, for nearly free sigma, with
    f the principal specialization x_i = q^(i-1) at Macdonald parameter 1.

    For a sigma that is not nearly free the report is marked not applicable
    and carries the first non-integer root evaluation as a witness; the
    failure is demonstrated, not asserted.
    """
    lam = partition(lam)
    if sorted(sigma) != list(range(1, m + 1)):
        raise ValueError("sigma must be a permutation of 1..m in one-line notation")
    shape = SkewShape(lam)
    at_q1 = macdonald_e(shape, m).map_coeffs(
        lambda c: QPoly.from_int(c.at_one())
    )
    poly = principal_spec(at_q1, "powers")
    order = permutation_order(sigma)

    def fixed(d: int) -> int:
        sd = sigma_power(sigma, d)
        return sum(1 for f in enumerate_cof(shape, m) if sigma_action(f, sd) == f)

    report = verify_csp(
        order,
        poly,
        fixed,
        {
            "set": f"COF({shape},{m})",
            "action": f"sigma={list(sigma)} (order {order})",
            "f": poly.text(),
        },
    )
    if not is_nearly_free(sigma):
        report.applicable = False
        report.passed = False
        for c in report.checks:
            if c.value is None:
                report.witness = f"f at a primitive root of order {order // math.gcd(order, c.d)} is {c.residue}, not an integer"
                break
        else:
            report.witness = "sigma is not nearly free"
        report.notes.append("sigma does not act nearly freely; CSP not asserted")
    return report


# ---------------------------------------------------------------------------
# Root-of-unity product formula
# ---------------------------------------------------------------------------


def unity_formula_exponents(mu: Partition, d: int) -> dict[int, int]:
    """Exponent of binom(m, j) in the product: d times the multiplicity of j
    in the conjugate of mu."""
    mu = partition(mu)
    muc = conjugate(mu)
    out = {}
    for j in set(muc):
        out[j] = d * mult_count(j, muc)
    return out


def unity_formula(mu: Partition, n: int, d: int, m: int) -> int:
    """E_{n*mu}(1^m; xi^d, 0) for xi a primitive n-th root and d | n."""
    if n % d:
        raise ValueError("d must divide n")
    out = 1
    for j, e in unity_formula_exponents(mu, d).items():
        out *= math.comb(m, j) ** e
    return out


def unity_formula_check(mu: Partition, n: int, d: int, m: int) -> bool:
    """Formula against the exact evaluation of the maj generating function."""
    shape = SkewShape(scale(n, partition(mu)))
    poly = principal_maj_poly(shape, m)
    val = eval_at_unity(poly, n // d).is_integer()
    return val is not None and val == unity_formula(mu, n, d, m)
