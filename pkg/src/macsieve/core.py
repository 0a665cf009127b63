"""Exact q-arithmetic and partition basics.

Polynomials in q over arbitrary-precision integers, q-analogues, cyclotomic
polynomials, and evaluation at roots of unity by reduction mod Phi_e(q).
Root-of-unity values are never floated: a value is an element of
Z[q]/Phi_e(q), and equality with an integer is exact.

All values here are immutable and all functions are pure, so everything is
safe to share across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


# ---------------------------------------------------------------------------
# Partitions and compositions
# ---------------------------------------------------------------------------

#: A partition is a tuple of weakly decreasing positive integers; () is the
#: empty partition.  A composition is any tuple of non-negative integers.
Partition = tuple[int, ...]
Composition = tuple[int, ...]


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` into a partition: strip trailing zeros, check order.

    Non-sorted input is a caller error and raises ValueError rather than
    being silently sorted.
    """
    t = tuple(int(p) for p in parts)
    while t and t[-1] == 0:
        t = t[:-1]
    for a, b in zip(t, t[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {t}")
    if t and t[-1] < 0:
        raise ValueError(f"negative part in {t}")
    return t


def is_partition(seq: Iterable[int]) -> bool:
    t = tuple(seq)
    while t and t[-1] == 0:
        t = t[:-1]
    return all(a >= b for a, b in zip(t, t[1:])) and all(p > 0 for p in t)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram of ``lam``."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def scale(n: int, lam: Partition) -> Partition:
    """Multiply every part by n (n >= 1)."""
    if n < 1:
        raise ValueError("scale factor must be >= 1")
    return tuple(n * p for p in lam)


def mult_count(j: int, lam: Iterable[int]) -> int:
    """Number of parts of ``lam`` equal to j (j >= 1)."""
    if j < 1:
        raise ValueError("j must be >= 1")
    return sum(1 for p in lam if p == j)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest part first, in decreasing lex order."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(max_part, n)
    for first in range(top, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions mu contained in lam (mu_i <= lam_i componentwise)."""
    if not lam:
        yield ()
        return

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            yield ()
            return
        for part in range(min(cap, lam[i]), -1, -1):
            if part == 0:
                yield ()
                return
            for rest in rec(i + 1, part):
                yield (part,) + rest

    yield from rec(0, lam[0])


def parse_partition(text: str) -> Partition:
    """Parse ``4,2,1``; the empty string or ``0`` is the empty partition."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    return partition(int(p) for p in text.split(","))


def partition_str(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "0"


# ---------------------------------------------------------------------------
# Polynomials in q
# ---------------------------------------------------------------------------


class QPoly:
    """Univariate polynomial in q with integer coefficients.

    Stored dense with no trailing zeros, so no zero coefficients survive in
    the sparse view.  The degree of the zero polynomial is the sentinel None
    rather than an integer, keeping degree arithmetic total.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int] | dict[int, int] = ()):
        if isinstance(coeffs, dict):
            if coeffs:
                dense = [0] * (max(coeffs) + 1)
                for d, c in coeffs.items():
                    if d < 0:
                        raise ValueError("negative degree")
                    dense[d] = int(c)
            else:
                dense = []
        else:
            dense = [int(c) for c in coeffs]
        while dense and dense[-1] == 0:
            dense.pop()
        self._c = tuple(dense)

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "QPoly":
        return _QP_ZERO

    @staticmethod
    def one() -> "QPoly":
        return _QP_ONE

    @staticmethod
    def from_int(n: int) -> "QPoly":
        return QPoly((n,))

    @staticmethod
    def q_power(d: int, coeff: int = 1) -> "QPoly":
        """coeff * q^d"""
        if d < 0:
            raise ValueError("negative degree")
        return QPoly((0,) * d + (coeff,))

    # -- views -------------------------------------------------------------

    def coefficients(self) -> dict[int, int]:
        """Sparse view: degree -> nonzero coefficient."""
        return {d: c for d, c in enumerate(self._c) if c}

    def coefficient(self, d: int) -> int:
        return self._c[d] if 0 <= d < len(self._c) else 0

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self._c) - 1 if self._c else None

    def lowest_degree(self) -> int | None:
        for d, c in enumerate(self._c):
            if c:
                return d
        return None

    def constant_value(self) -> int | None:
        """The integer c if the polynomial is the constant c, else None."""
        if not self._c:
            return 0
        if len(self._c) == 1:
            return self._c[0]
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "QPoly | int") -> "QPoly":
        o = other._c if isinstance(other, QPoly) else (int(other),)
        a, b = self._c, o
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self._c))

    def __sub__(self, other: "QPoly | int") -> "QPoly":
        return self + (-other if isinstance(other, QPoly) else -int(other))

    def __rsub__(self, other: int) -> "QPoly":
        return (-self) + int(other)

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            return QPoly(tuple(other * c for c in self._c))
        a, b = self._c, other._c
        if not a or not b:
            return _QP_ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPoly":
        if n < 0:
            raise ValueError("negative power")
        result = _QP_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, d: int) -> "QPoly":
        """Multiply by q^d."""
        if self.is_zero():
            return self
        return QPoly((0,) * d + self._c)

    def __call__(self, x: int) -> int:
        """Exact evaluation at an integer point."""
        acc = 0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def at_one(self) -> int:
        return sum(self._c)

    def divmod_monic(self, div: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Quotient and remainder by a monic divisor; exact over Z."""
        if div.is_zero() or div._c[-1] != 1:
            raise ValueError("divisor must be monic")
        r = list(self._c)
        dd = div.degree()
        assert dd is not None
        if len(r) - 1 < dd:
            return _QP_ZERO, self
        quot = [0] * (len(r) - dd)
        for i in range(len(r) - dd - 1, -1, -1):
            coef = r[i + dd]
            if coef:
                quot[i] = coef
                for j, c in enumerate(div._c):
                    r[i + j] -= coef * c
        return QPoly(quot), QPoly(r)

    def __mod__(self, div: "QPoly") -> "QPoly":
        return self.divmod_monic(div)[1]

    # -- ordering / hashing --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._c == (() if other == 0 else (other,))
        if isinstance(other, QPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    # -- text ----------------------------------------------------------------

    def text(self, spaces: bool = False) -> str:
        """Canonical text, ascending degree, e.g. ``1+q`` or ``q + 2*q^2``."""
        if not self._c:
            return "0"
        parts: list[str] = []
        for d, c in enumerate(self._c):
            if not c:
                continue
            mag = abs(c)
            if d == 0:
                term = str(mag)
            elif d == 1:
                term = "q" if mag == 1 else f"{mag}*q"
            else:
                term = f"q^{d}" if mag == 1 else f"{mag}*q^{d}"
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                sign = " + " if c > 0 else " - "
                parts.append((sign if spaces else sign.strip()) + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({self.text()})"

    @staticmethod
    def parse(text: str) -> "QPoly":
        """Inverse of :meth:`text` (tolerant about whitespace)."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return _QP_ZERO
        s = s.replace("-", "+-")
        coeffs: dict[int, int] = {}
        for term in s.split("+"):
            if not term:
                continue
            neg = term.startswith("-")
            if neg:
                term = term[1:]
            if "q" not in term:
                d, c = 0, int(term)
            else:
                head, _, tail = term.partition("q")
                c = int(head.rstrip("*")) if head.rstrip("*") else 1
                d = int(tail[1:]) if tail.startswith("^") else 1
            coeffs[d] = coeffs.get(d, 0) + (-c if neg else c)
        return QPoly(coeffs)


_QP_ZERO = QPoly.__new__(QPoly)
_QP_ZERO._c = ()
_QP_ONE = QPoly.__new__(QPoly)
_QP_ONE._c = (1,)


# ---------------------------------------------------------------------------
# q-analogues
# ---------------------------------------------------------------------------


def q_int(n: int) -> QPoly:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return QPoly((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> QPoly:
    """[n]_q! = [n]_q [n-1]_q ... [1]_q."""
    if n <= 0:
        return QPoly.one()
    return q_factorial(n - 1) * q_int(n)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPoly:
    """Gaussian binomial; zero unless n >= k >= 0.

    Computed by the Pascal recurrence, so everything stays in Z[q].
    """
    if k < 0 or k > n:
        return QPoly.zero()
    if k == 0 or k == n:
        return QPoly.one()
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def q_multinomial(n: int, parts: Iterable[int]) -> QPoly:
    """[n; a_1,...,a_l]_q; zero unless all a_i >= 0 and sum a_i = n."""
    ps = tuple(parts)
    if any(a < 0 for a in ps) or sum(ps) != n:
        return QPoly.zero()
    out = QPoly.one()
    acc = 0
    for a in ps:
        acc += a
        out = out * q_binomial(acc, a)
    return out


# ---------------------------------------------------------------------------
# Cyclotomic polynomials and root-of-unity values
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic(e: int) -> QPoly:
    """The e-th cyclotomic polynomial, exactly, via (q^e - 1) = prod Phi_d."""
    if e < 1:
        raise ValueError("e must be >= 1")
    num = QPoly.q_power(e) - 1
    for d in range(1, e):
        if e % d == 0:
            quot, rem = num.divmod_monic(cyclotomic(d))
            assert rem.is_zero()
            num = quot
    return num


@dataclass(frozen=True)
class CyclotomicValue:
    """An element of Z[q]/Phi_e(q): the exact value of a polynomial at a
    primitive e-th root of unity."""

    order: int
    residue: QPoly

    def __post_init__(self) -> None:
        object.__setattr__(self, "residue", self.residue % cyclotomic(self.order))

    def is_integer(self) -> int | None:
        """The integer c when the residue is the constant c, else None.

        For order 1 the residue is always constant (Phi_1 has degree 1).
        """
        return self.residue.constant_value()

    def __add__(self, other: "CyclotomicValue | int") -> "CyclotomicValue":
        r = other.residue if isinstance(other, CyclotomicValue) else QPoly.from_int(other)
        if isinstance(other, CyclotomicValue) and other.order != self.order:
            raise ValueError("mixed orders")
        return CyclotomicValue(self.order, self.residue + r)

    def __mul__(self, other: "CyclotomicValue | int") -> "CyclotomicValue":
        r = other.residue if isinstance(other, CyclotomicValue) else QPoly.from_int(other)
        if isinstance(other, CyclotomicValue) and other.order != self.order:
            raise ValueError("mixed orders")
        return CyclotomicValue(self.order, self.residue * r)

    def __neg__(self) -> "CyclotomicValue":
        return CyclotomicValue(self.order, -self.residue)

    def __sub__(self, other: "CyclotomicValue | int") -> "CyclotomicValue":
        return self + (-other if isinstance(other, CyclotomicValue) else -int(other))


def eval_at_unity(f: QPoly, e: int) -> CyclotomicValue:
    """f reduced mod Phi_e(q): the value of f at a primitive e-th root."""
    return CyclotomicValue(e, f)


def q_lucas_check(n: int, k: int, d: int) -> bool:
    """Check [n k]_q = C(n1,k1) [n0 k0]_q mod Phi_d, n = n1*d + n0 etc."""
    if d < 1:
        raise ValueError("d must be >= 1")
    n1, n0 = divmod(n, d)
    k1, k0 = divmod(k, d)
    lhs = q_binomial(n, k) % cyclotomic(d)
    rhs = (math.comb(n1, k1) * q_binomial(n0, k0)) % cyclotomic(d)
    return lhs == rhs
