"""Kostka-Foulkes polynomials, transformed Hall-Littlewood polynomials, and
their root-of-unity factorizations.

K_{lam,mu}(q) is the charge generating function over SSYT(lam, mu); the
transformed Hall-Littlewood polynomial is its Schur generating function.
The root-of-unity identities are checked in exact cyclotomic-coefficient
arithmetic: every coefficient lives in Z[q]/Phi_d and is reduced after each
arithmetic step.
"""

from __future__ import annotations

from functools import lru_cache

from .core import (
    CyclotomicValue,
    Partition,
    QPoly,
    conjugate,
    eval_at_unity,
    mult_count,
    partition,
    partitions_of,
)
from .fillings import SkewShape, macdonald_e
from .rsk_charge import Tableau, charge
from .symfunc import (
    MONOMIAL,
    SCHUR,
    SymPoly,
    complete,
    from_schur,
    kostka_number,
    omega_on_schur,
    plethysm_pk,
    ssyt_tableaux,
    to_schur,
)


class SizeMismatch(ValueError):
    pass


@lru_cache(maxsize=None)
def kostka_foulkes(lam: Partition, mu: Partition) -> QPoly:
    """K_{lam,mu}(q) = sum of q^charge over SSYT(lam) with content mu.

    A non-partition content is sorted first: charge needs partition content
    and Kostka-Foulkes coefficients are symmetric in it.
    """
    lam = partition(lam)
    mu = tuple(sorted((p for p in mu if p), reverse=True))
    if sum(lam) != sum(mu):
        raise SizeMismatch(f"|{lam}| != |{mu}|")
    total = QPoly.zero()
    for rows in ssyt_tableaux(lam, content=mu):
        total = total + QPoly.q_power(charge(Tableau(rows).reading_word()))
    return total


def transformed_hl(mu: Partition, m: int) -> SymPoly:
    """Q'_mu(x;q) = sum over lam of K_{lam,mu}(q) s_lam, in m variables.

    Keys longer than m are kept (they vanish as polynomials but matter under
    omega); a final monomial expansion drops them.
    """
    mu = partition(mu)
    coeffs = {}
    for lam in partitions_of(sum(mu)):
        k = kostka_foulkes(lam, mu)
        if not k.is_zero():
            coeffs[lam] = k
    if not mu:
        coeffs[()] = QPoly.one()
    return SymPoly(m, SCHUR, coeffs)


def verify_e_as_hl(lam: Partition, m: int) -> bool:
    """E_lam(x;q,0) = omega Q'_{lam'}(x;q), compared in m variables."""
    lam = partition(lam)
    lhs = to_schur(macdonald_e(SkewShape(lam), m))
    rhs = omega_on_schur(transformed_hl(conjugate(lam), m))
    rhs_trim = SymPoly(m, SCHUR, {k: v for k, v in rhs.coeffs.items() if len(k) <= m})
    return lhs == rhs_trim


def refined_coefficient_check(lam: Partition, nu: Partition) -> bool:
    """[m_nu] E_lam(x;q,0) = sum over mu of K_{mu,nu}(1) K_{mu',lam'}(q)."""
    lam, nu = partition(lam), partition(nu)
    if sum(lam) != sum(nu):
        raise SizeMismatch(f"|{lam}| != |{nu}|")
    m = max(len(nu), 1)
    lhs = macdonald_e(SkewShape(lam), m).coefficient(nu)
    rhs = QPoly.zero()
    for mu in partitions_of(sum(lam)):
        k1 = kostka_number(mu, nu)
        if not k1:
            continue
        rhs = rhs + kostka_foulkes(conjugate(mu), conjugate(lam)) * k1
    return lhs == rhs


# ---------------------------------------------------------------------------
# Cyclotomic-coefficient symmetric polynomials
# ---------------------------------------------------------------------------


def _reduce_exponents(f: SymPoly, e: int) -> dict[tuple[int, ...], CyclotomicValue]:
    expanded = from_schur(f) if f.basis == SCHUR else f
    return {
        vec: eval_at_unity(c, e) for vec, c in expanded.exponents().items()
    }


def _cyclo_mul(
    a: dict[tuple[int, ...], CyclotomicValue],
    b: dict[tuple[int, ...], CyclotomicValue],
    e: int,
) -> dict[tuple[int, ...], CyclotomicValue]:
    out: dict[tuple[int, ...], CyclotomicValue] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            prod = ca * cb
            out[key] = out.get(key, CyclotomicValue(e, QPoly.zero())) + prod
    return {k: v for k, v in out.items() if not v.residue.is_zero()}


def hl_rect_unity_check(k: int, n: int, m: int) -> bool:
    """Q'_{k^n} at a primitive n-th root equals (-1)^(k(n-1)) p_n[h_k]."""
    lhs = _reduce_exponents(transformed_hl((k,) * n, m), n)
    sign = -1 if (k * (n - 1)) % 2 else 1
    rhs_poly = plethysm_pk(n, complete(k, m)).scale(sign)
    rhs = _reduce_exponents(rhs_poly, n)
    return lhs == rhs


def hl_root_factorization_check(lam: Partition, d: int, m: int) -> bool:
    """Q'_lam(x; xi) = Q'_{lam-tilde}(x; xi) * prod_j Q'_{j^d}(x; xi)^m'_j
    with m_j(lam) = d m'_j + r_j and lam-tilde = (1^r_1, 2^r_2, ...)."""
    lam = partition(lam)
    lhs = _reduce_exponents(transformed_hl(lam, m), d)
    tilde_parts = []
    factors: list[tuple[int, int]] = []  # (j, multiplicity of the rectangle)
    top = lam[0] if lam else 0
    for j in range(1, top + 1):
        mj = mult_count(j, lam)
        mj_quot, rj = divmod(mj, d)
        tilde_parts.extend([j] * rj)
        if mj_quot:
            factors.append((j, mj_quot))
    tilde = partition(tuple(sorted(tilde_parts, reverse=True)))
    rhs = _reduce_exponents(transformed_hl(tilde, m), d)
    for j, mult in factors:
        rect = _reduce_exponents(transformed_hl((j,) * d, m), d)
        for _ in range(mult):
            rhs = _cyclo_mul(rhs, rect, d)
    lhs = {k: v for k, v in lhs.items() if not v.residue.is_zero()}
    return lhs == rhs
