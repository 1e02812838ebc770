"""Kronecker coefficients g_{(n-p,p),lam,nu} by counting Kronecker tableaux.

A Kronecker tableau of shape lam/alpha and type nu/alpha is an alpha-lattice
SSYT that additionally satisfies alpha_1 == alpha_2, or has a 1 in box
(2, alpha_1), or has exactly alpha_1 - alpha_2 2's in its first row.  When
lam_1 >= 2p-1 the coefficient of s_nu in s_{(n-p,p)} * s_lam equals the number
of Kronecker tableaux summed over alpha |- p inside the intersection of lam
and nu; when l(lam) >= 2p-1 the same rule applies to the conjugates.  Outside
both ranges the signed-sum oracle is used, and the alpha-sum is still an
upper bound.
"""

from __future__ import annotations

from typing import NamedTuple

from .expansion import SchurExpansion
from .partitions import (
    DomainError,
    Partition,
    conjugate,
    contains,
    enumerate_partitions,
    intersect,
    part,
)
from .tableaux import _count_fillings, _expand_fillings

METHOD_ROWS = "tableau_rule"
METHOD_CONJUGATE = "tableau_rule_conjugate"
METHOD_ORACLE = "oracle_fallback"


def two_row(n: int, p: int) -> Partition:
    """The partition (n-p, p), normalized when p (or n) is 0."""
    if p < 0 or 2 * p > n:
        raise DomainError(f"need 0 <= 2p <= n, got p={p}, n={n}")
    if p == 0:
        return (n,) if n else ()
    return (n - p, p)


class KronResult(NamedTuple):
    value: int
    method: str
    upper_bound: int | None = None


class KronExpansion(NamedTuple):
    expansion: SchurExpansion
    method: str


def _type_difference(nu: Partition, alpha: Partition) -> tuple[int, ...]:
    counts = tuple(
        nu[i] - (alpha[i] if i < len(alpha) else 0) for i in range(len(nu))
    )
    while counts and counts[-1] == 0:
        counts = counts[:-1]
    return counts


def kronecker_tableau_count(lam: Partition, alpha: Partition, nu: Partition) -> int:
    """Number of Kronecker tableaux of shape lam/alpha and type nu/alpha;
    0 whenever the containments or sizes fail."""
    if sum(lam) != sum(nu):
        return 0
    if not contains(alpha, lam) or not contains(alpha, nu):
        return 0
    return _count_fillings(lam, alpha, _type_difference(nu, alpha), alpha, True)


def _tableau_sum(lam: Partition, nu: Partition, p: int) -> int:
    inter = intersect(lam, nu)
    return sum(
        kronecker_tableau_count(lam, alpha, nu)
        for alpha in enumerate_partitions(p, inside=inter)
    )


def kron_upper_bound(p: int, lam: Partition, nu: Partition) -> int:
    """Sum of Kronecker tableau counts over alpha |- p inside lam and nu;
    an upper bound for g_{(n-p,p),lam,nu}, exact when lam_1 >= 2p-1."""
    if sum(lam) != sum(nu):
        raise DomainError(f"|{lam}| != |{nu}|")
    return _tableau_sum(lam, nu, p)


def _check_args(n: int, p: int, lam: Partition) -> None:
    if sum(lam) != n:
        raise DomainError(f"{lam} is not a partition of {n}")
    if p < 0 or 2 * p > n:
        raise DomainError(f"need 0 <= 2p <= n, got p={p}, n={n}")


def kron_expand_tworow(n: int, p: int, lam: Partition) -> KronExpansion:
    """Full expansion of s_{(n-p,p)} * s_lam.

    Uses the tableau rule on lam when lam_1 >= 2p-1, on the conjugate when
    l(lam) >= 2p-1, and the signed-sum oracle otherwise.
    """
    _check_args(n, p, lam)
    if part(lam, 1) >= 2 * p - 1:
        buckets: dict[Partition, int] = {}
        for alpha in enumerate_partitions(p, inside=lam):
            _expand_fillings(lam, alpha, alpha, kron=True, out=buckets)
        return KronExpansion(SchurExpansion(buckets), METHOD_ROWS)
    if len(lam) >= 2 * p - 1:
        lamc = conjugate(lam)
        buckets = {}
        for alpha in enumerate_partitions(p, inside=lamc):
            _expand_fillings(lamc, alpha, alpha, kron=True, out=buckets)
        flipped = {conjugate(nu): c for nu, c in buckets.items()}
        return KronExpansion(SchurExpansion(flipped), METHOD_CONJUGATE)
    from .oracle import oracle_tworow_signed_sum

    return KronExpansion(oracle_tworow_signed_sum(n, p, lam), METHOD_ORACLE)


def kron_coeff(n: int, p: int, lam: Partition, nu: Partition) -> KronResult:
    """Single coefficient of s_nu in s_{(n-p,p)} * s_lam with its method tag
    and the tableau-count upper bound."""
    _check_args(n, p, lam)
    if sum(nu) != n:
        raise DomainError(f"{nu} is not a partition of {n}")
    if part(lam, 1) >= 2 * p - 1:
        # vanishing shortcuts are justified only where the tableau rule is exact
        if sum(intersect(lam, nu)) < p:
            return KronResult(0, METHOD_ROWS, 0)
        if len(nu) > len(lam) + min(p, len(lam)):
            return KronResult(0, METHOD_ROWS, 0)
        value = _tableau_sum(lam, nu, p)
        return KronResult(value, METHOD_ROWS, value)
    upper = _tableau_sum(lam, nu, p)
    if len(lam) >= 2 * p - 1:
        lamc, nuc = conjugate(lam), conjugate(nu)
        if sum(intersect(lamc, nuc)) < p:
            return KronResult(0, METHOD_CONJUGATE, upper)
        if len(nuc) > len(lamc) + min(p, len(lamc)):
            return KronResult(0, METHOD_CONJUGATE, upper)
        value = _tableau_sum(lamc, nuc, p)
        return KronResult(value, METHOD_CONJUGATE, upper)
    from .oracle import oracle_tworow_signed_coeff

    value = oracle_tworow_signed_coeff(n, p, lam, nu)
    return KronResult(value, METHOD_ORACLE, upper)
