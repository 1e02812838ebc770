"""Two independent ground truths for Kronecker products.

The signed-sum oracle expands s_{(n-p,p)} * s_lam as
sum over a |- p contained in lam of s_a s_{lam/a}
minus the same sum over b |- p-1, pure tableau combinatorics valid for every
lam.  The character oracle evaluates the triple character sum
g = sum over cycle types rho of chi^lam chi^mu chi^nu / z_rho with exact
integer arithmetic.
"""

from __future__ import annotations

import math
from collections import Counter
from functools import lru_cache
from typing import NamedTuple

from .expansion import SchurExpansion
from .partitions import (
    DomainError,
    Partition,
    conjugate,
    enumerate_partitions,
    intersect,
)
from .tableaux import _count_fillings, _expand_fillings


class CycleType(NamedTuple):
    """A conjugacy class of S_n: its cycle lengths and centralizer order."""

    parts: Partition
    z: int


def centralizer_order(rho: Partition) -> int:
    z = 1
    for i, m in Counter(rho).items():
        z *= i**m * math.factorial(m)
    return z


def cycle_types(n: int) -> list[CycleType]:
    """All classes of S_n in descending lex order of cycle type."""
    return [CycleType(rho, centralizer_order(rho)) for rho in enumerate_partitions(n)]


def _type_difference(nu: Partition, alpha: Partition) -> tuple[int, ...]:
    counts = tuple(
        nu[i] - (alpha[i] if i < len(alpha) else 0) for i in range(len(nu))
    )
    while counts and counts[-1] == 0:
        counts = counts[:-1]
    return counts


def _check_tworow_args(n: int, p: int, lam: Partition) -> None:
    if sum(lam) != n:
        raise DomainError(f"{lam} is not a partition of {n}")
    if p < 0 or 2 * p > n:
        raise DomainError(f"need 0 <= 2p <= n, got p={p}, n={n}")


def oracle_tworow_signed_sum(n: int, p: int, lam: Partition) -> SchurExpansion:
    """Full expansion of s_{(n-p,p)} * s_lam by the signed skew-product sum."""
    _check_tworow_args(n, p, lam)
    acc: dict[Partition, int] = {}
    for alpha in enumerate_partitions(p, inside=lam):
        _expand_fillings(lam, alpha, alpha, kron=False, out=acc)
    if p >= 1:
        neg: dict[Partition, int] = {}
        for beta in enumerate_partitions(p - 1, inside=lam):
            _expand_fillings(lam, beta, beta, kron=False, out=neg)
        for nu, c in neg.items():
            acc[nu] = acc.get(nu, 0) - c
    bad = {nu: c for nu, c in acc.items() if c < 0}
    assert not bad, f"signed sum went negative: {bad}"
    return SchurExpansion(acc)


def oracle_tworow_signed_coeff(n: int, p: int, lam: Partition, nu: Partition) -> int:
    """Single coefficient of s_nu in s_{(n-p,p)} * s_lam, same signed sum."""
    _check_tworow_args(n, p, lam)
    if sum(nu) != n:
        raise DomainError(f"{nu} is not a partition of {n}")
    inter = intersect(lam, nu)
    total = 0
    for alpha in enumerate_partitions(p, inside=inter):
        total += _count_fillings(lam, alpha, _type_difference(nu, alpha), alpha, False)
    if p >= 1:
        for beta in enumerate_partitions(p - 1, inside=inter):
            total -= _count_fillings(lam, beta, _type_difference(nu, beta), beta, False)
    assert total >= 0, f"signed sum went negative at {nu}: {total}"
    return total


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    """Character value by signed border-strip removal, largest cycle first."""
    if not rho:
        return 1
    k = rho[0]
    rest = rho[1:]
    length = len(lam)
    beta = [lam[j] + (length - 1 - j) for j in range(length)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for b2 in beta if nb < b2 < b)
        newbeta = sorted((nb if x == b else x for x in beta), reverse=True)
        mu = tuple(
            x
            for x in (newbeta[j] - (length - 1 - j) for j in range(length))
            if x
        )
        total += (-1) ** height * _mn(mu, rest)
    return total


def mn_character(lam: Partition, rho: Partition) -> int:
    """chi^lam evaluated on the class of cycle type rho."""
    if sum(lam) != sum(rho):
        raise DomainError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn(tuple(lam), tuple(rho))


@lru_cache(maxsize=None)
def _char_table(n: int):
    """(partitions, centralizer orders, chi[i][j]) for S_n, descending lex."""
    parts = tuple(enumerate_partitions(n))
    zs = tuple(centralizer_order(r) for r in parts)
    chi = tuple(tuple(_mn(l, r) for r in parts) for l in parts)
    index = {lam: i for i, lam in enumerate(parts)}
    return parts, zs, chi, index


def oracle_character_kron(lam: Partition, mu: Partition) -> SchurExpansion:
    """Full expansion of s_lam * s_mu from the triple character sum."""
    n = sum(lam)
    if sum(mu) != n:
        raise DomainError(f"size mismatch: |{lam}| != |{mu}|")
    parts, zs, chi, index = _char_table(n)
    fact = math.factorial(n)
    classes = [fact // z for z in zs]
    row_l = chi[index[tuple(lam)]]
    row_m = chi[index[tuple(mu)]]
    weights = [c * a * b for c, a, b in zip(classes, row_l, row_m)]
    result: dict[Partition, int] = {}
    for i, nu in enumerate(parts):
        row_n = chi[i]
        s = sum(w * x for w, x in zip(weights, row_n))
        assert s % fact == 0, f"non-integral Kronecker coefficient at {nu}"
        g = s // fact
        assert g >= 0, f"negative Kronecker coefficient at {nu}"
        if g:
            result[nu] = g
    return SchurExpansion(result)


def oracle_character_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Single Kronecker coefficient g_{lam,mu,nu} from the character sum."""
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise DomainError("all three partitions must have the same size")
    parts, zs, chi, index = _char_table(n)
    fact = math.factorial(n)
    row_l = chi[index[tuple(lam)]]
    row_m = chi[index[tuple(mu)]]
    row_n = chi[index[tuple(nu)]]
    s = sum(
        (fact // z) * a * b * c for z, a, b, c in zip(zs, row_l, row_m, row_n)
    )
    assert s % fact == 0, f"non-integral Kronecker coefficient at {nu}"
    g = s // fact
    assert g >= 0
    return g


def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula)."""
    if not lam:
        return 1
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    f, rem = divmod(math.factorial(sum(lam)), hooks)
    assert rem == 0
    return f
