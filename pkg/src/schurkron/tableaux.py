"""Semistandard skew tableaux filtered by alpha-shifted lattice words.

The fill order is the reverse reading order (right to left within a row, top
row first), which makes the lattice condition a prefix property: a value v may
be placed only while #(v-1)'s + alpha_{v-1} stays >= #v's + alpha_v.  The
running tallies count[v] + alpha_v are kept in ``profile``, which therefore
stays weakly decreasing and, at a leaf, *is* the partition type + alpha.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .partitions import Partition, SkewShape, contains


class Tableau(NamedTuple):
    """A filling of a skew shape; row r holds the entries of its skew cells."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]


def is_ssyt(t: Tableau) -> bool:
    """Rows weakly increase left to right, columns strictly increase down."""
    outer, inner = t.shape
    if len(t.rows) != len(outer):
        return False
    grid: dict[tuple[int, int], int] = {}
    for r, row in enumerate(t.rows):
        start = inner[r] if r < len(inner) else 0
        if len(row) != outer[r] - start:
            return False
        for off, v in enumerate(row):
            if v < 1:
                return False
            grid[(r, start + off)] = v
    for (r, c), v in grid.items():
        if (r, c + 1) in grid and grid[(r, c + 1)] < v:
            return False
        if (r - 1, c) in grid and grid[(r - 1, c)] >= v:
            return False
    return True


def reverse_reading_word(t: Tableau) -> tuple[int, ...]:
    """Entries read right to left along each row, top row first."""
    word: list[int] = []
    for row in t.rows:
        word.extend(reversed(row))
    return tuple(word)


def tableau_type(t: Tableau) -> tuple[int, ...]:
    """(t_1, t_2, ...) where t_i counts the entries equal to i."""
    counts: list[int] = []
    for row in t.rows:
        for v in row:
            while len(counts) < v:
                counts.append(0)
            counts[v - 1] += 1
    return tuple(counts)


def is_alpha_lattice(word: Sequence[int], alpha: Partition) -> bool:
    """True iff every prefix has #i's + alpha_i >= #(i+1)'s + alpha_{i+1}."""
    width = max([len(alpha) + 1, *word]) + 1 if word else len(alpha) + 2
    profile = [0] * (width + 1)
    profile[0] = len(word) + sum(alpha) + 1
    for i, a in enumerate(alpha):
        profile[i + 1] = a
    for v in word:
        if profile[v - 1] <= profile[v]:
            return False
        profile[v] += 1
    return True


@lru_cache(maxsize=None)
def _cells(outer: Partition, inner: Partition):
    """Reverse-reading-order metadata: (above index, right index, row)."""
    index: dict[tuple[int, int], int] = {}
    meta: list[tuple[int, int, int]] = []
    k = 0
    for r, end in enumerate(outer):
        start = inner[r] if r < len(inner) else 0
        for c in range(end - 1, start - 1, -1):
            meta.append((index.get((r - 1, c), -1), index.get((r, c + 1), -1), r))
            index[(r, c)] = k
            k += 1
    return tuple(meta), index


def _kron_setup(outer, inner, alpha, meta, index, ncells):
    """Checkpoint data for the Kronecker tableau conditions.

    Returns (check_at, slot2, gap).  check_at == -1 means condition (I)
    applies (alpha_1 == alpha_2) and every filling qualifies.  Otherwise a
    filling must have a 1 in box (2, alpha_1) or exactly gap 2's in row 1;
    both facts are settled once rows 1 and 2 are filled, so the check runs
    at the first cell of row 3 (or at the leaf for shorter shapes).
    """
    a1 = alpha[0] if alpha else 0
    a2 = alpha[1] if len(alpha) > 1 else 0
    if a1 == a2:
        return -1, -1, 0
    slot2 = index.get((1, a1 - 1), -1)
    check_at = ncells
    for k, (_, _, r) in enumerate(meta):
        if r >= 2:
            check_at = k
            break
    return check_at, slot2, a1 - a2


@lru_cache(maxsize=None)
def _count_fillings(
    outer: Partition,
    inner: Partition,
    counts: tuple[int, ...],
    alpha: Partition,
    kron: bool,
) -> int:
    """Count alpha-lattice SSYT of the skew shape with the given type.

    With kron=True only fillings satisfying the Kronecker tableau
    conditions are counted.
    """
    meta, index = _cells(outer, inner)
    ncells = len(meta)
    if sum(counts) != ncells:
        return 0
    kmax = len(counts)
    remaining = [0] + list(counts)
    profile = [0] * (max(kmax, len(alpha)) + 2)
    profile[0] = ncells + sum(alpha) + 1
    for i, a in enumerate(alpha):
        profile[i + 1] = a
    vals = [0] * ncells
    check_at, slot2, gap = (
        _kron_setup(outer, inner, alpha, meta, index, ncells) if kron else (-1, -1, 0)
    )
    twos_row1 = 0

    def rec(k: int) -> int:
        nonlocal twos_row1
        if k == check_at and not (
            (slot2 >= 0 and vals[slot2] == 1) or twos_row1 == gap
        ):
            return 0
        if k == ncells:
            return 1
        above, right, row = meta[k]
        lo = vals[above] + 1 if above >= 0 else 1
        hi = vals[right] if right >= 0 else kmax
        total = 0
        for v in range(lo, hi + 1):
            if remaining[v] == 0 or profile[v - 1] <= profile[v]:
                continue
            remaining[v] -= 1
            profile[v] += 1
            vals[k] = v
            if v == 2 and row == 0:
                twos_row1 += 1
            total += rec(k + 1)
            if v == 2 and row == 0:
                twos_row1 -= 1
            remaining[v] += 1
            profile[v] -= 1
        return total

    return rec(0)


class CapReached(Exception):
    """Raised by _expand_fillings when a bucket hits the requested cap."""

    def __init__(self, nu: Partition):
        super().__init__(nu)
        self.nu = nu


def _expand_fillings(
    outer: Partition,
    inner: Partition,
    alpha: Partition,
    kron: bool,
    out: dict | None = None,
    cap: int | None = None,
) -> dict[Partition, int]:
    """Accumulate {nu: count} over all alpha-lattice SSYT of the skew shape.

    nu is the filling's type plus alpha, always a partition because the full
    reading word satisfies the lattice inequalities.  With kron=True only
    Kronecker tableaux are counted.  If cap is given, CapReached is raised as
    soon as any bucket in ``out`` reaches it.
    """
    meta, index = _cells(outer, inner)
    ncells = len(meta)
    la = len(alpha)
    profile = [0] * (ncells + la + 2)
    profile[0] = ncells + sum(alpha) + 1
    for i, a in enumerate(alpha):
        profile[i + 1] = a
    vals = [0] * ncells
    buckets = {} if out is None else out
    check_at, slot2, gap = (
        _kron_setup(outer, inner, alpha, meta, index, ncells) if kron else (-1, -1, 0)
    )
    twos_row1 = 0
    vmax = la

    def rec(k: int) -> None:
        nonlocal twos_row1, vmax
        if k == check_at and not (
            (slot2 >= 0 and vals[slot2] == 1) or twos_row1 == gap
        ):
            return
        if k == ncells:
            nu = tuple(profile[1 : vmax + 1])
            c = buckets.get(nu, 0) + 1
            buckets[nu] = c
            if cap is not None and c >= cap:
                raise CapReached(nu)
            return
        above, right, row = meta[k]
        lo = vals[above] + 1 if above >= 0 else 1
        hi = vals[right] if right >= 0 else vmax + 1
        for v in range(lo, hi + 1):
            if profile[v - 1] <= profile[v]:
                continue
            profile[v] += 1
            vals[k] = v
            old_vmax = vmax
            if v > vmax:
                vmax = v
            if v == 2 and row == 0:
                twos_row1 += 1
            rec(k + 1)
            if v == 2 and row == 0:
                twos_row1 -= 1
            vmax = old_vmax
            profile[v] -= 1

    rec(0)
    return buckets


def _normalize_counts(counts: Iterable[int]) -> tuple[int, ...]:
    c = tuple(int(x) for x in counts)
    while c and c[-1] == 0:
        c = c[:-1]
    if any(x < 0 for x in c):
        raise ValueError(f"negative multiplicity in type {c!r}")
    return c


def count_ssyt_alpha_lattice(
    shape: SkewShape, type_counts: Iterable[int], alpha: Partition
) -> int:
    """Number of SSYT of the shape and type whose reverse reading word is an
    alpha-lattice permutation; alpha = () gives plain lattice filtering."""
    counts = _normalize_counts(type_counts)
    if sum(counts) != shape.size:
        raise ValueError(
            f"type weighs {sum(counts)}, shape has {shape.size} cells"
        )
    return _count_fillings(shape.outer, shape.inner, counts, tuple(alpha), False)


@lru_cache(maxsize=None)
def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Littlewood-Richardson coefficient c^lam_{mu nu}."""
    if sum(lam) != sum(mu) + sum(nu) or not contains(mu, lam):
        return 0
    return _count_fillings(lam, mu, nu, (), False)
