"""Integer partitions and skew shapes.

Partitions are plain tuples of weakly decreasing positive ints; the empty
tuple is the unique partition of 0.  Reading a part beyond the length gives 0,
so formulas never need explicit zero padding.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

Partition = tuple[int, ...]


class DomainError(ValueError):
    """An argument violates the stated domain of an operation."""


class PartitionParseError(ValueError):
    """Malformed partition text."""


def partition(parts: Iterable[int]) -> Partition:
    """Build a partition from any iterable, stripping trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"parts must be positive: {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {p!r}")
    return p


def part(lam: Partition, i: int) -> int:
    """The i-th part, 1-based; 0 beyond the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram (column lengths)."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for row in lam:
        for c in range(row):
            cols[c] += 1
    return tuple(cols)


def contains(inner: Partition, outer: Partition) -> bool:
    """True iff inner fits inside outer row by row."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def intersect(lam: Partition, nu: Partition) -> Partition:
    """Boxes common to both diagrams: componentwise minimum."""
    common = tuple(min(a, b) for a, b in zip(lam, nu))
    while common and common[-1] == 0:
        common = common[:-1]
    return common


def lex_compare(lam: Partition, mu: Partition) -> int:
    """-1, 0 or 1; positions beyond a partition's length compare as 0."""
    for i in range(max(len(lam), len(mu))):
        a = lam[i] if i < len(lam) else 0
        b = mu[i] if i < len(mu) else 0
        if a != b:
            return -1 if a < b else 1
    return 0


def enumerate_partitions(
    n: int,
    max_length: int | None = None,
    max_part: int | None = None,
    inside: Partition | None = None,
) -> Iterator[Partition]:
    """All partitions of n meeting the constraints, in descending lex order."""
    if n < 0:
        return

    def rec(remaining: int, cap: int, depth: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if max_length is not None and depth >= max_length:
            return
        bound = min(remaining, cap)
        if inside is not None:
            if depth >= len(inside):
                return
            bound = min(bound, inside[depth])
        for first in range(bound, 0, -1):
            for rest in rec(remaining - first, first, depth + 1):
                yield (first,) + rest

    yield from rec(n, n if max_part is None else min(n, max_part), 0)


def removable_rows(lam: Partition) -> list[int]:
    """0-based rows whose last box is a removable corner."""
    return [
        i
        for i in range(len(lam))
        if lam[i] > (lam[i + 1] if i + 1 < len(lam) else 0)
    ]


def addable_rows(lam: Partition) -> list[int]:
    """0-based rows (including a fresh last row) where a box can be added."""
    rows = [i for i in range(len(lam)) if i == 0 or lam[i - 1] > lam[i]]
    rows.append(len(lam))
    return rows


def remove_box(lam: Partition, row: int) -> Partition:
    new = list(lam)
    new[row] -= 1
    if new and new[-1] == 0:
        new.pop()
    return tuple(new)


def add_box(lam: Partition, row: int) -> Partition:
    if row == len(lam):
        return lam + (1,)
    new = list(lam)
    new[row] += 1
    return tuple(new)


class SkewShape(NamedTuple):
    """The cells of ``outer`` not in ``inner`` (inner must fit in outer)."""

    outer: Partition
    inner: Partition

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)


def skew_shape(outer: Partition, inner: Partition) -> SkewShape:
    if not contains(inner, outer):
        raise DomainError(f"{inner} is not contained in {outer}")
    return SkewShape(outer, inner)


def parse_partition(text: str) -> Partition:
    """Parse "6,4,4,1" or exponent form "3^2,1"; "" is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    parts: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise PartitionParseError(f"empty component in {text!r}")
        base, sep, exp = token.partition("^")
        try:
            value = int(base)
            mult = int(exp) if sep else 1
        except ValueError:
            raise PartitionParseError(f"bad component {token!r} in {text!r}") from None
        if value < 0 or mult < 0:
            raise PartitionParseError(f"negative values in {token!r}")
        parts.extend([value] * mult)
    while parts and parts[-1] == 0:
        parts.pop()
    if any(x <= 0 for x in parts):
        raise PartitionParseError(f"zero part inside {text!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise PartitionParseError(f"parts must be weakly decreasing: {text!r}")
    return tuple(parts)


def format_partition(lam: Partition) -> str:
    """Canonical text form: plain comma-separated parts."""
    return ",".join(str(x) for x in lam)
