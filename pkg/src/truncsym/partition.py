"""Integer partitions, truncation levels and the scalar statistics z, epsilon, D."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import factorial, prod
from typing import Iterator, Sequence, Union


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Ordinary tuple comparison on partitions of the same weight is the
    lexicographic order, so ``sorted(..., reverse=True)`` gives the canonical
    order used for every matrix in the package.
    """

    __slots__ = ()

    def __new__(cls, parts: Sequence[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the text form ``"3,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"malformed partition string {text!r}") from None
        return cls(parts)

    @classmethod
    def from_multiset(cls, parts) -> "Partition":
        return cls(sorted((p for p in parts if p), reverse=True))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    def __repr__(self) -> str:
        return f"Partition({str(self)!r})"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, k: int) -> int:
        return self.count(k)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)


@dataclass(frozen=True)
class Truncation:
    """Truncation level ``d`` of h^[d]: a positive integer or infinity.

    ``value is None`` encodes infinity.
    """

    value: int | None

    def __post_init__(self):
        if self.value is not None and (not isinstance(self.value, int) or self.value < 1):
            raise ValueError(f"truncation must be a positive integer or infinity, got {self.value!r}")

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def bound(self, n: int) -> int:
        """Largest exponent actually reachable in degree ``n``."""
        return n if self.value is None else min(self.value, n)


INFINITY = Truncation(None)

TruncationLike = Union[Truncation, int, str]


def truncation(d: TruncationLike) -> Truncation:
    """Coerce ``2``, ``"2"``, ``"inf"`` or ``math.inf`` to a :class:`Truncation`."""
    if isinstance(d, Truncation):
        return d
    if isinstance(d, str):
        if d.strip().lower() in ("inf", "infinity", "oo"):
            return INFINITY
        return Truncation(int(d))
    if isinstance(d, float) and d == float("inf"):
        return INFINITY
    if isinstance(d, bool) or int(d) != d:
        raise ValueError(f"bad truncation {d!r}")
    return Truncation(int(d))


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@cache
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in descending reverse-lexicographic order.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(Partition(p) for p in _partitions(n, n))


@cache
def partition_index(n: int) -> dict[Partition, int]:
    return {lam: i for i, lam in enumerate(enumerate_partitions(n))}


def conjugate(lam: Sequence[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition(())
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def z(lam: Partition) -> int:
    """Centralizer order prod_k k^{n_k} n_k!."""
    return prod(k**m * factorial(m) for k, m in Counter(lam).items())


def epsilon(lam: Partition) -> int:
    return -1 if (sum(lam) - len(lam)) % 2 else 1


def d_coefficient(lam: Partition, d: TruncationLike) -> int:
    """(-d) raised to the number of parts of ``lam`` divisible by d+1; 1 at infinity."""
    d = truncation(d)
    if d.is_infinite:
        return 1
    count = sum(1 for p in lam if p % (d.value + 1) == 0)
    return (-d.value) ** count


def distinct_permutations(items: Sequence) -> Iterator[tuple]:
    """Each distinct rearrangement of ``items`` exactly once."""
    counts = Counter(items)
    keys = sorted(counts, reverse=True)
    n = len(items)
    out: list = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def refinement_tuples(lam: Partition, mu: Partition) -> list[tuple[Partition, ...]]:
    """Ordered tuples (mu^1, ..., mu^l) with mu^i a partition of lam[i] and
    the sorted union of all mu^i equal to ``mu``.

    Slots follow the positions of ``lam``, so equal parts of ``lam`` give
    distinct slots.
    """
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{lam}| != |{mu}|")
    remaining = Counter(mu)
    out: list[tuple[Partition, ...]] = []
    chosen: list[Partition] = []

    def rec(i: int):
        if i == len(lam):
            if not +remaining:
                out.append(tuple(chosen))
            return
        for piece in enumerate_partitions(lam[i]):
            need = Counter(piece)
            if all(remaining[k] >= c for k, c in need.items()):
                remaining.subtract(need)
                chosen.append(piece)
                rec(i + 1)
                chosen.pop()
                remaining.update(need)

    rec(0)
    return out
