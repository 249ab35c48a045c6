"""Integer partitions, hook lengths, and the classical counts built on them."""

from __future__ import annotations

from collections import Counter
from math import factorial


class Partition:
    """Weakly decreasing tuple of positive parts; the empty partition is ()."""

    __slots__ = ("parts", "size")

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        self.parts = parts
        self.size = sum(parts)

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse a comma-separated part list; the empty string is ()."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(piece) for piece in text.split(","))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for part in self.parts:
            for j in range(part):
                cols[j] += 1
        return Partition(cols)

    def first_column_hooks(self) -> list[int]:
        """Hook lengths of the boxes in column 1, largest first."""
        length = len(self.parts)
        return [part + length - i - 1 for i, part in enumerate(self.parts)]


def enumerate_partitions(n: int):
    """Yield every partition of n exactly once, reverse-lexicographically."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")

    def descend(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in descend(remaining - first, first):
                yield (first,) + rest

    for parts in descend(n, n):
        yield Partition(parts)


def hook_lengths(p: Partition) -> Counter:
    """Multiset of hook lengths, via the conjugate-partition formula."""
    hooks = Counter()
    conj = p.conjugate().parts
    for i, part in enumerate(p.parts):
        for j in range(part):
            hooks[part - j + conj[j] - i - 1] += 1
    return hooks


def hook_lengths_mod_t(p: Partition, t: int) -> Counter:
    """Sub-multiset of hooks divisible by t."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    return Counter({h: m for h, m in hook_lengths(p).items() if h % t == 0})


def is_t_core(p: Partition, t: int) -> bool:
    """True when no hook length is divisible by t."""
    if t < 1:
        raise ValueError("t must be a positive integer")
    return all(h % t for h in hook_lengths(p))


def syt_count(p: Partition) -> int:
    """Number of standard fillings of the shape: n! over the hook product."""
    numerator = factorial(p.size)
    denominator = 1
    for h, mult in hook_lengths(p).items():
        denominator *= h**mult
    count, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"hook product does not divide {p.size}! for {p}")
    return count


def count_t_cores(m: int, t: int) -> int:
    """Number of partitions of m with no hook divisible by t, by enumeration."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if t < 1:
        raise ValueError("t must be a positive integer")
    return sum(1 for p in enumerate_partitions(m) if is_t_core(p, t))
