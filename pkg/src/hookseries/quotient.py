"""Boundary words of partitions and the core/quotient decomposition.

A partition is encoded as a bi-infinite 0/1 word (0 before the window, 1
after); the window is stored trimmed and the dot offset is canonical, i.e.
the number of 1s left of the dot equals the number of 0s right of it.
Splitting the word into t interleaved sections decomposes the partition into
a t-core plus t quotient partitions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition, is_t_core


class BinaryWord:
    """Finite 0/1 window over an implicit ...000(window)111... word.

    The stored offset (position of the first window bit relative to the dot)
    is always canonical: the dot sits after exactly as many window bits as
    the window has zeros.  Equality therefore reduces to window equality.
    """

    __slots__ = ("window", "offset")

    def __init__(self, bits=()):
        bits = list(bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("window entries must be 0 or 1")
        while bits and bits[0] == 0:
            bits.pop(0)
        while bits and bits[-1] == 1:
            bits.pop()
        self.window = tuple(bits)
        self.offset = -sum(1 for b in bits if b == 0)

    def bit(self, position: int) -> int:
        """Value of the bi-infinite word at an absolute position."""
        index = position - self.offset
        if index < 0:
            return 0
        if index >= len(self.window):
            return 1
        return self.window[index]

    def support(self):
        """Absolute position range [start, stop) of the stored window."""
        return self.offset, self.offset + len(self.window)

    def __eq__(self, other):
        if not isinstance(other, BinaryWord):
            return NotImplemented
        return self.window == other.window

    def __hash__(self):
        return hash(self.window)

    def __repr__(self):
        body = "".join(str(b) for b in self.window)
        return f"BinaryWord(...0[{body}]1..., dot at {-self.offset})"


@dataclass(frozen=True)
class CoreQuotient:
    """A t-core together with the t quotient partitions."""

    core: Partition
    quotient: tuple
    t: int

    def __post_init__(self):
        object.__setattr__(self, "quotient", tuple(self.quotient))
        if len(self.quotient) != self.t:
            raise ValueError(f"expected {self.t} quotient entries")
        if not is_t_core(self.core, self.t):
            raise ValueError(f"{self.core!r} is not a {self.t}-core")


def encode_word(p: Partition) -> BinaryWord:
    """Boundary word of a partition: horizontal edges are 1, vertical edges 0.

    Position i carries a 0 exactly when i is one of the shifted parts
    part_j - j (j = 1, 2, ...); the trimmed window spans -len(p) .. part_1 - 1.
    """
    length = len(p.parts)
    if length == 0:
        return BinaryWord()
    zero_positions = {part - j for j, part in enumerate(p.parts, start=1)}
    window = [
        0 if pos in zero_positions else 1 for pos in range(-length, p.parts[0])
    ]
    return BinaryWord(window)


def decode_word(w: BinaryWord) -> Partition:
    """Partition encoded by a word; insensitive to how the window was shifted.

    Each 0 contributes a part equal to the number of 1s to its left.
    """
    parts = []
    ones = 0
    for b in w.window:
        if b == 1:
            ones += 1
        elif ones:
            parts.append(ones)
    parts.reverse()
    return Partition(parts)


def _section_window(w: BinaryWord, t: int, k: int):
    """Bits of section k (absolute positions i*t + k) and its start index."""
    start, stop = w.support()
    lo = -((k - start) // t)  # smallest i with i*t + k >= start
    hi = (stop - 1 - k) // t  # largest i with i*t + k < stop
    if lo > hi:
        return [], 0
    return [w.bit(i * t + k) for i in range(lo, hi + 1)], lo


def _section_boundary(bits, lo) -> int:
    """Sorted form of a section is the step word with this 0/1 boundary.

    Sorting 10 -> 01 preserves the count of 0s at non-negative positions
    minus 1s at negative positions, which for a step word is its boundary.
    """
    boundary = 0
    for index, b in enumerate(bits):
        position = lo + index
        if position >= 0 and b == 0:
            boundary += 1
        elif position < 0 and b == 1:
            boundary -= 1
    if lo > 0:
        boundary += lo  # implicit 0s at positions 0..lo-1
    stop = lo + len(bits)
    if stop < 0:
        boundary -= -stop  # implicit 1s at positions stop..-1
    return boundary


def decompose(p: Partition, t: int) -> CoreQuotient:
    """Split a partition into its t-core and t-quotient.

    Section k of the canonical word decodes to quotient entry k; replacing
    each section by its sorted form reassembles into the word of the core.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    w = encode_word(p)
    quotient = []
    boundaries = []
    for k in range(t):
        bits, lo = _section_window(w, t, k)
        quotient.append(decode_word(BinaryWord(bits)))
        boundaries.append(_section_boundary(bits, lo))
    core = decode_word(_assemble(boundaries, t))
    return CoreQuotient(core=core, quotient=tuple(quotient), t=t)


def _assemble(boundaries, t) -> BinaryWord:
    """Word whose section k is the step word with boundary boundaries[k]."""
    lo = t * (min(boundaries) - 1)
    hi = t * (max(boundaries) + 1)
    return BinaryWord(
        [1 if j // t >= boundaries[j % t] else 0 for j in range(lo, hi)]
    )


def compose(cq: CoreQuotient) -> Partition:
    """Inverse of decompose: rebuild the partition from core and quotient.

    The core's word fixes each section's step boundary; shifting quotient
    entry k's canonical word by that boundary restores section k.
    """
    t = cq.t
    core_word = encode_word(cq.core)
    boundaries = []
    for k in range(t):
        bits, lo = _section_window(core_word, t, k)
        boundaries.append(_section_boundary(bits, lo))
    words = [encode_word(q) for q in cq.quotient]
    ranges = []
    for k in range(t):
        start, stop = words[k].support()
        ranges.append((start + boundaries[k], stop + boundaries[k]))
    lo = t * (min(r[0] for r in ranges) - 1)
    hi = t * (max(r[1] for r in ranges) + 1)
    bits = [
        words[j % t].bit(j // t - boundaries[j % t]) for j in range(lo, hi)
    ]
    return decode_word(BinaryWord(bits))
