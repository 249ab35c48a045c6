"""First-column hook sets and the integer-vector codings of t-cores.

Three equivalent descriptions of a t-core are wired together here: the
residue-closed hook set of its first column, the vector of residue-wise
maxima of that set (shifted to sum to zero), and the region numbers of the
exposed boxes in its extended residue diagram.  Two of the maps are computed
by independent constructions so they can cross-validate each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

from .partitions import Partition, hook_lengths, is_t_core


def _require_odd(t: int):
    if t < 1 or t % 2 == 0:
        raise ValueError(f"t must be an odd positive integer, got {t}")


def _require_t_core(p: Partition, t: int):
    if not is_t_core(p, t):
        raise ValueError(f"{p!r} is not a {t}-core")


@dataclass(frozen=True)
class HSet:
    """First-column hook lengths of a t-core together with -1..-t.

    Closure invariants: every member outside -1..-t is positive and not a
    multiple of t, and each positive member pulls in everything below it in
    its residue class.
    """

    elements: frozenset
    t: int

    def __post_init__(self):
        _require_odd(self.t)
        elements = frozenset(self.elements)
        object.__setattr__(self, "elements", elements)
        for k in range(1, self.t + 1):
            if -k not in elements:
                raise ValueError(f"missing mandatory element {-k}")
        positives = sorted(e for e in elements if e not in range(-self.t, 0))
        for a in positives:
            if a < 1 or a % self.t == 0:
                raise ValueError(f"invalid element {a}")
            if a > self.t and a - self.t >= 1 and a - self.t not in elements:
                raise ValueError(f"{a} present but {a - self.t} missing")


@dataclass(frozen=True)
class UCoding:
    """Residue-indexed maxima of an HSet; u[0] = -t and u[i] = i (mod t)."""

    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        t = len(values)
        _require_odd(t)
        if values[0] != -t:
            raise ValueError(f"u_0 must be {-t}, got {values[0]}")
        for i, u in enumerate(values[1:], start=1):
            if u % t != i or u <= -t:
                raise ValueError(f"u_{i} = {u} violates the residue constraints")
        if sum(values) % t:
            raise ValueError(f"sum {sum(values)} is not a multiple of t = {t}")

    @property
    def t(self):
        return len(self.values)


@dataclass(frozen=True)
class VCoding:
    """Zero-sum integer vector with v[i] = i (mod t), t odd."""

    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        t = len(values)
        _require_odd(t)
        for i, v in enumerate(values):
            if v % t != i:
                raise ValueError(f"v_{i} = {v} is not congruent to {i} mod {t}")
        if sum(values):
            raise ValueError(f"entries must sum to zero, got {sum(values)}")

    @property
    def t(self):
        return len(self.values)


@dataclass(frozen=True)
class NCoding:
    """Zero-sum integer vector of region numbers; any t >= 1."""

    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("at least one entry required")
        if sum(values):
            raise ValueError(f"entries must sum to zero, got {sum(values)}")

    @property
    def t(self):
        return len(self.values)


# -- constructions -------------------------------------------------------------


def h_set(p: Partition, t: int) -> HSet:
    """Hook set of a t-core: first-column hooks united with -1..-t."""
    _require_odd(t)
    _require_t_core(p, t)
    return HSet(frozenset(p.first_column_hooks()) | frozenset(range(-t, 0)), t)


def max_t(a: HSet) -> UCoding:
    """Largest element of each residue class, as a residue-indexed vector."""
    best = {}
    for e in a.elements:
        r = e % a.t
        if r not in best or e > best[r]:
            best[r] = e
    return UCoding(tuple(best[i] for i in range(a.t)))


def phi_v(p: Partition, t: int) -> VCoding:
    """V-coding of a t-core: residue maxima normalized to zero sum."""
    u = max_t(h_set(p, t))
    shift = sum(u.values) // t
    shifted = sorted(x - shift for x in u.values)
    by_residue = {v % t: v for v in shifted}
    return VCoding(tuple(by_residue[i] for i in range(t)))


def phi_v_inverse(v: VCoding, t: int | None = None) -> Partition:
    """The unique t-core with the given V-coding.

    Undoes the zero-sum normalization (the residue-0 maximum is always -t,
    which pins the shift), rebuilds the hook set by downward closure, and
    reads the parts off the first-column hooks.
    """
    if t is not None and t != v.t:
        raise ValueError(f"coding has t = {v.t}, got t = {t}")
    t = v.t
    shift = -t - min(v.values)
    u = sorted(x + shift for x in v.values)
    first_column = []
    for x in u:
        while x >= 1:
            first_column.append(x)
            x -= t
    first_column.sort(reverse=True)
    length = len(first_column)
    parts = [h - length + i + 1 for i, h in enumerate(first_column)]
    return Partition(parts)


def phi_n(p: Partition, t: int) -> NCoding:
    """Region-number vector from the extended residue diagram.

    Box (i, j) (rows from 1, the row-end box of row i sits at j = part_i,
    rows past the last part end at j = 0) has label (j - i) mod t and region
    floor((j - i)/t) + 1; entry r of the result is the largest region that
    exposes label r.  Rows up to len(p) + t cover every label.
    """
    if t < 1:
        raise ValueError("t must be a positive integer")
    _require_t_core(p, t)
    best = [None] * t
    rows = len(p.parts)
    for i in range(1, rows + t + 1):
        j = p.parts[i - 1] if i <= rows else 0
        label = (j - i) % t
        region = (j - i) // t + 1
        if best[label] is None or region > best[label]:
            best[label] = region
    return NCoding(tuple(best))


def phi_v_from_n(n: NCoding, t: int | None = None) -> VCoding:
    """V-coding determined by an N-coding (odd t only)."""
    if t is not None and t != n.t:
        raise ValueError(f"coding has t = {n.t}, got t = {t}")
    t = n.t
    _require_odd(t)
    half = (t - 1) // 2
    values = []
    for i in range(t):
        if i <= half:
            values.append(t * n.values[i + half] + i)
        else:
            values.append(t * n.values[i - half - 1] + i - t)
    return VCoding(tuple(values))


# -- weights and products -------------------------------------------------------


def core_weight_from_v(v: VCoding) -> int:
    """Size of the t-core encoded by v: (sum v_i^2)/(2t) - (t^2-1)/24."""
    t = v.t
    weight = Fraction(sum(x * x for x in v.values), 2 * t) - Fraction(t * t - 1, 24)
    if weight.denominator != 1 or weight < 0:
        raise ValueError(f"coding {v.values} has non-integral weight {weight}")
    return int(weight)


def core_hook_product(p: Partition, t: int) -> Fraction:
    """Exact product of (1 - t^2/h^2) over every box of a t-core."""
    _require_odd(t)
    _require_t_core(p, t)
    product = Fraction(1)
    for h, mult in hook_lengths(p).items():
        product *= Fraction(h * h - t * t, h * h) ** mult
    return product


def coding_product(v: VCoding) -> Fraction:
    """Normalized difference product over a V-coding.

    Equals the hook product of the matching t-core: the pairwise differences
    v_i - v_j (i < j) scaled by (-1)^((t-1)/2) / (1! 2! ... (t-1)!).
    """
    t = v.t
    diff = 1
    for i in range(t):
        for j in range(i + 1, t):
            diff *= v.values[i] - v.values[j]
    scale = Fraction((-1) ** ((t - 1) // 2))
    for k in range(1, t):
        scale /= factorial(k)
    return scale * diff


def enumerate_v_codings(t: int, max_weight: int):
    """All V-codings whose encoded core has size at most max_weight.

    The weight formula turns the cap into sum v_i^2 <= 2*t*max_weight +
    t*(t^2-1)/12, which bounds a residue-constrained box search.
    """
    _require_odd(t)
    if max_weight < 0:
        return
    norm_cap = 2 * t * max_weight + t * (t * t - 1) // 12

    def extend(i, chosen, norm, total):
        if i == t:
            if total == 0:
                yield VCoding(tuple(chosen))
            return
        budget = norm_cap - norm
        if budget < 0:
            return
        radius = isqrt(budget)
        lo = -((radius + i) // t) * t + i
        for value in range(lo, radius + 1, t):
            if value * value <= budget:
                yield from extend(i + 1, chosen + [value], norm + value * value, total + value)

    yield from extend(0, [], 0, 0)
