"""Exhaustive subset-sum scans over exact values.

Weights are turned into single Python integers by scaling to a common
denominator and packing the components of each affine form into disjoint
bit fields wide enough that no carry can cross a field. Two subset totals are
then equal exactly when their packed integers are equal, and a full scan of
``2^m`` subsets is one integer addition per step in Gray-code order.
"""

from __future__ import annotations

from bisect import bisect_left
from collections.abc import Iterator, Sequence
from fractions import Fraction
from math import lcm

from .errors import ResourceLimitError
from .linalg import SymbolicValue
from .limits import max_subset_bits


def _components(value) -> tuple[Fraction, ...]:
    if isinstance(value, SymbolicValue):
        return (value.c0, *value.coeffs)
    return (Fraction(value),)


def pack(values: Sequence, targets: Sequence = ()) -> tuple[list[int], list[int]]:
    """Pack Fractions, SymbolicValues or integer vectors into comparable ints.

    Returns the packed ``values`` and packed ``targets``; for every subset
    ``F``, ``sum(packed[F]) == packed_target`` iff the exact totals agree.
    """
    rows = [v if isinstance(v, (tuple, list)) else _components(v) for v in values]
    trows = [t if isinstance(t, (tuple, list)) else _components(t) for t in targets]
    allrows = rows + trows
    if not allrows:
        return [], []
    width = len(allrows[0])
    denom = lcm(*(Fraction(x).denominator for r in allrows for x in r)) or 1
    ints = [[int(Fraction(x) * denom) for x in r] for r in rows]
    tints = [[int(Fraction(x) * denom) for x in r] for r in trows]
    bound = 0
    for c in range(width):
        col = sum(abs(r[c]) for r in ints)
        bound = max(bound, col, *(abs(r[c]) for r in tints))
    shift = (2 * bound + 1).bit_length() + 1

    def encode(r):
        return sum(x << (shift * c) if x >= 0 else -((-x) << (shift * c)) for c, x in enumerate(r))

    return [encode(r) for r in ints], [encode(r) for r in tints]


def check_bits(m: int, max_bits: int | None = None, what: str = "subset scan") -> None:
    cap = max_subset_bits(max_bits)
    if m > cap:
        raise ResourceLimitError(f"{what} over 2^{m} subsets exceeds the cap 2^{cap}")


def scan_equal(weights: Sequence[int], target: int) -> Iterator[int]:
    """Yield every nonempty mask whose weight total equals ``target``.

    Masks come out in Gray-code order; callers sort when order matters.
    """
    m = len(weights)
    total = 0
    mask = 0
    w = list(weights)
    for i in range(1, 1 << m):
        low = i & -i
        mask ^= low
        if mask & low:
            total += w[low.bit_length() - 1]
        else:
            total -= w[low.bit_length() - 1]
        if total == target:
            yield mask


def _half_sums(weights: Sequence[int]) -> list[int]:
    sums = [0] * (1 << len(weights))
    for mask in range(1, len(sums)):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + weights[low.bit_length() - 1]
    return sums


def mitm_equal(weights: Sequence[int], target: int) -> list[int]:
    """All nonempty masks with total ``target``, ascending, by meet-in-the-middle."""
    m = len(weights)
    k = m // 2
    low_sums = _half_sums(weights[:k])
    high_sums = _half_sums(weights[k:])
    index: dict[int, list[int]] = {}
    for hmask, s in enumerate(high_sums):
        index.setdefault(s, []).append(hmask)
    out = []
    for lmask, s in enumerate(low_sums):
        for hmask in index.get(target - s, ()):
            mask = lmask | hmask << k
            if mask:
                out.append(mask)
    out.sort()
    return out


def mitm_min_gap(weights: Sequence[int], target: int) -> int | None:
    """Smallest nonzero ``|total - target|`` over nonempty subsets, or ``None``."""
    m = len(weights)
    k = m // 2
    low_sums = _half_sums(weights[:k])
    high_sums = _half_sums(weights[k:])
    high_all = sorted(set(high_sums))
    high_nonempty = sorted(set(high_sums[1:]))
    best = None
    for lmask, s in enumerate(low_sums):
        pool = high_all if lmask else high_nonempty
        want = target - s
        i = bisect_left(pool, want)
        for j in (i - 1, i, i + 1):
            if 0 <= j < len(pool):
                gap = abs(s + pool[j] - target)
                if gap and (best is None or gap < best):
                    best = gap
    return best
