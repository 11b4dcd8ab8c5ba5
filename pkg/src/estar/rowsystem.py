"""Weightings whose total-1 sets are exactly the rows of a 0/1 system.

Both equistable graphs (rows: maximal stable sets, columns: vertices) and
equistarable graphs (rows: maximal stars, columns: edges) are this problem.
The positive solutions of ``A x = 1`` form a relatively open convex set ``P``
and each subset total is affine on it, so a subset's total is either forced
(constant on ``P``) or avoids 1 on a dense open part of ``P``. Hence a valid
weighting exists iff ``P`` is nonempty and no non-row subset is forced to 1.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError
from .graph import iter_bits
from .kernel import constraint_kernel, orthogonal_masks
from .linalg import positive_solution
from .subsets import check_bits, mitm_equal, mitm_min_gap, pack

Family = Callable[[int], Sequence[Fraction]] | Mapping


def total(values: Sequence[Fraction], mask: int) -> Fraction:
    return sum((values[c] for c in iter_bits(mask)), Fraction(0))


def solves_rows(values: Sequence[Fraction], rows: Sequence[int]) -> bool:
    return all(total(values, r) == 1 for r in rows)


def positive_row_solution(rows: Sequence[int], ncols: int) -> tuple[Fraction, ...] | None:
    matrix = [[r >> c & 1 for c in range(ncols)] for r in rows]
    x = positive_solution(matrix, [1] * len(rows))
    return None if x is None else tuple(x)


@dataclass(frozen=True)
class ForcedScan:
    masks: tuple[int, ...]  # every nonempty mask orthogonal to the kernel, ascending
    kernel: tuple[tuple[int, ...], ...]


def forced_scan(rows: Sequence[int], ncols: int, *, max_bits: int | None = None) -> ForcedScan:
    check_bits(ncols, max_bits, "forced-subset scan")
    kernel = constraint_kernel(list(rows), ncols)
    return ForcedScan(tuple(orthogonal_masks(kernel, ncols)), tuple(map(tuple, kernel)))


def first_forced_non_row(
    scan: ForcedScan, rows: Sequence[int], positive: Sequence[Fraction], *, at_most: bool
) -> tuple[int, Fraction] | None:
    """First non-row forced mask whose value is 1 (or at most 1 with ``at_most``)."""
    row_set = set(rows)
    for mask in scan.masks:
        if mask in row_set:
            continue
        value = total(positive, mask)
        if value == 1 or (at_most and value < 1):
            return mask, value
    return None


def perturbation_family(
    rows: Sequence[int], base: Sequence[Fraction], kernel: Sequence[Sequence[int]]
) -> Callable[[int], list[Fraction]]:
    """For each mask T, a positive row solution whose total on T is not 1.

    Uses ``base`` when its total on T already differs from 1, and otherwise
    moves ``base`` a little along the first kernel direction that changes T's
    total.
    """
    base = [Fraction(x) for x in base]
    if any(x <= 0 for x in base) or not solves_rows(base, rows):
        raise DomainError("base must be a positive solution of the row system")
    kernel = [list(v) for v in kernel]

    def member(mask: int) -> list[Fraction]:
        if total(base, mask) != 1:
            return base
        for vec in kernel:
            if sum(vec[c] for c in iter_bits(mask)):
                step = min(base) / (2 * max(abs(x) for x in vec))
                return [b + step * x for b, x in zip(base, vec)]
        raise DomainError(f"{list(iter_bits(mask))} is forced to total 1")

    return member


@dataclass(frozen=True)
class CombinerStep:
    chosen: int  # T*, as a column mask
    epsilon: Fraction
    level_before: int  # t(phi) before the step
    level_after: int


@dataclass(frozen=True)
class CombinerResult:
    weights: tuple[Fraction, ...]
    steps: tuple[CombinerStep, ...] = field(default=())


def unit_level_set(values: Sequence[Fraction], rows: set[int]) -> list[int]:
    """Non-row masks of total exactly 1, ascending."""
    packed, (target,) = pack(values, [Fraction(1)])
    return [m for m in mitm_equal(packed, target) if m not in rows]


def combine(
    rows: Sequence[int], ncols: int, family: Family, start: Sequence[Fraction], *, max_bits: int | None = None
) -> CombinerResult:
    """Repeatedly mix in ``family(T*)`` for a non-row set T* of total 1 until none remain.

    ``phi' = (1 - eps/n) phi + (eps/n) phi_T*`` with ``eps`` half the smaller of
    the nearest non-unit total's distance to 1 and the least weight of
    ``phi_T*``; each step strictly shrinks the family of non-row sets of
    total 1.
    """
    check_bits(ncols, max_bits, "combiner scan")
    n = ncols
    row_set = set(rows)
    phi = [Fraction(x) for x in start]
    if len(phi) != n or any(x <= 0 for x in phi) or not solves_rows(phi, rows):
        raise DomainError("start must be a positive solution of the row system")
    lookup = family.__getitem__ if isinstance(family, Mapping) else family

    level = unit_level_set(phi, row_set)
    steps = []
    while level:
        chosen = level[0]
        try:
            psi = [Fraction(x) for x in lookup(chosen)]
        except KeyError:
            raise DomainError(f"family has no member for {list(iter_bits(chosen))}") from None
        if len(psi) != n or any(x <= 0 for x in psi):
            raise DomainError("family member is not a positive weighting")
        if not solves_rows(psi, rows):
            raise DomainError("family member does not give every row total 1")
        if total(psi, chosen) == 1:
            raise DomainError(f"family member for {list(iter_bits(chosen))} still has total 1 there")

        packed, (target,) = pack(phi, [Fraction(1)])
        scale = target  # packed integers are phi scaled by this common denominator
        gap = mitm_min_gap(packed, target)
        bound = min(psi)
        if gap is not None:
            bound = min(bound, Fraction(gap, scale))
        eps = bound / 2
        if eps >= 1:
            eps = Fraction(1, 2)
        phi = [(1 - eps / n) * p + (eps / n) * q for p, q in zip(phi, psi)]
        new_level = unit_level_set(phi, row_set)
        if not (len(new_level) < len(level) and set(new_level) <= set(level)):
            raise AssertionError("combination step did not shrink the unit level set")
        steps.append(CombinerStep(chosen, eps, len(level), len(new_level)))
        level = new_level
    return CombinerResult(tuple(phi), tuple(steps))


@dataclass(frozen=True)
class RowDecision:
    """Outcome of deciding whether exactly the rows can have total 1."""

    holds: bool
    weights: tuple[Fraction, ...] | None  # the exact weighting when ``holds``
    positive: tuple[Fraction, ...] | None  # a positive row solution, if any exists
    forced: int | None = None  # a non-row mask forced to total 1
    reason: str = ""


def decide_rows(
    rows: Sequence[int], ncols: int, positive: Sequence[Fraction] | None = None, *, max_bits: int | None = None
) -> RowDecision:
    check_bits(ncols, max_bits, "row-system decision")
    if positive is None:
        positive = positive_row_solution(rows, ncols)
        if positive is None:
            return RowDecision(False, None, None, reason="no strictly positive solution gives every row total 1")
    positive = tuple(Fraction(x) for x in positive)
    scan = forced_scan(rows, ncols, max_bits=max_bits)
    hit = first_forced_non_row(scan, rows, positive, at_most=False)
    if hit is not None:
        mask = hit[0]
        return RowDecision(False, None, positive, mask, f"{list(iter_bits(mask))} is forced to total 1")
    family = perturbation_family(rows, positive, scan.kernel)
    result = combine(rows, ncols, family, positive, max_bits=max_bits)
    return RowDecision(True, result.weights, positive)
