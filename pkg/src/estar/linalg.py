"""Exact rational linear algebra and formal affine forms.

Everything here is ``fractions.Fraction``; no floating point is used anywhere.
A :class:`SymbolicValue` is an affine form ``c0 + sum_i c_i * alpha_i`` over
formal symbols ``alpha_1..alpha_r``. Because the symbols are free, a relation
``sum_i q_i alpha_i = 0`` with rational ``q_i`` holds only when every ``q_i``
is zero, which is all the independence the weight constructions consume.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DomainError, InputError

Matrix = list[list[Fraction]]


def frac(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"not a rational: {x!r}") from None
    raise InputError(f"refusing to convert {type(x).__name__} to an exact rational")


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SymbolicValue:
    c0: Fraction
    coeffs: tuple[Fraction, ...]

    @classmethod
    def constant(cls, value, arity: int) -> SymbolicValue:
        return cls(frac(value), (Fraction(0),) * arity)

    @classmethod
    def symbol(cls, index: int, arity: int) -> SymbolicValue:
        """The bare symbol ``alpha_{index+1}`` (0-based index)."""
        coeffs = [Fraction(0)] * arity
        coeffs[index] = Fraction(1)
        return cls(Fraction(0), tuple(coeffs))

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def is_constant(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: SymbolicValue) -> None:
        if other.arity != self.arity:
            raise DomainError(f"symbol arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        if isinstance(other, SymbolicValue):
            self._check(other)
            return SymbolicValue(self.c0 + other.c0, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        return SymbolicValue(self.c0 + frac(other), self.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return SymbolicValue(-self.c0, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, scalar):
        if isinstance(scalar, SymbolicValue):
            raise DomainError("product of two symbolic values is not affine")
        k = frac(scalar)
        return SymbolicValue(self.c0 * k, tuple(a * k for a in self.coeffs))

    __rmul__ = __mul__

    def instantiate(self, alpha: Sequence[Fraction]) -> Fraction:
        return instantiate(self, alpha)

    def to_json(self) -> dict:
        return {"c0": format_rational(self.c0), "alpha": [format_rational(a) for a in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> SymbolicValue:
        return cls(frac(data["c0"]), tuple(frac(a) for a in data["alpha"]))

    def __str__(self) -> str:
        parts = [str(self.c0)] if self.c0 or self.is_constant() else []
        for i, a in enumerate(self.coeffs, 1):
            if a:
                parts.append(f"{a}*a{i}")
        return " + ".join(parts)


def instantiate(value: SymbolicValue, alpha: Sequence[Fraction]) -> Fraction:
    if len(alpha) != value.arity:
        raise DomainError(f"expected {value.arity} symbol values, got {len(alpha)}")
    return value.c0 + sum((c * a for c, a in zip(value.coeffs, alpha)), Fraction(0))


def symbolic_sum(values, arity: int) -> SymbolicValue:
    total = SymbolicValue.constant(0, arity)
    for v in values:
        total = total + v
    return total


# --- elimination ---------------------------------------------------------------


def rref(matrix: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form and pivot columns, exactly."""
    rows = [[frac(x) for x in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Sequence[Sequence]) -> int:
    return len(rref(matrix)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """A basis of the right kernel: one vector per free column."""
    if not matrix:
        if ncols is None:
            raise DomainError("empty matrix needs an explicit column count")
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    reduced, pivots = rref(matrix)
    ncols = len(reduced[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            vec[pc] = -row[f]
        basis.append(vec)
    return basis


def particular_solution(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """Some solution of ``A x = rhs`` (free variables set to 0), or ``None``."""
    if not matrix:
        return None
    ncols = len(matrix[0])
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = rref(augmented)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(reduced, pivots):
        x[pc] = row[ncols]
    return x


def mat_vec(matrix: Sequence[Sequence], vec: Sequence) -> list:
    out = []
    for row in matrix:
        acc = Fraction(0)
        for a, x in zip(row, vec):
            if a:
                acc += a * x
        out.append(acc)
    return out


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))


def integer_scaled(vec: Sequence[Fraction]) -> list[int]:
    """Smallest positive multiple of ``vec`` with integer entries."""
    d = lcm(*(x.denominator for x in vec)) if vec else 1
    return [int(x * d) for x in vec]


# --- the cyclic system x_j + x_{j+1} = b_j --------------------------------------


def solve_cycle_system(b: Sequence) -> list:
    """Solve ``x_j + x_{j+1} = b_j`` (indices mod n) for odd n.

    The solution is ``x_j = 1/2 * sum_k (-1)^k b_{j+k}``. Entries of ``b`` may
    be Fractions or SymbolicValues.
    """
    n = len(b)
    if n < 3 or n % 2 == 0:
        raise DomainError(f"cycle system is singular or degenerate for n={n}; need odd n >= 3")
    half = Fraction(1, 2)
    out = []
    for j in range(n):
        acc = b[j]
        for k in range(1, n):
            term = b[(j + k) % n]
            acc = acc - term if k % 2 else acc + term
        out.append(acc * half)
    return out


# --- exact linear programming ---------------------------------------------------


def _pivot(table: Matrix, basis: list[int], row: int, col: int) -> None:
    p = table[row][col]
    table[row] = [x / p for x in table[row]]
    for i, other in enumerate(table):
        if i != row and other[col] != 0:
            f = other[col]
            table[i] = [a - f * b for a, b in zip(other, table[row])]
    basis[row] = col


def _maximize(table: Matrix, basis: list[int], cost: Sequence[Fraction], allowed: Sequence[int]) -> bool:
    """Simplex with Bland's rule on a feasible tableau; False if unbounded."""
    while True:
        entering = None
        for j in allowed:
            reduced = cost[j] - sum((cost[b] * row[j] for b, row in zip(basis, table) if cost[b]), Fraction(0))
            if reduced > 0:
                entering = j
                break
        if entering is None:
            return True
        best = None
        for i, row in enumerate(table):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(table, basis, best[1], entering)


def maximize(matrix: Sequence[Sequence], rhs: Sequence, cost: Sequence) -> list[Fraction] | None:
    """Maximize ``cost . x`` subject to ``A x = rhs``, ``x >= 0``, exactly.

    Two-phase simplex. Returns an optimal vertex, or ``None`` when the system
    is infeasible; raises :class:`DomainError` when the objective is unbounded.
    """
    rows = [[frac(x) for x in row] for row in matrix]
    b = [frac(x) for x in rhs]
    nvars = len(cost)
    for i, v in enumerate(b):
        if v < 0:
            rows[i] = [-x for x in rows[i]]
            b[i] = -v
    k = len(rows)
    table = [row + [Fraction(int(i == j)) for j in range(k)] + [v] for i, (row, v) in enumerate(zip(rows, b))]
    basis = list(range(nvars, nvars + k))
    phase1 = [Fraction(0)] * nvars + [Fraction(-1)] * k
    _maximize(table, basis, phase1, range(nvars + k))
    if any(row[-1] != 0 for row, col in zip(table, basis) if col >= nvars):
        return None
    # drive the remaining zero-valued artificials out, dropping redundant rows
    i = 0
    while i < len(table):
        if basis[i] >= nvars:
            col = next((j for j in range(nvars) if table[i][j] != 0), None)
            if col is None:
                del table[i], basis[i]
                continue
            _pivot(table, basis, i, col)
        i += 1
    table = [row[:nvars] + row[-1:] for row in table]
    if not _maximize(table, basis, [frac(c) for c in cost], range(nvars)):
        raise DomainError("objective is unbounded")
    x = [Fraction(0)] * nvars
    for row, col in zip(table, basis):
        x[col] = row[-1]
    if mat_vec(rows, x) != b or any(v < 0 for v in x):
        raise AssertionError("simplex returned an infeasible point")
    return x


def positive_solution(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """A strictly positive solution of ``A x = rhs``, or ``None`` if there is none.

    Writes ``x = y + t*1`` with ``y >= 0`` and ``0 <= t <= 1`` and maximizes ``t``.
    """
    if not matrix:
        raise DomainError("empty system")
    n = len(matrix[0])
    a = [[*map(frac, row), sum((frac(v) for v in row), Fraction(0)), Fraction(0)] for row in matrix]
    a.append([Fraction(0)] * n + [Fraction(1), Fraction(1)])
    opt = maximize(a, [*rhs, 1], [0] * n + [1, 0])
    if opt is None or opt[n] == 0:
        return None
    t = opt[n]
    return [y + t for y in opt[:n]]
