from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from estar.errors import DomainError, InputError
from estar.linalg import (
    SymbolicValue,
    format_rational,
    frac,
    instantiate,
    mat_vec,
    nullspace,
    particular_solution,
    positive_solution,
    rank,
    rref,
    solve_cycle_system,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=12)
ARITY = 3


@st.composite
def symbolic(draw):
    return SymbolicValue(draw(fractions), tuple(draw(fractions) for _ in range(ARITY)))


def test_frac_and_format():
    assert frac("3/6") == Fraction(1, 2)
    assert frac(4) == Fraction(4)
    assert format_rational(Fraction(2)) == "2/1"
    assert format_rational(Fraction(-3, 9)) == "-1/3"
    with pytest.raises(InputError):
        frac(0.5)
    with pytest.raises(InputError):
        frac("1/0")


@settings(max_examples=100)
@given(symbolic(), symbolic(), symbolic(), fractions)
def test_symbolic_value_is_a_vector_space(a, b, c, k):
    zero = SymbolicValue.constant(0, ARITY)
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + zero == a
    assert a - a == zero
    assert k * (a + b) == k * a + k * b
    assert SymbolicValue.from_json(a.to_json()) == a


@settings(max_examples=100)
@given(symbolic(), symbolic(), st.lists(fractions, min_size=ARITY, max_size=ARITY), fractions)
def test_instantiate_is_linear(a, b, alpha, k):
    assert instantiate(a + b, alpha) == instantiate(a, alpha) + instantiate(b, alpha)
    assert instantiate(k * a, alpha) == k * instantiate(a, alpha)


def test_symbolic_errors():
    a = SymbolicValue.symbol(0, 2)
    with pytest.raises(DomainError):
        a + SymbolicValue.symbol(0, 3)
    with pytest.raises(DomainError):
        a * a
    with pytest.raises(DomainError):
        instantiate(a, [Fraction(1)])
    assert str(SymbolicValue.symbol(1, 2) + 1) == "1 + 1*a2"


matrices = st.integers(1, 5).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=1, max_size=5)
)


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_elimination_matches_sympy(a):
    m = sympy.Matrix(a)
    assert rank(a) == m.rank()
    reduced, pivots = rref(a)
    expected, expected_pivots = m.rref()
    assert list(pivots) == list(expected_pivots)
    assert [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in reduced] == expected.tolist()
    basis = nullspace(a)
    assert len(basis) == len(a[0]) - rank(a)
    for vec in basis:
        assert not any(mat_vec(a, vec))


@settings(max_examples=100, deadline=None)
@given(matrices, st.data())
def test_particular_solution(a, data):
    rhs = data.draw(st.lists(st.integers(-3, 3), min_size=len(a), max_size=len(a)))
    x = particular_solution(a, rhs)
    consistent = sympy.Matrix(a).rank() == sympy.Matrix(a).row_join(sympy.Matrix(rhs)).rank()
    assert (x is not None) == consistent
    if x is not None:
        assert mat_vec(a, x) == [Fraction(v) for v in rhs]


@settings(max_examples=100)
@given(st.integers(1, 6).flatmap(lambda k: st.lists(fractions, min_size=2 * k + 1, max_size=2 * k + 1)))
def test_cycle_system_round_trip(b):
    x = solve_cycle_system(b)
    n = len(b)
    assert [x[j] + x[(j + 1) % n] for j in range(n)] == b


def test_cycle_system_symbolic():
    b = [SymbolicValue.symbol(j % 2, 2) + 1 for j in range(5)]
    x = solve_cycle_system(b)
    assert all(x[j] + x[(j + 1) % 5] == b[j] for j in range(5))


@pytest.mark.parametrize("n", [2, 4, 6])
def test_cycle_system_needs_odd_length(n):
    with pytest.raises(DomainError):
        solve_cycle_system([Fraction(1)] * n)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_positive_solution(a):
    rows = [[abs(x) for x in row] for row in a]
    if not any(any(r) for r in rows):
        return
    rhs = [1] * len(rows)
    x = positive_solution(rows, rhs)
    if x is not None:
        assert all(v > 0 for v in x)
        assert mat_vec(rows, x) == [1] * len(rows)
    # a positive solution certainly exists when some positive point is feasible by construction
    y = [Fraction(1, 1 + i) for i in range(len(rows[0]))]
    target = mat_vec(rows, y)
    if all(target):
        assert positive_solution(rows, target) is not None


def test_positive_solution_infeasible():
    assert positive_solution([[1, 1], [1, 0]], [1, 1]) is None
    assert positive_solution([[1, 1], [1, 1]], [1, 2]) is None
    assert positive_solution([[1, 1, 0], [0, 1, 1]], [1, 1]) is not None
