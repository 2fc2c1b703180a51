from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fishburn import series
from fishburn.series import TruncatedSeries, div, parse_monomial
from fishburn.verify import FIG_P, FIG_Q, G_T2, G_T4
from oracles import ASCENT_COUNTS, RUN_BOUNDED, literal_ascent_sequences, literal_ascents, longest_run

BOUNDS = (4, 2, 2, 2)


def literal_joint_counts(n_max):
    """[t^n u^asc v^last y^zeros] counted off the literal enumeration."""
    counts = Counter({(0, 0, 0, 0): 1})
    for n in range(1, n_max + 1):
        for x in literal_ascent_sequences(n):
            equal_pairs = sum(1 for a, b in zip(x, x[1:]) if a == b)
            counts[(n, literal_ascents(x), x[-1], equal_pairs)] += 1
    return counts


JOINT = literal_joint_counts(6)


def poly(name, bounds=BOUNDS):
    return TruncatedSeries.var(name, bounds)


def test_monomial_parsing():
    assert parse_monomial("t^2*u") == (2, 1, 0, 0)
    assert parse_monomial("u2") == (0, 2, 0, 0)
    assert parse_monomial("1") == (0, 0, 0, 0)
    assert parse_monomial({"y": 3}) == (0, 0, 0, 3)
    assert parse_monomial((1, 2, 3, 4)) == (1, 2, 3, 4)
    assert series.format_monomial((2, 0, 1, 0)) == "t^2*v"
    assert series.format_monomial((0, 0, 0, 0)) == "1"
    assert series.format_rational(217) == "217/1"
    assert series.format_rational(Fraction(-3, 6)) == "-1/2"
    with pytest.raises(ValueError):
        parse_monomial("z")
    with pytest.raises(ValueError):
        parse_monomial((1, 2))


def test_basic_arithmetic():
    t, u = poly("t"), poly("u")
    s = (1 + t) * (1 - t)
    assert s == 1 - t * t
    assert s.coefficient("t^2") == -1
    geometric = 1 / (1 - t)
    assert geometric.univariate() == [1, 1, 1, 1, 1]
    cube = (1 + u) ** 3
    assert cube.coefficient("u^2") == 3 and cube.degree("u") == 2
    assert ((1 - t) ** -2).univariate() == [1, 2, 3, 4, 5]
    half = TruncatedSeries.constant(1, BOUNDS) / 2
    assert half.constant_term() == Fraction(1, 2) and not half.is_integral()
    assert (half * 2).is_integral() and isinstance((half * 2).constant_term(), int)


def test_errors():
    t = poly("t")
    with pytest.raises(ZeroDivisionError):
        1 / t
    with pytest.raises(ZeroDivisionError):
        t / 0
    with pytest.raises(ValueError):
        t.coefficient("t^5")
    with pytest.raises(ValueError):
        TruncatedSeries({}, (1, 2))
    with pytest.raises(ValueError):
        (t + poly("u")).univariate()
    with pytest.raises(ValueError):
        series.compose_t(t, 1 + t)
    with pytest.raises(ValueError):
        poly("u").lift("u", 5)
    with pytest.raises(TypeError):
        t * "x"
    with pytest.raises(ValueError):
        series.Bk_series(4, 0)


def test_substitutions():
    t, u, v = poly("t"), poly("u"), poly("v")
    s = 1 + u * t + u * u * v
    assert s.specialize("u", 1) == (1 + t + v).truncate((4, 0, 2, 2))
    assert s.substitute_monomial("u", "u*v").coefficient("u*v*t") == 1
    assert s.coefficient_series("u", 1) == t.truncate((4, 0, 2, 2))
    assert s.shift("t").coefficient("t^2*u") == 1
    assert s.substitute("t", 2 * t).coefficient("t*u") == 2
    assert s.degree("u") == 2 and len(s) == 3


coeff = st.integers(-3, 3)
monomials = st.tuples(st.integers(0, 4), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
series_strategy = st.dictionaries(monomials, coeff, max_size=6).map(lambda d: TruncatedSeries(d, BOUNDS))


@given(series_strategy, series_strategy, series_strategy)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == TruncatedSeries({}, BOUNDS)


@given(series_strategy, series_strategy, st.sampled_from([1, -1, 2, 3]))
def test_division_inverts_multiplication(a, b, d0):
    den = b - b.constant_term() + d0
    q = div(a, den)
    assert q * den == a
    assert (a * den) / den == a


@given(series_strategy)
def test_power_and_inverse(a):
    unit = a - a.constant_term() + 1
    assert unit ** 3 == unit * unit * unit
    assert unit ** -2 * unit ** 2 == 1 + TruncatedSeries({}, BOUNDS)


def test_counting_series_match_oracle_counts():
    assert series.P_series(8).univariate() == ASCENT_COUNTS
    assert series.K_series(8).univariate() == RUN_BOUNDED[1]
    for k in (1, 2, 3):
        assert series.Bk_series(8, k).univariate() == RUN_BOUNDED[k]
    # denominator 1 - x^k counts runs of length at most k - 1
    assert series.Bk_series(8, 2, denominator_power=2).univariate() == RUN_BOUNDED[1]
    # every product taken from i = 0 holds the factor 1 - 1 = 0
    assert series.K_series(6, product_start=0).is_zero()


def test_run_substitution_links_primitive_and_all():
    N = 8
    t = TruncatedSeries.var("t", (N, 0, 0, 0))
    assert series.compose_t(series.K_series(N), t / (1 - t)) == series.P_series(N)
    assert series.compose_t(series.P_series(N), t / (1 + t)) == series.K_series(N)


def test_full_series_matches_literal_enumeration():
    g = series.G_full(6)
    assert g.is_integral()
    assert g.terms() == {m: c for m, c in JOINT.items()}


def test_specializations_of_full_series():
    N = 6
    g = series.G_full(N)
    assert g.specialize("v", 1) == series.G_u1yt(N)
    assert g.specialize("v", 1).specialize("y", 0) == series.G_primitive(N)
    assert g.specialize("v", 1).specialize("y", 1).specialize("u", 1) == series.P_series(N)
    assert g.specialize("v", 1).specialize("y", 0).specialize("u", 1) == series.K_series(N)


def test_low_order_coefficients():
    g = series.G_full(4)
    for n, want in ((2, G_T2), (4, G_T4)):
        got = {m[1:]: c for m, c in g.terms().items() if m[0] == n}
        assert got == {parse_monomial(k)[1:]: c for k, c in want.items()}


def test_u_coefficients_of_G():
    N = 12
    g = series.G_u1yt(N)
    bounds = (N, 0, 0, N)
    one_minus_ty = 1 - TruncatedSeries.polynomial({"t*y": 1}, bounds)
    for i, (numerator, power) in FIG_P.items():
        want = TruncatedSeries.polynomial(numerator, bounds) / one_minus_ty ** power + (1 if i == 0 else 0)
        assert g.coefficient_series("u", i) == want


def test_primitive_u_coefficients():
    N = 14
    g = series.G_primitive(N)
    for i, q in FIG_Q.items():
        row = g.coefficient_series("u", i).univariate()
        want = [0] * (N + 1)
        if i == 0:
            want[0] = 1
        for j, c in enumerate(q):
            if i + 1 + j <= N:
                want[i + 1 + j] = c
        assert row == want


def test_primitive_series_counts_primitive_by_ascents():
    g = series.G_primitive(6)
    counts = Counter()
    for n in range(7):
        for x in literal_ascent_sequences(n):
            if longest_run(x) <= 1:
                counts[(n, literal_ascents(x), 0, 0)] += 1
    assert g.terms() == dict(counts)


def test_kernel_identities():
    N = 8
    assert series.recurrence_residual(N).is_zero()
    assert series.kernel_at_root(N).is_zero()
    w = series.kernel_root(N)
    assert w.constant_term() == 1


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 6))
def test_full_series_agrees_across_orders(n):
    small, big = series.G_full(n), series.G_full(6)
    assert small == big.truncate(small.bounds)
