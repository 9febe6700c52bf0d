import itertools
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epos.symfunc import (
    DegreeError,
    SymExpr,
    conjugate,
    dominance_leq,
    e_in_m,
    e_to_m,
    e_to_p,
    eval_at_ones,
    m_to_e,
    partitions,
)

# --- polynomial oracle: dense monomial dictionaries in N variables ------------------------


def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


def _e_poly(k, nvars):
    out = {}
    for sub in itertools.combinations(range(nvars), k):
        exp = tuple(1 if i in sub else 0 for i in range(nvars))
        out[exp] = 1
    return out


def _e_mu_poly(mu, nvars):
    poly = {(0,) * nvars: 1}
    for part in mu:
        poly = _poly_mul(poly, _e_poly(part, nvars))
    return poly


def _m_coeffs_from_poly(poly, n):
    # coefficient of m_lambda = coefficient of x^lambda (exponents in decreasing order)
    out = {}
    for lam in partitions(n):
        exp = tuple(lam) + (0,) * (len(next(iter(poly))) - len(lam))
        c = poly.get(exp, 0)
        if c:
            out[lam] = c
    return out


def test_partitions_examples():
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert partitions(0) == ((),)
    assert len(partitions(9)) == 30


def _p_recurrence(n):
    # Euler's pentagonal recurrence, independent of the generator
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


@pytest.mark.parametrize("n", range(13))
def test_partition_counts(n):
    parts = partitions(n)
    assert len(parts) == len(set(parts)) == _p_recurrence(n)
    assert list(parts) == sorted(parts, reverse=True)


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((5,)) == (1,) * 5
    for n in range(10):
        for lam in partitions(n):
            assert conjugate(conjugate(lam)) == lam


def test_dominance():
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    for n in range(1, 8):
        for lam in partitions(n):
            assert dominance_leq((1,) * n, lam)
    with pytest.raises(ValueError):
        dominance_leq((2,), (1,))


def test_e_in_m_examples():
    assert e_in_m((2,)) == SymExpr("m", 2, {(1, 1): 1})
    assert e_in_m((1, 1)) == SymExpr("m", 2, {(2,): 1, (1, 1): 2})
    assert e_in_m((2, 1)) == SymExpr("m", 3, {(2, 1): 1, (1, 1, 1): 3})


@pytest.mark.parametrize("n", range(1, 7))
def test_e_in_m_against_polynomials(n):
    for mu in partitions(n):
        poly = _e_mu_poly(mu, n)
        assert e_in_m(mu).coeffs == _m_coeffs_from_poly(poly, n)


@pytest.mark.parametrize("n", range(1, 10))
def test_e_in_m_triangularity(n):
    for mu in partitions(n):
        expr = e_in_m(mu)
        top = conjugate(mu)
        assert expr[top] == 1
        for lam in expr.coeffs:
            if lam != top:
                assert dominance_leq(lam, top) and lam != top


@pytest.mark.parametrize("n", range(1, 8))
def test_m_to_e_roundtrip(n):
    for mu in partitions(n):
        assert m_to_e(e_in_m(mu)) == SymExpr.single("e", mu)


def test_m_to_e_examples():
    assert m_to_e(SymExpr("m", 3, {(1, 1, 1): 6})) == SymExpr("e", 3, {(3,): 6})
    claw_m = SymExpr("m", 4, {(2, 1, 1): 6, (1, 1, 1, 1): 24, (3, 1): 1})
    assert m_to_e(claw_m) == SymExpr("e", 4, {(4,): 4, (3, 1): 5, (2, 2): -2, (2, 1, 1): 1})


def test_m_to_e_integral_output_type():
    out = m_to_e(SymExpr("m", 4, {(2, 2): 3, (1, 1, 1, 1): 7}))
    assert all(type(c) is int for c in out.coeffs.values())


def test_m_to_e_rational_input():
    half = SymExpr("m", 2, {(1, 1): Fraction(1, 2)})
    assert m_to_e(half) == SymExpr("e", 2, {(2,): Fraction(1, 2)})


def test_e_to_p_examples():
    assert e_to_p(SymExpr.single("e", (1,))) == SymExpr.single("p", (1,))
    assert e_to_p(SymExpr.single("e", (2,))) == SymExpr("p", 2, {(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})


@st.composite
def integral_exprs(draw, basis, max_degree=7):
    n = draw(st.integers(1, max_degree))
    parts = partitions(n)
    chosen = draw(st.lists(st.sampled_from(parts), min_size=1, max_size=5))
    coeffs = {lam: draw(st.integers(-20, 20)) for lam in chosen}
    return SymExpr(basis, n, coeffs)


def _eval_e_numeric(expr, xs):
    total = Fraction(0)
    for mu, c in expr.coeffs.items():
        v = Fraction(1)
        for part in mu:
            v *= sum((Fraction(1) * _prod(sub) for sub in itertools.combinations(xs, part)), Fraction(0))
        total += c * v
    return total


def _eval_p_numeric(expr, xs):
    total = Fraction(0)
    for lam, c in expr.coeffs.items():
        v = Fraction(1)
        for part in lam:
            v *= sum(x ** part for x in xs)
        total += c * v
    return total


def _prod(xs):
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


@settings(max_examples=60, deadline=None)
@given(integral_exprs("e", 6), st.lists(st.fractions(-3, 3, max_denominator=5), min_size=1, max_size=5))
def test_e_to_p_numeric(expr, xs):
    assert _eval_e_numeric(expr, xs) == _eval_p_numeric(e_to_p(expr), xs)


@settings(max_examples=80, deadline=None)
@given(integral_exprs("m"), st.integers(0, 10))
def test_eval_commutes_with_conversions(expr, k):
    e = m_to_e(expr)
    v = eval_at_ones(expr, k)
    assert eval_at_ones(e, k) == v
    assert eval_at_ones(e_to_p(e), k) == v
    assert e_to_m(e) == expr


def test_eval_at_ones_examples():
    assert eval_at_ones(SymExpr.single("e", (2, 1)), 3) == comb(3, 2) * 3
    assert eval_at_ones(SymExpr.single("m", (1, 1)), 2) == 1
    claw = SymExpr("e", 4, {(4,): 4, (3, 1): 5, (2, 2): -2, (2, 1, 1): 1})
    assert eval_at_ones(claw, 2) == 2


def test_homogeneity_of_e_to_p():
    rng = random.Random(2)
    for _ in range(20):
        n = rng.randint(1, 7)
        mu = rng.choice(partitions(n))
        p = e_to_p(SymExpr.single("e", mu))
        assert p.degree == n and all(sum(lam) == n for lam in p.coeffs)


def test_expression_validation():
    with pytest.raises(ValueError):
        SymExpr("q", 1)
    with pytest.raises(ValueError):
        SymExpr("e", 3, {(2,): 1})
    with pytest.raises(ValueError):
        SymExpr("e", 3, {(1, 2): 1})
    assert SymExpr("e", 2, {(2,): 0}).coeffs == {}
    with pytest.raises(ValueError):
        SymExpr.single("m", (1,)) * SymExpr.single("m", (1,))


def test_products_and_json():
    a = SymExpr("e", 2, {(2,): 1, (1, 1): -3})
    b = SymExpr.single("e", (1,), 2)
    prod = a * b
    assert prod == SymExpr("e", 3, {(2, 1): 2, (1, 1, 1): -6})
    assert SymExpr.from_json(prod.to_json()) == prod
    assert prod.to_json()["terms"][0] == {"partition": [2, 1], "coeff": "2"}
    assert repr(prod) == "2*e[2, 1] - 6*e[1, 1, 1]"
    assert prod.negative_terms() == [((1, 1, 1), -6)]
    p = e_to_p(SymExpr.single("e", (2,)))
    assert SymExpr.from_json(p.to_json()) == p


def test_degree_cap():
    with pytest.raises(DegreeError):
        e_in_m((13,))
