import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detcodes.errors import InvalidParameterError
from detcodes.qcombin import (
    Params,
    binom2,
    exact_div,
    gaussian_binomial,
    gaussian_factorial,
    gaussian_factorial_ratio,
    mu,
    nu,
    prime_power_decompose,
    projective_count,
)

QS = st.sampled_from([2, 3, 4, 5, 7, 8, 9, 16])


def test_prime_power_decompose():
    assert prime_power_decompose(2) == (2, 1)
    assert prime_power_decompose(9) == (3, 2)
    assert prime_power_decompose(1024) == (2, 10)
    for bad in (0, 1, 6, 12, 100):
        with pytest.raises(InvalidParameterError):
            prime_power_decompose(bad)


def test_binom2_polynomial_extension():
    assert [binom2(x) for x in range(-3, 5)] == [6, 3, 1, 0, 0, 1, 3, 6]


def test_exact_div():
    assert exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        exact_div(13, 4, "thing")


def test_gaussian_binomial_values():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(5, 1, 3) == 121
    assert gaussian_binomial(3, 0, 7) == 1
    assert gaussian_binomial(3, 4, 2) == 0
    assert gaussian_binomial(-1, 0, 2) == 0
    assert gaussian_binomial(3, -1, 2) == 0


@settings(deadline=None)
@given(QS, st.integers(0, 10), st.integers(0, 10))
def test_gaussian_binomial_symmetry(q, n, k):
    assert gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q)


@settings(deadline=None)
@given(QS, st.integers(1, 10), st.integers(0, 10))
def test_gaussian_binomial_pascal(q, n, k):
    lhs = gaussian_binomial(n, k, q)
    rhs = q**k * gaussian_binomial(n - 1, k, q) + gaussian_binomial(n - 1, k - 1, q)
    assert lhs == rhs


@settings(deadline=None)
@given(QS, st.integers(0, 8), st.integers(0, 8))
def test_gaussian_binomial_factorial_form(q, n, k):
    if k > n:
        return
    num = gaussian_factorial(n, q)
    den = gaussian_factorial(k, q) * gaussian_factorial(n - k, q)
    assert gaussian_binomial(n, k, q) * den == num


def test_gaussian_factorial_ratio():
    for q in (2, 3, 4):
        for n in range(7):
            for d in range(n + 1):
                assert (
                    gaussian_factorial_ratio(n, d, q) * gaussian_factorial(d, q)
                    == gaussian_factorial(n, q)
                )


def test_mu_sums_to_matrix_count():
    for q in (2, 3, 4):
        for ell in range(1, 4):
            for m in range(ell, 5):
                assert sum(mu(t, ell, m, q) for t in range(ell + 1)) == q ** (ell * m)
                assert nu(ell, ell, m, q) == q ** (ell * m)


def test_mu_known_values():
    # 2x2 over GF(2): 1 zero matrix, 9 rank-1, 6 invertible
    assert [mu(t, 2, 2, 2) for t in range(3)] == [1, 9, 6]
    assert mu(1, 4, 5, 2) == 465


def test_projective_count():
    # (nu_t - 1) / (q - 1)
    assert projective_count(1, 2, 2, 2) == 9
    assert projective_count(2, 2, 2, 2) == 15
    assert projective_count(1, 4, 5, 2) == 465


def test_params_validation():
    p = Params(2, 2, 3)
    assert (p.q, p.ell, p.m) == (2, 2, 3)
    assert p.with_t(1).t == 1
    for q, ell, m in ((1, 2, 2), (6, 2, 2), (2, 0, 2), (2, 3, 2)):
        with pytest.raises(InvalidParameterError):
            Params(q, ell, m)
