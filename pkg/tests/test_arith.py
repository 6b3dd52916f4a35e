import gmpy2
import pytest

from siegelperiods.arith import (
    divisors,
    factorize,
    fundamental_decomposition,
    is_fundamental_discriminant,
    is_prime,
    is_squarefree,
    kronecker_symbol,
    moebius,
    sigma,
    xgcd,
)


def test_xgcd():
    for a, b in [(12, 18), (-5, 7), (0, 4), (13, 0), (-6, -9), (1, 1)]:
        g, x, y = xgcd(a, b)
        assert g == gmpy2.gcd(a, b)
        assert a * x + b * y == g


def test_factorize_and_divisors():
    assert factorize(360) == ((2, 3), (3, 2), (5, 1))
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert sigma(3, 2) == 9
    assert sigma(0, 12) == 6


def test_moebius():
    assert [moebius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


def test_is_prime():
    primes = [n for n in range(2, 60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)


def test_squarefree():
    assert is_squarefree(30) and is_squarefree(-1) and is_squarefree(7)
    assert not is_squarefree(12) and not is_squarefree(0)


def test_fundamental_examples():
    assert is_fundamental_discriminant(-3)
    assert is_fundamental_discriminant(-4)
    assert not is_fundamental_discriminant(-12)
    assert is_fundamental_discriminant(1)
    assert not is_fundamental_discriminant(-100)
    assert is_fundamental_discriminant(-163)


def test_fundamental_oracle():
    # oracle: a discriminant is fundamental iff it is not d * f^2 with f > 1
    # for any smaller discriminant d
    for n in range(-400, 0):
        if n % 4 in (2, 3):
            assert not is_fundamental_discriminant(n)
            continue
        proper = any(
            n % (f * f) == 0 and (n // (f * f)) % 4 in (0, 1)
            for f in range(2, int(abs(n)) + 1)
            if f * f <= abs(n)
        )
        assert is_fundamental_discriminant(n) == (not proper)


def test_kronecker_against_gmpy2():
    for a in list(range(-60, 61)) + [-163, -136, 229]:
        for n in range(1, 80):
            assert kronecker_symbol(a, n) == gmpy2.kronecker(a, n), (a, n)


def test_kronecker_negative_and_zero_modulus():
    for a in (-7, -3, 5, 12):
        for n in (-30, -5, -1, 0):
            assert kronecker_symbol(a, n) == gmpy2.kronecker(a, n), (a, n)


def test_kronecker_multiplicative():
    for d in (-3, -4, -23, -47):
        for m in range(1, 40):
            for n in range(1, 40):
                assert kronecker_symbol(d, m * n) == kronecker_symbol(d, m) * kronecker_symbol(d, n)


def test_fundamental_decomposition():
    assert fundamental_decomposition(-12) == (-3, 2)
    assert fundamental_decomposition(-4) == (-4, 1)
    assert fundamental_decomposition(-75) == (-3, 5)
    assert fundamental_decomposition(16) == (1, 4)
    with pytest.raises(ValueError):
        fundamental_decomposition(-2)
    for n in range(-300, 0):
        if n % 4 in (0, 1):
            d, f = fundamental_decomposition(n)
            assert d * f * f == n
            assert is_fundamental_discriminant(d)
