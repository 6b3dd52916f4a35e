from fractions import Fraction

import pytest

from siegelperiods.bqf import class_group, is_fundamental
from siegelperiods.errors import DomainError, TruncationError
from siegelperiods.qexp import (
    CohenH,
    QSeries,
    add,
    bernoulli,
    cohen_h,
    cusp_eigenform,
    delta,
    dim_cusp_forms,
    dim_modular_forms,
    eisenstein,
    gen_bernoulli,
    hecke_ap,
    modular_basis,
    multiply,
    scale,
)


def convolve(a, b):
    out = [Fraction(0)] * (min(len(a), len(b)))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < len(out):
                out[i + j] += x * y
    return out


def test_bernoulli_table():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(6) == Fraction(1, 42)
    assert bernoulli(10) == Fraction(5, 66)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(7) == 0


def test_eisenstein_examples():
    e4 = eisenstein(4, 10)
    assert e4.c(0) == 1 and e4.c(1) == 240 and e4.c(2) == 2160
    e6 = eisenstein(6, 10)
    assert e6.c(1) == -504
    with pytest.raises(DomainError):
        eisenstein(5, 10)
    with pytest.raises(DomainError):
        eisenstein(2, 10)


def test_eisenstein_integrality():
    # weight 12 is the classical exception (denominator 691); every series the
    # package builds from has integer coefficients
    for k in (4, 6, 8, 10, 14):
        f = eisenstein(k, 30)
        assert all(c.denominator == 1 for c in f.coeffs)
    assert eisenstein(12, 5).c(1) == Fraction(65520, 691)


def test_delta_against_hand_convolution():
    n = 12
    e4 = [Fraction(1)] + [240 * sum(d**3 for d in range(1, m + 1) if m % d == 0)
                          for m in range(1, n + 1)]
    e6 = [Fraction(1)] + [-504 * sum(d**5 for d in range(1, m + 1) if m % d == 0)
                          for m in range(1, n + 1)]
    e4cubed = convolve(convolve(e4, e4), e4)
    e6sq = convolve(e6, e6)
    expected = [(x - y) / 1728 for x, y in zip(e4cubed, e6sq)]
    got = delta(n)
    assert list(got.coeffs) == expected
    assert got.c(1) == 1 and got.c(2) == -24 and got.c(3) == 252
    assert all(c.denominator == 1 for c in got.coeffs)


def test_series_algebra():
    e4 = eisenstein(4, 15)
    one = QSeries.constant_one(15)
    assert multiply(e4, one).coeffs == e4.coeffs
    prod = multiply(e4, e4)
    assert prod.weight == 8 and prod.c(1) == 480
    assert add(e4, scale(e4, -1)).is_zero()
    with pytest.raises(DomainError):
        add(e4, eisenstein(6, 15))


def test_truncation_discipline():
    e4 = eisenstein(4, 5)
    with pytest.raises(TruncationError):
        e4.c(6)
    short = multiply(eisenstein(4, 9), eisenstein(4, 4))
    assert short.nmax == 4


def test_dimensions():
    assert [dim_modular_forms(k) for k in (0, 2, 4, 6, 8, 10, 12, 14, 16)] == [
        1, 0, 1, 1, 1, 1, 2, 1, 2]
    assert [dim_cusp_forms(k) for k in (10, 12, 14, 16, 18, 20, 22, 26, 30)] == [
        0, 1, 0, 1, 1, 1, 1, 1, 2]


def test_modular_basis_echelon():
    for k in (0, 4, 12, 16, 24, 28):
        basis = modular_basis(k, 12)
        assert len(basis) == dim_modular_forms(k)
        for i, f in enumerate(basis):
            assert f.c(i) == 1
            for j in range(len(basis)):
                if j != i:
                    assert f.c(j) == 0
    assert modular_basis(2, 10) == []
    with pytest.raises(TruncationError):
        modular_basis(24, 1)


def test_cusp_eigenforms():
    f12 = cusp_eigenform(12, 20)
    assert f12.coeffs == delta(20).coeffs
    f18 = cusp_eigenform(18, 20)
    assert f18.c(2) == -528
    f22 = cusp_eigenform(22, 20)
    assert f22.c(2) == -288
    for k in (14, 24, 28):
        with pytest.raises(DomainError):
            cusp_eigenform(k, 20)


def test_hecke_ap_examples():
    assert hecke_ap(delta(50), 2) == -24
    f18 = cusp_eigenform(18, 60)
    assert hecke_ap(f18, 2) == -528
    assert hecke_ap(f18, 3) == -4284


def test_hecke_ap_rejects_non_eigenform():
    # weight-24 cusp space has dimension 2; a single monomial is not an eigenform
    e4 = eisenstein(4, 40)
    candidate = delta(40) * e4 * e4 * e4
    assert candidate.c(1) == 1
    with pytest.raises(DomainError):
        hecke_ap(candidate, 2)


def test_hecke_ap_requires_normalization():
    with pytest.raises(DomainError):
        hecke_ap(eisenstein(4, 10), 2)
    with pytest.raises(TruncationError):
        hecke_ap(delta(3), 5)


def test_gen_bernoulli_values():
    # from the finite character sums: B_{1,chi_-4} = (1 - 3)/4, B_{3,chi_-3} = 9*(2/27)
    assert gen_bernoulli(1, -4) == Fraction(-1, 2)
    assert gen_bernoulli(3, -3) == Fraction(2, 3)
    assert gen_bernoulli(5, -4) == Fraction(-25, 2)
    # trivial character: B_r(1) at r >= 2 is the plain Bernoulli number
    assert gen_bernoulli(2, 1) == Fraction(1, 6)


def test_class_number_formula():
    # h(d) = |B_{1, chi_d}| for fundamental d < -4 pins the sign convention
    for d in range(5, 201):
        if is_fundamental(-d) and d > 4:
            expected = class_group(-d).h
            value = gen_bernoulli(1, -d)
            assert abs(value) == expected, d


def test_cohen_h_values():
    assert cohen_h(3, 0) == Fraction(-1, 252)  # zeta(-5)
    assert cohen_h(2, 0) == Fraction(1, 120)  # zeta(-3)
    assert cohen_h(3, 3) == Fraction(-2, 9)
    assert cohen_h(3, 4) == Fraction(-1, 2)  # L(-2, chi_-4), d = -4 and f = 1
    assert cohen_h(5, 3) == Fraction(2, 3)
    assert cohen_h(5, 4) == Fraction(5, 2)


def test_cohen_h_residues():
    for r in (2, 3, 4, 5):
        for n in range(0, 40):
            sign = 1 if r % 2 == 0 else -1
            if (sign * n) % 4 in (2, 3):
                assert cohen_h(r, n) == 0, (r, n)
    assert cohen_h(3, 2) == 0
    assert cohen_h(3, 1) == 0  # (-1)^3 * 1 = 3 mod 4 is excluded
    assert cohen_h(2, 1) != 0
    assert cohen_h(3, -5) == 0


def test_cohen_h_imprimitive_case():
    # n = 12 decomposes as -12 = (-3) * 2^2
    lvalue = -gen_bernoulli(3, -3) / 3
    from siegelperiods.arith import kronecker_symbol, sigma

    expected = lvalue * (sigma(5, 2) - kronecker_symbol(-3, 2) * 4 * sigma(5, 1))
    assert cohen_h(3, 12) == expected


def test_cohen_cache_object():
    h = CohenH(3)
    assert h.value(3) == cohen_h(3, 3)
    assert 3 in h.cache
    with pytest.raises(DomainError):
        CohenH(1)
