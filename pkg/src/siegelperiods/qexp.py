"""Exact q-expansions of level-1 modular forms and rational L-value data.

Series are finite lists of rationals with an explicit truncation order;
operations never zero-pad silently, they truncate to the common depth or
fail.  Includes Eisenstein series, the discriminant cusp form, normalized
eigenforms of one-dimensional cusp spaces with a self-checking Hecke
coefficient extractor, generalized Bernoulli numbers, and the rational
special values H(r, N) feeding Jacobi Eisenstein series.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .arith import divisors, fundamental_decomposition, kronecker_symbol, moebius, sigma
from .errors import DomainError, TruncationError
from .linalg import rref_with_transform


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the B_1 = -1/2 convention."""
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    total = Fraction(0)
    for k in range(n):
        total += comb(n + 1, k) * bernoulli(k)
    return -total / (n + 1)


def bernoulli_polynomial(n: int, x: Fraction) -> Fraction:
    return sum(comb(n, k) * bernoulli(k) * x ** (n - k) for k in range(n + 1))


@dataclass(frozen=True)
class QSeries:
    """Truncated q-expansion sum c(n) q^n, n <= nmax, with exact coefficients."""

    weight: int
    nmax: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.nmax + 1:
            raise DomainError("coefficient list must have nmax + 1 entries")

    def c(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.nmax:
            raise TruncationError(f"coefficient {n} beyond truncation order {self.nmax}")
        return self.coeffs[n]

    @classmethod
    def constant_one(cls, nmax: int) -> "QSeries":
        return cls(0, nmax, (Fraction(1),) + (Fraction(0),) * nmax)

    def __add__(self, other: "QSeries") -> "QSeries":
        if self.weight != other.weight:
            raise DomainError(f"cannot add weights {self.weight} and {other.weight}")
        n = min(self.nmax, other.nmax)
        return QSeries(self.weight, n, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + other.scale(-1)

    def __mul__(self, other: "QSeries") -> "QSeries":
        n = min(self.nmax, other.nmax)
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return QSeries(self.weight + other.weight, n, tuple(out))

    def scale(self, factor) -> "QSeries":
        lam = Fraction(factor)
        return QSeries(self.weight, self.nmax, tuple(c * lam for c in self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


def multiply(f: QSeries, g: QSeries) -> QSeries:
    return f * g


def add(f: QSeries, g: QSeries) -> QSeries:
    return f + g


def scale(f: QSeries, factor) -> QSeries:
    return f.scale(factor)


def eisenstein(k: int, nmax: int) -> QSeries:
    """Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n."""
    if k < 4 or k % 2:
        raise DomainError(f"Eisenstein weight must be even and >= 4, got {k}")
    factor = Fraction(-2 * k) / bernoulli(k)
    coeffs = [Fraction(1)] + [factor * sigma(k - 1, n) for n in range(1, nmax + 1)]
    return QSeries(k, nmax, tuple(coeffs))


def delta(nmax: int) -> QSeries:
    """The discriminant cusp form (E4^3 - E6^2) / 1728 with c(1) = 1."""
    if nmax < 1:
        raise DomainError("nmax must be >= 1")
    e4 = eisenstein(4, nmax)
    e6 = eisenstein(6, nmax)
    out = (e4 * e4 * e4 - e6 * e6).scale(Fraction(1, 1728))
    return QSeries(12, nmax, out.coeffs)


def dim_modular_forms(k: int) -> int:
    """Dimension of level-1 modular forms of weight k."""
    if k < 0 or k % 2:
        return 0
    return k // 12 if k % 12 == 2 else k // 12 + 1


def dim_cusp_forms(k: int) -> int:
    """Dimension of level-1 cusp forms of weight k."""
    if k < 4 or k % 2:
        return 0
    return dim_modular_forms(k) - 1


def modular_basis(k: int, nmax: int) -> list[QSeries]:
    """Echelon basis of weight-k level-1 forms: row i starts q^i + O(q^dim)."""
    if k % 2 or k < 0:
        raise DomainError(f"weight must be even and >= 0, got {k}")
    dim = dim_modular_forms(k)
    if dim == 0:
        return []
    if nmax < dim - 1:
        raise TruncationError(f"nmax {nmax} cannot determine a {dim}-dimensional space")
    e4 = eisenstein(4, nmax) if k >= 4 else None
    e6 = eisenstein(6, nmax) if k >= 6 else None
    monomials = []
    for j in range(k // 6 + 1):
        rem = k - 6 * j
        if rem % 4 == 0:
            g = QSeries.constant_one(nmax)
            for _ in range(rem // 4):
                g = g * e4
            for _ in range(j):
                g = g * e6
            monomials.append(g)
    assert len(monomials) == dim, "monomial count must match the dimension"
    rows = [[series.coeffs[n] for n in range(nmax + 1)] for series in monomials]
    rref, _, pivots = rref_with_transform(rows)
    assert len(pivots) == dim
    return [QSeries(k, nmax, tuple(row)) for row in rref[:dim]]


_EIGEN_FACTORS = {12: (), 16: (4,), 18: (6,), 20: (4, 4), 22: (4, 6), 26: (4, 4, 6)}


def cusp_eigenform(k: int, nmax: int) -> QSeries:
    """The unique normalized cusp form in a one-dimensional cusp space."""
    if k not in _EIGEN_FACTORS:
        raise DomainError(f"cusp forms of weight {k} are not one-dimensional")
    f = delta(nmax)
    for j in _EIGEN_FACTORS[k]:
        f = f * eisenstein(j, nmax)
    assert f.c(0) == 0 and f.c(1) == 1
    return f


def hecke_ap(f: QSeries, p: int) -> Fraction:
    """Coefficient c(p) of a normalized eigenform, with the eigenform relation
    c(p) c(n) = c(pn) + p^(k-1) c(n/p) verified across the full truncation."""
    if f.c(1) != 1:
        raise DomainError("series is not normalized (c(1) != 1)")
    if p > f.nmax:
        raise TruncationError(f"need nmax >= {p} to read c({p})")
    ap = f.c(p)
    pk = Fraction(p) ** (f.weight - 1)
    for n in range(1, f.nmax // p + 1):
        lhs = ap * f.c(n)
        rhs = f.c(p * n) + (pk * f.c(n // p) if n % p == 0 else 0)
        if lhs != rhs:
            raise DomainError(f"Hecke relation fails at p={p}, n={n}: not an eigenform")
    return ap


def gen_bernoulli(r: int, disc: int) -> Fraction:
    """Generalized Bernoulli number B_{r, chi} for the Kronecker character of disc.

    Convention: sum over a of chi(a) t e^{at} / (e^{|disc| t} - 1) generates
    B_{r, chi} t^r / r!, i.e. B_{r, chi} = f^{r-1} sum_a chi(a) B_r(a / f) with
    f = |disc|; then L(1 - r, chi) = -B_{r, chi} / r.
    """
    if r < 1:
        raise DomainError(f"r must be >= 1, got {r}")
    f = abs(disc)
    total = Fraction(0)
    for a in range(1, f + 1):
        chi = kronecker_symbol(disc, a)
        if chi:
            total += chi * bernoulli_polynomial(r, Fraction(a, f))
    return Fraction(f) ** (r - 1) * total


class CohenH:
    """Memoized rational values H(r, N); thread-safe single-writer cache."""

    def __init__(self, r: int):
        if r < 2:
            raise DomainError(f"r must be >= 2, got {r}")
        self.r = r
        self.cache: dict[int, Fraction] = {}
        self._lock = threading.Lock()

    def value(self, n: int) -> Fraction:
        try:
            return self.cache[n]
        except KeyError:
            pass
        v = self._compute(n)
        with self._lock:
            self.cache.setdefault(n, v)
        return v

    def _compute(self, n: int) -> Fraction:
        r = self.r
        if n < 0:
            return Fraction(0)
        if n == 0:
            return -bernoulli(2 * r) / (2 * r)  # zeta(1 - 2r)
        signed = n if r % 2 == 0 else -n
        if signed % 4 in (2, 3):
            return Fraction(0)
        d, f = fundamental_decomposition(signed)
        lvalue = -gen_bernoulli(r, d) / r
        total = Fraction(0)
        for e in divisors(f):
            mu = moebius(e)
            if mu:
                total += mu * kronecker_symbol(d, e) * e ** (r - 1) * sigma(2 * r - 1, f // e)
        return lvalue * total


_COHEN_INSTANCES: dict[int, CohenH] = {}
_COHEN_LOCK = threading.Lock()


def cohen_h(r: int, n: int) -> Fraction:
    """Cohen's function H(r, N) as an exact rational."""
    with _COHEN_LOCK:
        inst = _COHEN_INSTANCES.get(r)
        if inst is None:
            inst = _COHEN_INSTANCES[r] = CohenH(r)
    return inst.value(n)
