"""Jacobi forms of index 1 with exact rational coefficients.

Index-1 coefficients depend on (n, r) only through D = 4n - r^2, so a form is
stored as a map on the grid D = 0, 3, 4, 7, 8, ... up to a bound.  The space
of weight-k forms is the free module M_{k-4} E_{4,1} + M_{k-6} E_{6,1} over
level-1 modular forms; the cusp subspace (constant term zero) is cut out by
exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType

from .errors import DomainError, TruncationError
from .linalg import rref_with_transform
from .qexp import QSeries, cohen_h, dim_cusp_forms, eisenstein, modular_basis


def grid(dmax: int) -> list[int]:
    """Discriminant grid 0 <= D <= dmax with D = 0 or 3 mod 4."""
    return [d for d in range(dmax + 1) if d % 4 in (0, 3)]


@dataclass(frozen=True)
class JacobiForm:
    """Weight-k index-1 Jacobi form as a map D -> c(D) on the grid up to dmax."""

    k: int
    dmax: int
    c: MappingProxyType

    @classmethod
    def from_dict(cls, k: int, dmax: int, values: dict[int, Fraction]) -> "JacobiForm":
        cleaned = {}
        for d in grid(dmax):
            if d not in values:
                raise DomainError(f"missing coefficient at D={d}")
            cleaned[d] = Fraction(values[d])
        return cls(k=k, dmax=dmax, c=MappingProxyType(cleaned))

    def coeff(self, d: int) -> Fraction:
        if d % 4 in (1, 2):
            raise DomainError(f"D={d} is not on the index-1 grid")
        if d < 0 or d > self.dmax:
            raise TruncationError(f"D={d} outside stored range 0..{self.dmax}")
        return self.c[d]

    def is_cusp(self) -> bool:
        return self.c[0] == 0

    def scale(self, factor) -> "JacobiForm":
        lam = Fraction(factor)
        return JacobiForm.from_dict(self.k, self.dmax, {d: v * lam for d, v in self.c.items()})

    def __add__(self, other: "JacobiForm") -> "JacobiForm":
        if self.k != other.k:
            raise DomainError(f"cannot add weights {self.k} and {other.k}")
        dmax = min(self.dmax, other.dmax)
        return JacobiForm.from_dict(
            self.k, dmax, {d: self.c[d] + other.c[d] for d in grid(dmax)}
        )

    def truncated(self, dmax: int) -> "JacobiForm":
        if dmax > self.dmax:
            raise TruncationError(f"cannot extend dmax {self.dmax} to {dmax}")
        return JacobiForm.from_dict(self.k, dmax, {d: self.c[d] for d in grid(dmax)})


def jacobi_eisenstein(k: int, dmax: int) -> JacobiForm:
    """The index-1 Jacobi Eisenstein series of weight 4 or 6, c(0) = 1.

    Coefficients are the rational ratios H(k-1, D) / H(k-1, 0).
    """
    if k not in (4, 6):
        raise DomainError(f"supported Eisenstein weights are 4 and 6, got {k}")
    h0 = cohen_h(k - 1, 0)
    values = {d: cohen_h(k - 1, d) / h0 for d in grid(dmax)}
    return JacobiForm.from_dict(k, dmax, values)


def times_qseries(phi: JacobiForm, g: QSeries, dmax: int | None = None) -> JacobiForm:
    """Product of an index-1 Jacobi form with a level-1 form.

    On the D-grid the product is the convolution c(D) = sum_j g_j phi(D - 4j).
    """
    if g.weight < 0:
        raise DomainError("q-series factor must have nonnegative weight")
    reachable = min(phi.dmax, 4 * g.nmax + 3)
    if dmax is None:
        dmax = reachable
    elif dmax > reachable:
        raise TruncationError(
            f"dmax {dmax} needs phi.dmax >= {dmax} and g.nmax >= {dmax // 4},"
            f" have {phi.dmax} and {g.nmax}"
        )
    values = {}
    for d in grid(dmax):
        total = Fraction(0)
        for j in range(d // 4 + 1):
            gj = g.c(j)
            if gj:
                total += gj * phi.coeff(d - 4 * j)
        values[d] = total
    return JacobiForm.from_dict(phi.k + g.weight, dmax, values)


def _spanning_set(k: int, dmax: int) -> list[JacobiForm]:
    out = []
    for eis_weight in (4, 6):
        mweight = k - eis_weight
        basis = modular_basis(mweight, max(dmax // 4, 8)) if mweight >= 0 else []
        if basis:
            eis = jacobi_eisenstein(eis_weight, dmax)
            out.extend(times_qseries(eis, g, dmax) for g in basis)
    return out


def cusp_basis(k: int, dmax: int) -> list[JacobiForm]:
    """Canonical basis of weight-k index-1 Jacobi cusp forms up to dmax.

    Each basis form is normalized so that its first nonzero coefficient (at
    the smallest D) is 1; the coefficients do not depend on dmax.  The
    dimension always equals dim S_{2k-2}(SL2(Z)).
    """
    if k % 2 or k < 4:
        raise DomainError(f"weight must be even and >= 4, got {k}")
    target = dim_cusp_forms(2 * k - 2)
    spanning = _spanning_set(k, dmax)
    if not spanning:
        assert target == 0
        return []
    window = 4 * (len(spanning) + 4)
    if dmax < window:
        raise TruncationError(f"dmax {dmax} too small to determine forms; need >= {window}")
    # combinations killing the constant term
    pivot = next((f for f in spanning if f.c[0] != 0), None)
    if pivot is None:
        candidates = spanning
    else:
        candidates = [
            f + pivot.scale(-f.c[0] / pivot.c[0]) for f in spanning if f is not pivot
        ]
    cols = grid(window)
    rows = [[f.c[d] for d in cols] for f in candidates]
    rref, transform, pivots = rref_with_transform(rows)
    if len(pivots) != target:
        raise DomainError(
            f"cusp space rank {len(pivots)} does not match expected dimension {target}"
        )
    basis = []
    for i in range(target):
        combo = None
        for j, coef in enumerate(transform[i]):
            if coef:
                term = candidates[j].scale(coef)
                combo = term if combo is None else combo + term
        assert combo is not None and combo.is_cusp()
        basis.append(combo)
    return basis
