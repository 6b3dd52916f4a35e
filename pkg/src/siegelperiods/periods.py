"""Exact Bessel period sums of Siegel coefficient tables.

For a fundamental discriminant -d, the coefficient a(f, c) of a table makes
sense on ideal classes c of Q(sqrt(-d)) through the Gauss correspondence.
The period sums here add those class coefficients, plainly or weighted by
the inverse values of a class group character; the character-weighted sum is
an exact cyclotomic number with a decidable zero test.  On top of the sums
sit the fundamental-discriminant nonvanishing scan, the normalized ratio
report, and the separation pipeline that cancels one table against another.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bqf import ClassCharacter, QuadForm, characters, class_group, is_fundamental
from .cyclotomic import Cyclotomic
from .errors import BoundError, DomainError
from .siegel import SiegelTable, coeff, scale_add

PeriodValue = Cyclotomic


def _class_values(table: SiegelTable, d: int) -> list[Fraction]:
    if d <= 0 or not is_fundamental(-d):
        raise DomainError(f"-{d} is not a fundamental negative discriminant")
    if d > table.disc_bound:
        raise BoundError(f"discriminant {d} exceeds table bound {table.disc_bound}")
    group = class_group(-d)
    return [coeff(table, rep) for rep in group.reps]


def bessel_period(table: SiegelTable, d: int) -> Fraction:
    """Sum of the class coefficients at the fundamental discriminant -d."""
    return sum(_class_values(table, d), Fraction(0))


def bessel_period_chi(table: SiegelTable, d: int, character: ClassCharacter) -> PeriodValue:
    """Character-weighted period: sum of a(f, c) Lambda^(-1)(c) in Z[zeta_m]."""
    values = _class_values(table, d)
    if character.group.disc != -d:
        raise DomainError(
            f"character belongs to discriminant {character.group.disc}, not {-d}"
        )
    return character.sum_weighted(values, invert=True)


@dataclass(frozen=True)
class ScanResult:
    """Witness of a nonzero coefficient at a fundamental discriminant."""

    d: int
    form: QuadForm
    value: Fraction


def fundamental_scan(table: SiegelTable) -> ScanResult | None:
    """Smallest d with -d fundamental and some class coefficient nonzero.

    Returns None when the whole table bound is exhausted without a witness,
    which a finite table cannot rule out for deeper discriminants.
    """
    for d in range(3, table.disc_bound + 1):
        if (-d) % 4 not in (0, 1) or not is_fundamental(-d):
            continue
        for rep in class_group(-d).reps:
            value = coeff(table, rep)
            if value != 0:
                return ScanResult(d=d, form=rep, value=value)
    return None


def choose_character(table: SiegelTable, d: int) -> ClassCharacter:
    """First character (canonical order) with a nonzero weighted period at -d.

    One exists whenever some class coefficient at -d is nonzero, because the
    character table of the class group is invertible.
    """
    values = _class_values(table, d)
    if all(v == 0 for v in values):
        raise DomainError(f"all class coefficients vanish at discriminant -{d}")
    for character in characters(class_group(-d)):
        if not character.sum_weighted(values, invert=True).is_zero():
            return character
    raise AssertionError("unreachable: orthogonality guarantees a witness")


@dataclass(frozen=True)
class SeparationResult:
    """Outcome of cancelling table1 against table2 at a chosen period."""

    scalar: Fraction
    g1: SiegelTable
    is_zero: bool


def separation_demo(
    table1: SiegelTable, table2: SiegelTable, d: int, character: ClassCharacter
) -> SeparationResult:
    """Form g1 = table1 - (R1/R2) table2, whose weighted period vanishes.

    R2 must be nonzero and the ratio R1/R2 must be rational so that g1 stays
    a rational table; the vanishing of the weighted period of g1 is checked
    exactly before returning.
    """
    r2 = bessel_period_chi(table2, d, character)
    if r2.is_zero():
        raise DomainError("period of the second table vanishes; cannot divide")
    r1 = bessel_period_chi(table1, d, character)
    ratio = r1 / r2
    if not ratio.is_rational():
        raise DomainError(f"period ratio {ratio} is not rational")
    scalar = ratio.rational()
    g1 = scale_add(table1, table2, -scalar)
    check = bessel_period_chi(g1, d, character)
    assert check.is_zero(), "weighted period of g1 must vanish by construction"
    return SeparationResult(scalar=scalar, g1=g1, is_zero=g1.is_zero())


@dataclass(frozen=True)
class RatioReport:
    """Period data at -d with the d^(k-1) w^2 normalization divided out."""

    d: int
    h: int
    w: int
    period: Fraction
    ratio: Fraction


def ratio_table(table: SiegelTable, dmax: int) -> list[RatioReport]:
    """Reports |R|^2 / (d^(k-1) w^2) for every fundamental -d up to the bounds.

    The remaining factor of the conjectural central-value identity is not
    computed here; no constancy claim is attached to the ratios.
    """
    out = []
    limit = min(dmax, table.disc_bound)
    for d in range(3, limit + 1):
        if (-d) % 4 not in (0, 1) or not is_fundamental(-d):
            continue
        group = class_group(-d)
        period = bessel_period(table, d)
        denom = Fraction(d) ** (table.k - 1) * group.w**2
        out.append(
            RatioReport(d=d, h=group.h, w=group.w, period=period, ratio=period**2 / denom)
        )
    return out
