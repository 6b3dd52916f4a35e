"""Fourier coefficient tables of degree-2 Siegel cusp forms.

A table stores the exact rational coefficient of every reduced positive
definite form with |disc| up to a bound (dense storage, so an absent class
can never be mistaken for a zero value).  Lookups of non-reduced forms go
through reduction, which realizes the SL2(Z) class invariance of the
coefficients by construction.

Tables are built by the Saito-Kurokawa lift of index-1 Jacobi cusp forms,
by linear combinations, or by ingesting SIEGEL-TABLE v1 files; the T(p)
Hecke action and eigenvalue extraction operate on the tables directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from .arith import divisors, is_prime
from .bqf import QuadForm, is_reduced, reduce, reduced_classes_upto
from .errors import BoundError, DomainError, FormatError, TruncationError
from .jacobi import JacobiForm
from .qexp import QSeries, hecke_ap


@dataclass(frozen=True)
class SiegelTable:
    """Dense map from reduced forms with |disc| <= disc_bound to coefficients."""

    k: int
    disc_bound: int
    entries: tuple[tuple[QuadForm, Fraction], ...]  # sorted by (|disc|, a, b)
    provenance: str

    @classmethod
    def from_values(cls, k: int, disc_bound: int, values, provenance: str) -> "SiegelTable":
        classes = reduced_classes_upto(disc_bound)
        missing = [f for f in classes if f not in values]
        if missing:
            raise DomainError(f"table is missing reduced class {missing[0]}")
        if len(values) != len(classes):
            extra = set(values) - set(classes)
            raise DomainError(f"table has unexpected key {sorted(extra)[0]}")
        entries = tuple((f, Fraction(values[f])) for f in classes)
        return cls(k=k, disc_bound=disc_bound, entries=entries, provenance=provenance)

    @classmethod
    def zero(cls, k: int, disc_bound: int) -> "SiegelTable":
        values = {f: Fraction(0) for f in reduced_classes_upto(disc_bound)}
        return cls.from_values(k, disc_bound, values, "zero table")

    @cached_property
    def _lookup(self) -> dict[QuadForm, Fraction]:
        return dict(self.entries)

    def value_map(self) -> dict[QuadForm, Fraction]:
        return dict(self.entries)

    def classes(self) -> list[QuadForm]:
        return [f for f, _ in self.entries]

    def is_zero(self) -> bool:
        return all(v == 0 for _, v in self.entries)

    def restricted(self, disc_bound: int) -> "SiegelTable":
        if disc_bound > self.disc_bound:
            raise BoundError(f"cannot extend bound {self.disc_bound} to {disc_bound}")
        values = {f: v for f, v in self.entries if -f.disc <= disc_bound}
        return SiegelTable.from_values(self.k, disc_bound, values, self.provenance)


def coeff(table: SiegelTable, form: QuadForm) -> Fraction:
    """Coefficient at any positive definite form within bound, via reduction."""
    if -form.disc > table.disc_bound:
        raise BoundError(
            f"|disc| = {-form.disc} exceeds table bound {table.disc_bound}"
        )
    reduced, _ = reduce(form)
    return table._lookup[reduced]


def sk_lift(phi: JacobiForm, disc_bound: int) -> SiegelTable:
    """Saito-Kurokawa lift of an index-1 Jacobi cusp form of weight k.

    The coefficient at a form S = (a, b, c) is the divisor-weighted sum
    sum over t | gcd(a, b, c) of t^(k-1) c((4ac - b^2) / t^2), which depends
    only on the SL2(Z) class because content and discriminant do.
    """
    if not phi.is_cusp():
        raise DomainError("lift input must be a cusp form (c(0) = 0)")
    if phi.dmax < disc_bound:
        raise TruncationError(
            f"jacobi form stores D <= {phi.dmax}, need {disc_bound}"
        )
    k = phi.k
    values = {}
    for form in reduced_classes_upto(disc_bound):
        values[form] = _lift_value(phi, k, form.triple())
    return SiegelTable.from_values(
        k, disc_bound, values, f"saito-kurokawa lift, weight {k}, index-1 jacobi cusp form"
    )


def _lift_value(phi: JacobiForm, k: int, triple) -> Fraction:
    a, b, c = triple
    content = gcd(gcd(a, b), c)
    d = 4 * a * c - b * b
    total = Fraction(0)
    for t in divisors(content):
        total += Fraction(t) ** (k - 1) * phi.coeff(d // (t * t))
    return total


def scale_add(table1: SiegelTable, table2: SiegelTable, factor) -> SiegelTable:
    """Entrywise table1 + factor * table2, on the common bound."""
    if table1.k != table2.k:
        raise DomainError(f"weight mismatch: {table1.k} vs {table2.k}")
    lam = Fraction(factor)
    bound = min(table1.disc_bound, table2.disc_bound)
    left = table1.restricted(bound).value_map()
    right = table2.restricted(bound).value_map()
    values = {f: left[f] + lam * right[f] for f in left}
    return SiegelTable.from_values(table1.k, bound, values, "linear combination")


# -- SIEGEL-TABLE v1 file format ------------------------------------------

_MAGIC = "SIEGEL-TABLE v1"
_VALUE_RE = re.compile(r"^(-?\d+)(?:/([1-9]\d*))?$")
_INT_RE = re.compile(r"^-?\d+$")


def _format_value(v: Fraction) -> str:
    return str(v)


def emit(table: SiegelTable) -> str:
    """Canonical text serialization: sorted keys, lowest terms, single spaces."""
    lines = [
        _MAGIC,
        f"weight: {table.k}",
        f"disc-bound: {table.disc_bound}",
        f"provenance: {table.provenance}" if table.provenance else "provenance:",
    ]
    for form, value in table.entries:
        lines.append(f"{form.a} {form.b} {form.c} {_format_value(value)}")
    return "\n".join(lines) + "\n"


def ingest(text: str) -> SiegelTable:
    """Parse a SIEGEL-TABLE v1 document, validating every invariant."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != _MAGIC:
        raise FormatError(f"expected header {_MAGIC!r}", line=1)

    def next_content(idx):
        while idx < len(lines) and lines[idx].startswith("#"):
            idx += 1
        if idx >= len(lines):
            raise FormatError("unexpected end of file", line=len(lines))
        return idx

    idx = next_content(1)
    m = re.match(r"^weight: (-?\d+)$", lines[idx])
    if not m:
        raise FormatError("expected 'weight: <int>'", line=idx + 1)
    weight = int(m.group(1))
    idx = next_content(idx + 1)
    m = re.match(r"^disc-bound: (\d+)$", lines[idx])
    if not m:
        raise FormatError("expected 'disc-bound: <int>'", line=idx + 1)
    bound = int(m.group(1))
    if bound < 3:
        raise FormatError("disc-bound must be at least 3", line=idx + 1)
    idx = next_content(idx + 1)
    m = re.match(r"^provenance:(?: (.*))?$", lines[idx])
    if m is None:
        raise FormatError("expected 'provenance: <text>'", line=idx + 1)
    provenance = m.group(1) or ""

    values: dict[QuadForm, Fraction] = {}
    for lineno in range(idx + 1, len(lines)):
        raw = lines[lineno]
        if raw.startswith("#"):
            continue
        parts = raw.split()
        if len(parts) != 4:
            raise FormatError(f"malformed line {raw!r}", line=lineno + 1)
        if not all(_INT_RE.match(p) for p in parts[:3]):
            raise FormatError(f"malformed key {' '.join(parts[:3])!r}", line=lineno + 1)
        a, b, c = (int(p) for p in parts[:3])
        try:
            form = QuadForm(a, b, c)
        except DomainError as exc:
            raise FormatError(str(exc), line=lineno + 1) from None
        if not is_reduced(form):
            raise FormatError(f"non-reduced key {a} {b} {c}", line=lineno + 1)
        if -form.disc > bound:
            raise FormatError(
                f"key {a} {b} {c} has |disc| {-form.disc} beyond bound {bound}",
                line=lineno + 1,
            )
        if form in values:
            raise FormatError(f"duplicate key {a} {b} {c}", line=lineno + 1)
        vm = _VALUE_RE.match(parts[3])
        if not vm:
            raise FormatError(f"malformed value {parts[3]!r}", line=lineno + 1)
        num = int(vm.group(1))
        den = int(vm.group(2)) if vm.group(2) else None
        if den is not None:
            if den == 1:
                raise FormatError(
                    f"value {parts[3]!r} must be written as a plain integer", line=lineno + 1
                )
            if gcd(num, den) != 1:
                raise FormatError(f"value {parts[3]!r} is not in lowest terms", line=lineno + 1)
            values[form] = Fraction(num, den)
        else:
            values[form] = Fraction(num)

    try:
        return SiegelTable.from_values(weight, bound, values, provenance)
    except DomainError as exc:
        raise FormatError(str(exc)) from None


def read_table(path) -> SiegelTable:
    with open(path, encoding="utf-8") as fh:
        return ingest(fh.read())


def write_table(table: SiegelTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit(table))


# -- Hecke action -----------------------------------------------------------


def hecke_tp(table: SiegelTable, p: int) -> SiegelTable:
    """Coefficient table of T(p) applied to the input, up to disc_bound / p^2.

    The coefficient at S collects the classical right-coset contributions:
    the value at pS, the p^(2k-3)-weighted value at S/p when p divides S, and
    p^(k-2)-weighted values at the mod-p transforms of S whose division by p
    stays integral.  The normalization is pinned by the Saito-Kurokawa
    eigenvalue relation, which the test suite checks end to end.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    bound = table.disc_bound // (p * p)
    if bound < 3:
        raise BoundError(
            f"table bound {table.disc_bound} leaves no classes below {p}^2"
        )
    k = table.k
    weight_mid = Fraction(p) ** (k - 2)
    weight_div = Fraction(p) ** (2 * k - 3)
    values = {}
    for form in reduced_classes_upto(bound):
        a, b, c = form
        total = coeff(table, QuadForm(p * a, p * b, p * c))
        for j in range(p):
            val = a + b * j + c * j * j
            if val % p == 0:
                total += weight_mid * coeff(
                    table, QuadForm(val // p, b + 2 * c * j, c * p)
                )
        if c % p == 0:
            total += weight_mid * coeff(table, QuadForm(a * p, b, c // p))
        if a % p == 0 and b % p == 0 and c % p == 0:
            total += weight_div * coeff(table, QuadForm(a // p, b // p, c // p))
        values[form] = total
    return SiegelTable.from_values(
        k, bound, values, f"T({p}) of [{table.provenance}]"
    )


@dataclass(frozen=True)
class EigenvalueRecord:
    """A verified T(p) eigenvalue with the number of classes checked."""

    p: int
    lam: Fraction
    verified_keys: int


def eigenvalue_p(table: SiegelTable, p: int) -> EigenvalueRecord:
    """The scalar with T(p) table = lambda * table, verified on every class."""
    transformed = hecke_tp(table, p)
    restricted = table.restricted(transformed.disc_bound)
    pairs = list(zip(restricted.entries, transformed.entries))
    lam = None
    for (form, base), (_, image) in pairs:
        if base != 0:
            lam = image / base
            break
    if lam is None:
        raise DomainError(
            f"insufficient data: no nonzero coefficient below bound {transformed.disc_bound}"
        )
    for (form, base), (_, image) in pairs:
        if image != lam * base:
            raise DomainError(
                f"not an eigenform: proportionality fails at {form.triple()}"
            )
    return EigenvalueRecord(p=p, lam=lam, verified_keys=len(pairs))


def sk_eigenvalue_p(g: QSeries, k: int, p: int) -> Fraction:
    """Independent eigenvalue oracle a_p(g) + p^(k-1) + p^(k-2) for the lift
    of weight k whose source eigenform is g (weight 2k - 2)."""
    if g.weight != 2 * k - 2:
        raise DomainError(f"source form must have weight {2 * k - 2}, got {g.weight}")
    ap = hecke_ap(g, p)
    return ap + Fraction(p) ** (k - 1) + Fraction(p) ** (k - 2)
