"""Positive definite integral binary quadratic forms and imaginary quadratic
class groups.

A form (a, b, c) stands for the half-integral symmetric matrix
[[a, b/2], [b/2, c]] and, through the Gauss correspondence, for an ideal class
of Q(sqrt(disc)).  The module provides SL2(Z) reduction, exhaustive
enumeration of reduced forms, Gauss composition (computed through ideal
products in Hermite normal form), the full class group with its abelian
structure, ideal class characters with exact cyclotomic values, Kronecker
characters, lattice representation counts, and theta series coefficients.

All values are immutable after construction and all operations are pure
functions, so everything here is safe to use from multiple threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .arith import is_fundamental_discriminant, kronecker_symbol, xgcd
from .cyclotomic import Cyclotomic
from .errors import DomainError


@dataclass(frozen=True)
class QuadForm:
    """Integral binary quadratic form a*x^2 + b*x*y + c*y^2, positive definite."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for v in (self.a, self.b, self.c):
            if not isinstance(v, int):
                raise DomainError(f"form coefficients must be integers, got {v!r}")
        if self.a <= 0:
            raise DomainError(f"form {self.triple()} is not positive definite (a <= 0)")
        if self.disc >= 0:
            raise DomainError(f"form {self.triple()} is not positive definite (disc >= 0)")

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self) -> int:
        return gcd(gcd(self.a, self.b), self.c)

    def triple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def __iter__(self):
        return iter(self.triple())

    def evaluate(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def sort_key(self) -> tuple[int, int, int]:
        return (-self.disc, self.a, self.b)

    def __str__(self):
        return f"{self.a} {self.b} {self.c}"


@dataclass(frozen=True)
class SL2Transform:
    """Unimodular integer matrix [[p, q], [r, s]] with determinant 1."""

    p: int
    q: int
    r: int
    s: int

    def __post_init__(self):
        if self.p * self.s - self.q * self.r != 1:
            raise DomainError(f"matrix {(self.p, self.q, self.r, self.s)} has determinant != 1")

    @classmethod
    def identity(cls) -> "SL2Transform":
        return cls(1, 0, 0, 1)

    def matmul(self, other: "SL2Transform") -> "SL2Transform":
        return SL2Transform(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def inverse(self) -> "SL2Transform":
        return SL2Transform(self.s, -self.q, -self.r, self.p)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)


SHIFT = SL2Transform(1, 1, 0, 1)
SWAP = SL2Transform(0, -1, 1, 0)
GENERATORS = (SHIFT, SHIFT.inverse(), SWAP, SWAP.inverse())


def discriminant(form: QuadForm) -> int:
    return form.disc


def apply_sl2(form: QuadForm, mat: SL2Transform) -> QuadForm:
    """The form of the matrix A^t S A; the discriminant is unchanged."""
    a, b, c = form
    p, q, r, s = mat.entries()
    return QuadForm(
        a * p * p + b * p * r + c * r * r,
        2 * a * p * q + b * (p * s + q * r) + 2 * c * r * s,
        a * q * q + b * q * s + c * s * s,
    )


def is_reduced(form: QuadForm) -> bool:
    a, b, c = form
    if not (abs(b) <= a <= c):
        return False
    if (abs(b) == a or a == c) and b < 0:
        return False
    return True


def reduce(form: QuadForm) -> tuple[QuadForm, SL2Transform]:
    """Canonical reduced representative of the SL2(Z) class of `form`.

    Returns (reduced, A) with apply_sl2(form, A) == reduced.  The reduced
    representative satisfies |b| <= a <= c with b >= 0 whenever |b| = a or
    a = c, which makes it unique in its class.
    """
    a, b, c = form
    mat = SL2Transform.identity()

    def translate(a, b, c, mat):
        # move b into (-a, a]
        t = (a - b) // (2 * a)
        if t:
            mat = mat.matmul(SL2Transform(1, t, 0, 1))
            b, c = b + 2 * t * a, a * t * t + b * t + c
        return a, b, c, mat

    a, b, c, mat = translate(a, b, c, mat)
    while a > c or (a == c and b < 0):
        a, b, c = c, -b, a
        mat = mat.matmul(SWAP)
        a, b, c, mat = translate(a, b, c, mat)
    out = QuadForm(a, b, c)
    assert is_reduced(out)
    return out, mat


def is_fundamental(disc: int) -> bool:
    """True iff disc is a fundamental discriminant (footnote convention)."""
    return is_fundamental_discriminant(disc)


def enumerate_reduced(disc: int) -> list[QuadForm]:
    """All reduced forms of the given negative discriminant, ascending (a, b)."""
    if disc >= 0:
        raise DomainError(f"discriminant must be negative, got {disc}")
    if disc % 4 not in (0, 1):
        raise DomainError(f"{disc} is not 0 or 1 mod 4")
    forms = []
    for a in range(1, isqrt(-disc // 3) + 1):
        for b in range(-a, a + 1):
            if (b - disc) % 2:
                continue
            num = b * b - disc
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (b == -a or a == c):
                continue
            forms.append(QuadForm(a, b, c))
    return forms


def reduced_classes_upto(bound: int) -> list[QuadForm]:
    """All reduced forms with |disc| <= bound, sorted by (|disc|, a, b)."""
    out = []
    for d in range(3, bound + 1):
        if (-d) % 4 in (0, 1):
            out.extend(enumerate_reduced(-d))
    return out


def principal_form(disc: int) -> QuadForm:
    r = disc % 2
    return QuadForm(1, r, (r * r - disc) // 4)


def compose(form1: QuadForm, form2: QuadForm) -> QuadForm:
    """Gauss composition of form classes, computed via the ideal product.

    The form (a, b, c) corresponds to the ideal Z*a + Z*(-b + sqrt(D))/2; the
    product module of two such ideals is put in Hermite normal form, its
    content is stripped, and the resulting primitive ideal is read back as a
    reduced form.  Requires a common fundamental discriminant.
    """
    disc = form1.disc
    if form2.disc != disc:
        raise DomainError(f"mismatched discriminants {disc} and {form2.disc}")
    if not is_fundamental(disc):
        raise DomainError(f"composition requires a fundamental discriminant, got {disc}")
    r = disc % 2
    q = (disc - r * r) // 4  # omega^2 = q + r*omega for omega = (r + sqrt(D))/2
    a1, b1, _ = form1
    a2, b2, _ = form2
    m1 = (-b1 - r) // 2
    m2 = (-b2 - r) // 2
    # generators of the product module in coordinates (x, y) w.r.t. (1, omega)
    gens = [
        (a1 * a2, 0),
        (a1 * m2, a1),
        (a2 * m1, a2),
        (m1 * m2 + q, m1 + m2 + r),
    ]
    # y-gcd and a combination achieving it
    g = 0
    comb = (0, 0)
    for x, y in gens:
        if y == 0:
            continue
        g0, u, v = xgcd(g, y)
        comb = (comb[0] * u + x * v, comb[1] * u + y * v)
        g = g0
    assert g > 0 and comb[1] == g
    n = 0
    for x, y in gens:
        n = gcd(n, x - (y // g) * comb[0])
    assert n > 0 and n * g == a1 * a2, "product norm must be a1*a2"
    # strip the content g: the primitive part is [n/g, (m0/g) + omega]
    assert comb[0] % g == 0 and n % g == 0
    a3 = n // g
    m3 = (comb[0] // g) % a3
    b3 = -(2 * m3 + r)
    num = b3 * b3 - disc
    assert num % (4 * a3) == 0
    reduced, _ = reduce(QuadForm(a3, b3, num // (4 * a3)))
    return reduced


def unit_count(disc: int) -> int:
    """Number of roots of unity in Q(sqrt(disc)): 6 for -3, 4 for -4, else 2."""
    if disc == -3:
        return 6
    if disc == -4:
        return 4
    return 2


@dataclass(frozen=True)
class ClassGroup:
    """The form class group of a fundamental negative discriminant.

    `reps` are the reduced forms in canonical order, `comp` is the full
    composition table on indices, `structure` lists the cyclic invariant
    factors (largest first, empty for the trivial group), and `w` counts the
    roots of unity of the field.
    """

    disc: int
    reps: tuple[QuadForm, ...]
    identity: int
    comp: tuple[tuple[int, ...], ...]
    structure: tuple[int, ...]
    w: int
    gens: tuple[int, ...] = field(repr=False)
    coords: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def h(self) -> int:
        return len(self.reps)

    def mul(self, i: int, j: int) -> int:
        return self.comp[i][j]

    def inv(self, i: int) -> int:
        return self.comp[i].index(self.identity)

    def order_of(self, i: int) -> int:
        k, x = 1, i
        while x != self.identity:
            x = self.comp[x][i]
            k += 1
        return k

    def index_of(self, form: QuadForm) -> int:
        reduced, _ = reduce(form)
        return self.reps.index(reduced)


def _abelian_decomposition(comp, identity):
    """Invariant-factor generators of the group given by a composition table.

    Returns (gens, orders, coords): generator indices with orders m1 >= m2 >= ...
    (each dividing the previous) and per-element exponent coordinates, so the
    group is the internal direct product of the cyclic subgroups generated.
    """
    h = len(comp)

    def order_of(i):
        k, x = 1, i
        while x != identity:
            x = comp[x][i]
            k += 1
        return k

    gens: list[int] = []
    orders: list[int] = []
    subgroup = {identity}
    while len(subgroup) < h:
        # element of maximal order in the quotient by the current subgroup
        best_k, best_x = 0, None
        for x in range(h):
            k, y = 1, x
            while y not in subgroup:
                y = comp[y][x]
                k += 1
            if k > best_k:
                best_k, best_x = k, x
        # replace by a coset member whose order in the full group is exactly
        # the quotient order; one exists by the abelian basis theorem
        chosen = None
        for s in sorted(subgroup):
            cand = comp[best_x][s]
            if order_of(cand) == best_k:
                chosen = cand
                break
        assert chosen is not None, "no exact-order lift in coset"
        gens.append(chosen)
        orders.append(best_k)
        new = set()
        for s in sorted(subgroup):
            y = s
            for _ in range(best_k):
                new.add(y)
                y = comp[y][chosen]
        subgroup = new
        assert len(subgroup) == _prod(orders), "generators are not independent"
    coords: list[tuple[int, ...] | None] = [None] * h
    for exps in itertools.product(*(range(o) for o in orders)):
        x = identity
        for g, e in zip(gens, exps):
            for _ in range(e):
                x = comp[x][g]
        assert coords[x] is None, "coordinate collision"
        coords[x] = exps
    return tuple(gens), tuple(orders), tuple(coords)  # type: ignore[arg-type]


def _prod(values):
    out = 1
    for v in values:
        out *= v
    return out


@lru_cache(maxsize=None)
def class_group(disc: int) -> ClassGroup:
    """Fully populated class group of a fundamental negative discriminant."""
    if disc >= 0:
        raise DomainError(f"discriminant must be negative, got {disc}")
    if not is_fundamental(disc):
        raise DomainError(f"{disc} is not a fundamental discriminant")
    reps = tuple(enumerate_reduced(disc))
    index = {f: i for i, f in enumerate(reps)}
    identity = index[principal_form(disc)]
    h = len(reps)
    table = [[0] * h for _ in range(h)]
    for i in range(h):
        for j in range(i, h):
            k = index[compose(reps[i], reps[j])]
            table[i][j] = table[j][i] = k
    comp = tuple(tuple(row) for row in table)
    for i in range(h):
        assert comp[identity][i] == i
        assert sorted(comp[i]) == list(range(h)), "rows must be permutations"
    gens, orders, coords = _abelian_decomposition(comp, identity)
    return ClassGroup(
        disc=disc,
        reps=reps,
        identity=identity,
        comp=comp,
        structure=orders,
        w=unit_count(disc),
        gens=gens,
        coords=coords,
    )


@dataclass(frozen=True)
class QuadCharacter:
    """The quadratic character attached to a fundamental negative discriminant."""

    disc: int

    def __post_init__(self):
        if self.disc >= 0 or not is_fundamental(self.disc):
            raise DomainError(f"{self.disc} is not a fundamental negative discriminant")

    def __call__(self, n: int) -> int:
        return kronecker_symbol(self.disc, n)


def kronecker(chi: QuadCharacter, n: int) -> int:
    if n < 1:
        raise DomainError(f"argument must be >= 1, got {n}")
    return chi(n)


@dataclass(frozen=True)
class ClassCharacter:
    """A character of a class group with values in the m-th roots of unity.

    The value on reps[i] is zeta_m ** exps[i]; m is the exact order of the
    character, so m = 1 means the trivial character.
    """

    group: ClassGroup
    m: int
    exps: tuple[int, ...]

    def is_trivial(self) -> bool:
        return self.m == 1

    def value(self, i: int) -> Cyclotomic:
        return Cyclotomic.root(self.m, self.exps[i])

    def inverse_value(self, i: int) -> Cyclotomic:
        return Cyclotomic.root(self.m, -self.exps[i])

    def sum_weighted(self, values, invert: bool = False) -> Cyclotomic:
        """Exact sum of values[i] * Lambda(reps[i]) (or Lambda^-1 if invert)."""
        acc = [0] * self.m
        for i, v in enumerate(values):
            if v:
                e = (-self.exps[i]) % self.m if invert else self.exps[i]
                acc[e] += v
        return Cyclotomic(self.m, acc)


def characters(group: ClassGroup) -> list[ClassCharacter]:
    """All h characters of the class group, the trivial character first."""
    orders = group.structure
    if not orders:
        return [ClassCharacter(group=group, m=1, exps=(0,) * group.h)]
    big = orders[0]  # exponent of the group; every order divides it
    out = []
    for etuple in itertools.product(*(range(o) for o in orders)):
        ts = [
            sum(e * v * (big // o) for e, v, o in zip(etuple, coord, orders)) % big
            for coord in group.coords
        ]
        g = big
        for t in ts:
            g = gcd(g, t)
        m = big // g
        exps = tuple((t // g) % m for t in ts)
        out.append(ClassCharacter(group=group, m=m, exps=exps))
    return out


def representation_count(form: QuadForm, n: int) -> int:
    """Number of integer pairs (x, y) with form(x, y) = n, by lattice search."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    a, b, c = form
    d = -form.disc
    count = 0
    xmax = isqrt(4 * c * n // d)
    for x in range(-xmax, xmax + 1):
        # c*y^2 + b*x*y + (a*x^2 - n) = 0 has integer roots iff dy is a square
        dy = 4 * c * n - d * x * x
        if dy < 0:
            continue
        root = isqrt(dy)
        if root * root != dy:
            continue
        for sign in ((root, -root) if root else (0,)):
            num = -b * x + sign
            if num % (2 * c) == 0:
                count += 1
    return count


def representation_counts_upto(form: QuadForm, nmax: int) -> list[int]:
    """counts[n] = number of (x, y) with form(x, y) = n, for 0 <= n <= nmax."""
    a, b, c = form
    d = -form.disc
    counts = [0] * (nmax + 1)
    xmax = isqrt(4 * c * nmax // d)
    for x in range(-xmax, xmax + 1):
        dy = 4 * c * nmax - d * x * x
        root = isqrt(dy) if dy >= 0 else -1
        ylo = (-b * x - root) // (2 * c)
        yhi = (-b * x + root) // (2 * c)
        for y in range(ylo, yhi + 1):
            v = form.evaluate(x, y)
            if 0 <= v <= nmax:
                counts[v] += 1
    return counts


@dataclass(frozen=True)
class ThetaSeries:
    """Coefficients r(1..nmax) of the theta series of a class character."""

    character: ClassCharacter
    nmax: int
    coeffs: tuple[Cyclotomic, ...]

    def r(self, n: int) -> Cyclotomic:
        if not 1 <= n <= self.nmax:
            raise DomainError(f"coefficient index {n} outside 1..{self.nmax}")
        return self.coeffs[n - 1]


def theta_coefficients(character: ClassCharacter, nmax: int) -> ThetaSeries:
    """Exact theta coefficients r(n) = sum over classes of Lambda(c) * N_c(n) / w.

    N_c(n) is the representation count of the reduced representative of c and
    w the number of roots of unity; each N_c(n) / w is a nonnegative integer
    (ideals of norm n in the class), so every r(n) lies in Z[zeta_m].
    """
    if nmax < 1:
        raise DomainError(f"nmax must be >= 1, got {nmax}")
    group = character.group
    w = group.w
    per_class = []
    for rep in group.reps:
        counts = representation_counts_upto(rep, nmax)
        ideal_counts = []
        for n, cnt in enumerate(counts):
            q, rem = divmod(cnt, w)
            assert rem == 0 or n == 0, f"count {cnt} at {n} not divisible by w={w}"
            ideal_counts.append(q)
        per_class.append(ideal_counts)
    coeffs = []
    for n in range(1, nmax + 1):
        coeffs.append(character.sum_weighted([pc[n] for pc in per_class]))
    series = ThetaSeries(character=character, nmax=nmax, coeffs=tuple(coeffs))
    assert series.r(1) == 1, "r(1) must be the unit ideal contribution"
    return series
