"""Exact monomial and monomial-ideal arithmetic.

Monomials are exponent vectors in a fixed number of variables; ideals are
antichains of minimal monomial generators kept in a canonical (lexicographic)
order so that ideal equality is structural equality.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import AmbientMismatchError, ExponentOverflowError, VnumError

# Exponents stay within signed 64-bit range; anything past this is a bug in
# the caller's input, not something to wrap silently.
MAX_EXPONENT = 2**63 - 1


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) < 1:
            raise VnumError("monomial needs at least one variable")
        for e in self.exponents:
            if not isinstance(e, int) or e < 0:
                raise VnumError(f"exponents must be non-negative integers, got {e!r}")
            if e > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent {e} exceeds 64-bit range")

    @classmethod
    def one(cls, ambient: int) -> Monomial:
        return cls((0,) * ambient)

    @classmethod
    def variable(cls, ambient: int, index: int, exponent: int = 1) -> Monomial:
        """The monomial x_index^exponent (index is 1-based)."""
        if not 1 <= index <= ambient:
            raise VnumError(f"variable index {index} out of range 1..{ambient}")
        exps = [0] * ambient
        exps[index - 1] = exponent
        return cls(tuple(exps))

    @property
    def ambient(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_constant(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @property
    def support(self) -> frozenset[int]:
        """1-based indices of variables appearing with positive exponent."""
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e > 0)

    def divides(self, other: Monomial) -> bool:
        self._check_ambient(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def mul(self, other: Monomial) -> Monomial:
        self._check_ambient(other)
        exps = tuple(a + b for a, b in zip(self.exponents, other.exponents))
        if any(e > MAX_EXPONENT for e in exps):
            raise ExponentOverflowError("product exponent exceeds 64-bit range")
        return Monomial(exps)

    def pow(self, n: int) -> Monomial:
        if n < 0:
            raise VnumError("negative powers are not monomials")
        exps = tuple(e * n for e in self.exponents)
        if any(e > MAX_EXPONENT for e in exps):
            raise ExponentOverflowError("power exponent exceeds 64-bit range")
        return Monomial(exps)

    def gcd(self, other: Monomial) -> Monomial:
        self._check_ambient(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def quotient_by(self, f: Monomial) -> Monomial:
        """self / gcd(self, f): componentwise max(e_i - f_i, 0)."""
        self._check_ambient(f)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, f.exponents)))

    def divisors(self):
        """All monomials dividing self, in lexicographic order."""
        for exps in itertools.product(*(range(e + 1) for e in self.exponents)):
            yield Monomial(exps)

    def _check_ambient(self, other: Monomial):
        if self.ambient != other.ambient:
            raise AmbientMismatchError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}"
            )


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, stored as its canonical minimal generator antichain.

    Use minimalize() to construct one; the unit ideal (generator 1) only
    arises as the result of a colon and is flagged by is_unit.
    """

    ambient: int
    generators: tuple[Monomial, ...]

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant

    def contains(self, m: Monomial) -> bool:
        if m.ambient != self.ambient:
            raise AmbientMismatchError(
                f"ambient mismatch: {self.ambient} vs {m.ambient}"
            )
        return any(g.divides(m) for g in self.generators)

    def colon(self, f: Monomial) -> MonomialIdeal:
        """(I : f), generated by u/gcd(u, f) over the generators u."""
        if f.ambient != self.ambient:
            raise AmbientMismatchError(
                f"ambient mismatch: {self.ambient} vs {f.ambient}"
            )
        quotients = [g.quotient_by(f) for g in self.generators]
        if any(q.is_constant for q in quotients):
            return unit_ideal(self.ambient)
        return minimalize(quotients)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._check_ambient(other)
        return minimalize(list(self.generators) + list(other.generators))

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._check_ambient(other)
        return minimalize(
            [u.mul(v) for u in self.generators for v in other.generators]
        )

    def __pow__(self, n: int) -> MonomialIdeal:
        if n < 1:
            raise VnumError("power exponent must be >= 1 (unit ideal unsupported)")
        result = self
        # Minimalizing after every step keeps intermediate generator sets small.
        for _ in range(n - 1):
            result = result * self
        return result

    def _check_ambient(self, other: MonomialIdeal):
        if self.ambient != other.ambient:
            raise AmbientMismatchError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}"
            )


@dataclass(frozen=True)
class MonomialPrime:
    """The prime ideal generated by the variables in `support` (1-based)."""

    ambient: int
    support: frozenset[int]

    def __post_init__(self):
        if not self.support:
            raise VnumError("prime support must be non-empty")
        if not all(1 <= i <= self.ambient for i in self.support):
            raise VnumError("prime support out of variable range")

    @classmethod
    def maximal(cls, ambient: int) -> MonomialPrime:
        return cls(ambient, frozenset(range(1, ambient + 1)))

    def as_ideal(self) -> MonomialIdeal:
        return minimalize(
            [Monomial.variable(self.ambient, i) for i in sorted(self.support)]
        )


@dataclass(frozen=True)
class VWitness:
    """A v-number together with its certificate."""

    value: int
    witness: Monomial
    prime: MonomialPrime


def minimalize(gens) -> MonomialIdeal:
    """Normalize a generator collection to the minimal antichain 𝒢(I)."""
    gens = list(gens)
    if not gens:
        raise VnumError("zero ideal not supported (empty generator set)")
    ambient = gens[0].ambient
    for g in gens:
        if g.ambient != ambient:
            raise AmbientMismatchError("generators have mixed ambients")
        if g.is_constant:
            raise VnumError("unit generator 1 is rejected; pass proper monomials")
    unique = sorted(set(gens))
    kept = [
        g
        for g in unique
        if not any(h != g and h.divides(g) for h in unique)
    ]
    return MonomialIdeal(ambient, tuple(kept))


def unit_ideal(ambient: int) -> MonomialIdeal:
    return MonomialIdeal(ambient, (Monomial.one(ambient),))


def alpha(ideal: MonomialIdeal) -> int:
    """Minimum degree of a nonzero element: min generator degree."""
    if ideal.is_unit:
        raise VnumError("alpha undefined for the unit ideal")
    return min(g.degree for g in ideal.generators)


def pure_power_exponents(ideal: MonomialIdeal) -> tuple[int, ...] | None:
    """The exponents (a_1..a_t) of the pure-power generators x_i^{a_i}.

    Returns None unless every variable has a pure-power generator, i.e. the
    ideal is not m-primary.
    """
    if ideal.is_unit:
        return None
    exps = [0] * ideal.ambient
    for g in ideal.generators:
        sup = g.support
        if len(sup) == 1:
            (i,) = sup
            exps[i - 1] = g.exponents[i - 1]
    if any(e == 0 for e in exps):
        return None
    return tuple(exps)


def is_m_primary(ideal: MonomialIdeal) -> bool:
    return pure_power_exponents(ideal) is not None


def standard_monomials(ideal: MonomialIdeal) -> list[Monomial]:
    """All monomials outside the ideal, for m-primary input (finitely many)."""
    caps = pure_power_exponents(ideal)
    if caps is None:
        raise VnumError("standard monomials infinite: ideal is not m-primary")
    result = []
    for exps in itertools.product(*(range(a) for a in caps)):
        m = Monomial(exps)
        if not ideal.contains(m):
            result.append(m)
    return result


def regularity_zero_dim(ideal: MonomialIdeal) -> int:
    """reg(S/I) for m-primary I: the top degree with a standard monomial."""
    return max(m.degree for m in standard_monomials(ideal))
