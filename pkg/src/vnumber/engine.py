"""v-number computation for arbitrary monomial ideals.

Two routes: a definitional grid-search oracle (enumerate monomial witnesses
by degree, then lex, over a truncated exponent box), and the fast matrix
formula for m-primary ideals (minimize tr(A) - t over admissible generator
selections).
"""
from __future__ import annotations

import itertools
import math

from .errors import BudgetExceededError, VnumError
from .monomials import (
    Monomial,
    MonomialIdeal,
    MonomialPrime,
    VWitness,
    alpha,
    is_m_primary,
    pure_power_exponents,
)

DEFAULT_BUDGET = 10**7


def grid_caps(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Per-variable exponent caps beyond which the colon no longer changes.

    Quotient exponents are max(u_i - f_i, 0), so raising f_i past the
    largest u_i has no effect.
    """
    return tuple(
        max(g.exponents[i] for g in ideal.generators)
        for i in range(ideal.ambient)
    )


def _check_budget(caps: tuple[int, ...], budget: int):
    size = math.prod(c + 1 for c in caps)
    if size > budget:
        raise BudgetExceededError(size, budget)


def _vectors_of_degree(degree: int, caps: tuple[int, ...]):
    """Exponent vectors with the given total degree, componentwise <= caps,
    in lexicographic ascending order."""
    if len(caps) == 1:
        if 0 <= degree <= caps[0]:
            yield (degree,)
        return
    lo = max(0, degree - sum(caps[1:]))
    hi = min(caps[0], degree)
    for e in range(lo, hi + 1):
        for rest in _vectors_of_degree(degree - e, caps[1:]):
            yield (e,) + rest


def iter_grid(ideal: MonomialIdeal, budget: int = DEFAULT_BUDGET):
    """All candidate witness monomials, ordered by (degree, lex exponents)."""
    caps = grid_caps(ideal)
    _check_budget(caps, budget)
    for d in range(sum(caps) + 1):
        for exps in _vectors_of_degree(d, caps):
            yield Monomial(exps)


def colon_is_prime(ideal: MonomialIdeal, f: Monomial) -> MonomialPrime | None:
    """The support of (I : f) if it is a monomial prime, else None."""
    quotient = ideal.colon(f)
    if quotient.is_unit:
        return None
    if all(g.degree == 1 for g in quotient.generators):
        support = frozenset()
        for g in quotient.generators:
            support |= g.support
        return MonomialPrime(ideal.ambient, support)
    return None


def associated_primes(
    ideal: MonomialIdeal, budget: int = DEFAULT_BUDGET
) -> frozenset[MonomialPrime]:
    """Ass(I), realized by monomial witnesses over the truncated grid."""
    if ideal.is_unit:
        raise VnumError("associated primes undefined for the unit ideal")
    found = set()
    for f in iter_grid(ideal, budget):
        prime = colon_is_prime(ideal, f)
        if prime is not None:
            found.add(prime)
    return frozenset(found)


def v_oracle(ideal: MonomialIdeal, budget: int = DEFAULT_BUDGET) -> VWitness:
    """Definitional v-number: first grid monomial whose colon is a prime.

    Enumeration by (degree, lex) guarantees degree minimality and a
    deterministic (lex-smallest) witness.
    """
    if ideal.is_unit:
        raise VnumError("v-number undefined for the unit ideal")
    for f in iter_grid(ideal, budget):
        prime = colon_is_prime(ideal, f)
        if prime is not None:
            return VWitness(f.degree, f, prime)
    raise VnumError("internal error: no associated prime found on the grid")


def minimum_witnesses(
    ideal: MonomialIdeal, budget: int = DEFAULT_BUDGET
) -> list[VWitness]:
    """Every minimum-degree witness, in lex order."""
    first = v_oracle(ideal, budget)
    caps = grid_caps(ideal)
    out = []
    for exps in _vectors_of_degree(first.value, caps):
        f = Monomial(exps)
        prime = colon_is_prime(ideal, f)
        if prime is not None:
            out.append(VWitness(f.degree, f, prime))
    return out


def v_at_prime(
    ideal: MonomialIdeal, prime: MonomialPrime, budget: int = DEFAULT_BUDGET
) -> int:
    """v_P(I): minimum witness degree restricted to the given prime."""
    if prime not in associated_primes(ideal, budget):
        raise VnumError("prime not associated")
    for f in iter_grid(ideal, budget):
        if colon_is_prime(ideal, f) == prime:
            return f.degree
    raise VnumError("internal error: associated prime not realized on grid")


def v_primary_matrix(ideal: MonomialIdeal) -> VWitness:
    """Matrix formula for m-primary ideals: min tr(A) - t over selections A
    of t generators with column-dominant diagonal and socle condition."""
    if not is_m_primary(ideal):
        raise VnumError("matrix formula requires an m-primary ideal")
    t = ideal.ambient
    gens = ideal.generators
    best: tuple[int, tuple[int, ...]] | None = None
    # Ordered selections: condition (1) ties row i to column i, and also
    # forces the chosen generators to be distinct.
    for selection in itertools.permutations(range(len(gens)), t):
        rows = [gens[i].exponents for i in selection]
        if not all(
            all(rows[i][i] > rows[l][i] for l in range(t) if l != i)
            for i in range(t)
        ):
            continue
        socle = Monomial(tuple(rows[i][i] - 1 for i in range(t)))
        if ideal.contains(socle):
            continue
        value = socle.degree
        if best is None or value < best[0]:
            best = (value, selection)
    if best is None:
        raise VnumError("internal error: no admissible matrix for m-primary ideal")
    value, selection = best
    socle = Monomial(tuple(gens[selection[i]].exponents[i] - 1 for i in range(t)))
    return VWitness(value, socle, MonomialPrime.maximal(t))


def v_two_vars(ideal: MonomialIdeal) -> int:
    """Closed form in two variables: min of a_i + b_{i+1} - 2 over the
    lex-descending generator list (a_0,0) > ... > (0,b_n)."""
    if ideal.ambient != 2:
        raise VnumError("two-variable formula requires ambient t = 2")
    if not is_m_primary(ideal):
        raise VnumError("two-variable formula requires an m-primary ideal")
    gens = sorted(ideal.generators, key=lambda g: g.exponents, reverse=True)
    return min(
        gens[i].exponents[0] + gens[i + 1].exponents[1] - 2
        for i in range(len(gens) - 1)
    )


def v_bounds(ideal: MonomialIdeal) -> tuple[int, int | None]:
    """(alpha(I) - 1, sum a_i - t if m-primary else None)."""
    lower = alpha(ideal) - 1
    caps = pure_power_exponents(ideal)
    upper = sum(caps) - ideal.ambient if caps is not None else None
    return lower, upper


def v_colon_decomposition_check(
    ideal: MonomialIdeal, n: int, budget: int = DEFAULT_BUDGET
) -> bool:
    """Check v(I^n) = v(I^n : g) + deg g for every proper divisor g of the
    computed witness of v(I^n)."""
    if n < 1:
        raise VnumError("power exponent must be >= 1")
    power = ideal**n
    top = v_oracle(power, budget)
    for g in top.witness.divisors():
        if g == top.witness:
            continue
        quotient = power.colon(g)
        if v_oracle(quotient, budget).value + g.degree != top.value:
            return False
    return True
