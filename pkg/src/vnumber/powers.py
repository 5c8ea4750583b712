"""Asymptotics of v-numbers of ideal powers.

Computes v(I), v(I^2), ..., certifies the linear upper bound via the
stabilizing colon chain, and checks the equality classes and the
regularity-gap family.
"""
from __future__ import annotations

from dataclasses import dataclass

from .engine import DEFAULT_BUDGET, v_oracle, v_primary_matrix
from .errors import BudgetExceededError, VnumError
from .graphs import Graph, edge_ideal, v_graph
from .monomials import (
    Monomial,
    MonomialIdeal,
    alpha,
    minimalize,
    pure_power_exponents,
    regularity_zero_dim,
)


@dataclass(frozen=True)
class PowerSequence:
    ideal: MonomialIdeal
    alpha: int
    values: tuple[tuple[int, int, Monomial], ...]  # (n, v(I^n), witness)
    truncated_at: int | None = None  # first n whose grid blew the budget


def power_sequence(
    ideal: MonomialIdeal, max_n: int, budget: int = DEFAULT_BUDGET
) -> PowerSequence:
    if max_n < 1:
        raise VnumError("max power must be >= 1")
    values = []
    truncated = None
    for n in range(1, max_n + 1):
        try:
            w = v_oracle(ideal**n, budget)
        except BudgetExceededError:
            truncated = n
            break
        values.append((n, w.value, w.witness))
    return PowerSequence(ideal, alpha(ideal), tuple(values), truncated)


def linear_bound_certificate(
    ideal: MonomialIdeal,
    f: Monomial | None = None,
    horizon: int = 8,
    verify_max_n: int = 3,
    budget: int = DEFAULT_BUDGET,
) -> tuple[int, int]:
    """Certify v(I^{n+1}) <= n*alpha(I) + d for n >= n0.

    Follows the ascending chain I = (I:f^0) <= (I^2:f) <= (I^3:f^2) <= ...
    until two consecutive terms coincide; n0 is the stabilization index and
    d the v-number of the stable term. The bound is then checked against
    the oracle on every computed power up to verify_max_n.
    """
    a = alpha(ideal)
    if f is None:
        f = min(
            (g for g in ideal.generators if g.degree == a),
            key=lambda g: g.exponents,
        )
    if f.degree != a or not ideal.contains(f):
        raise VnumError("f must lie in I with deg f = alpha(I)")
    chain = [ideal]
    n0 = None
    for n in range(1, horizon + 1):
        nxt = (ideal ** (n + 1)).colon(f.pow(n))
        if nxt == chain[-1]:
            n0 = n - 1
            break
        chain.append(nxt)
    if n0 is None:
        raise VnumError(f"colon chain did not stabilize within horizon {horizon}")
    d = v_oracle(chain[n0], budget).value
    for n in range(n0, max(n0, verify_max_n) + 1):
        actual = v_oracle(ideal ** (n + 1), budget).value
        if actual > n * a + d:
            raise VnumError(
                f"internal error: bound violated at n={n}: {actual} > {n * a + d}"
            )
    return n0, d


def check_alpha_equality_class(
    ideal: MonomialIdeal, max_n: int, budget: int = DEFAULT_BUDGET
) -> bool:
    """v(I^{n+1}) = v(I) + n*alpha(I) for m-primary I with v(I) = alpha(I)-1."""
    if pure_power_exponents(ideal) is None:
        raise VnumError("class hypothesis not met: ideal is not m-primary")
    base = v_oracle(ideal, budget).value
    a = alpha(ideal)
    if base != a - 1:
        raise VnumError(
            f"class hypothesis not met: v(I)={base} but alpha(I)-1={a - 1}"
        )
    return all(
        v_oracle(ideal ** (n + 1), budget).value == base + n * a
        for n in range(1, max_n + 1)
    )


def check_pure_power_class(
    ideal: MonomialIdeal, max_n: int, budget: int = DEFAULT_BUDGET
) -> bool:
    """v(I^{n+1}) = v(I) + n*alpha(I) when every generator is a pure power."""
    if any(len(g.support) != 1 for g in ideal.generators):
        raise VnumError("ideal has a mixed generator; pure powers required")
    base = v_oracle(ideal, budget).value
    a = alpha(ideal)
    return all(
        v_oracle(ideal ** (n + 1), budget).value == base + n * a
        for n in range(1, max_n + 1)
    )


@dataclass(frozen=True)
class EdgePowerRow:
    n: int  # exponent is n+1
    value: int
    lower: int  # 2(n+1) - 1
    upper: int  # 2n + v(I)
    in_bracket: bool


@dataclass(frozen=True)
class EdgePowerReport:
    base_v: int
    rows: tuple[EdgePowerRow, ...]
    exact_linear: bool  # v(I^{n+1}) = 2n+1 throughout (forced when v(I)=1)
    truncated_at: int | None = None


def check_edge_power_bounds(
    g: Graph, max_n: int, budget: int = DEFAULT_BUDGET
) -> EdgePowerReport:
    ideal = edge_ideal(g)
    base = v_graph(g).value
    rows = []
    truncated = None
    for n in range(1, max_n + 1):
        try:
            value = v_oracle(ideal ** (n + 1), budget).value
        except BudgetExceededError:
            truncated = n
            break
        lower, upper = 2 * (n + 1) - 1, 2 * n + base
        rows.append(EdgePowerRow(n, value, lower, upper, lower <= value <= upper))
    exact = all(r.value == 2 * r.n + 1 for r in rows)
    if base == 1 and not exact:
        raise VnumError("internal error: v(I)=1 but v(I^{n+1}) != 2n+1")
    return EdgePowerReport(base, tuple(rows), exact, truncated)


def check_power_lower_vs_base(
    ideal: MonomialIdeal, max_s: int, budget: int = DEFAULT_BUDGET
) -> tuple[bool, int]:
    """Find the first s with v(I^{s+1}) >= v(I) for m-primary I.

    Returns (ok, s) where ok also requires s to sit at or below the
    sufficient threshold (s+1)*alpha(I) - 1 >= sum(a_i) - t, which forces
    the inequality for every later power.
    """
    caps = pure_power_exponents(ideal)
    if caps is None:
        raise VnumError("m-primary ideal required")
    a = alpha(ideal)
    bound = sum(caps) - ideal.ambient
    threshold = max(1, -(-(bound + 1) // a) - 1)  # ceil((bound+1)/a) - 1
    base = v_oracle(ideal, budget).value
    for s in range(1, max_s + 1):
        if v_oracle(ideal ** (s + 1), budget).value >= base:
            return s <= threshold, s
    raise VnumError(f"v(I^(s+1)) < v(I) for every s <= {max_s}")


@dataclass(frozen=True)
class RegGapResult:
    ideal: MonomialIdeal
    v: int
    reg: int
    gap: int


def reg_gap_family(
    t: int, exponents: tuple[int, ...], u: int, n: int
) -> RegGapResult:
    """The family <x_i^{a_i}> + <x_1^{a_1-u} x_2^{a_2-(u+n)}> whose
    regularity exceeds its v-number by exactly n."""
    if t < 2 or len(exponents) != t:
        raise VnumError("need t >= 2 pure-power exponents")
    if exponents[0] - u <= 0 or exponents[1] - (u + n) <= 0:
        raise VnumError("parameters violate a_1-u > 0 and a_2-(u+n) > 0")
    gens = [Monomial.variable(t, i + 1, exponents[i]) for i in range(t)]
    mixed = [0] * t
    mixed[0] = exponents[0] - u
    mixed[1] = exponents[1] - (u + n)
    gens.append(Monomial(tuple(mixed)))
    ideal = minimalize(gens)
    v = v_primary_matrix(ideal).value
    reg = regularity_zero_dim(ideal)
    expected_v = sum(exponents) - (u + n + t)
    expected_reg = sum(exponents) - (u + t)
    if v != expected_v or reg != expected_reg:
        raise VnumError(
            f"internal error: computed (v, reg) = ({v}, {reg}), "
            f"closed forms give ({expected_v}, {expected_reg})"
        )
    return RegGapResult(ideal, v, reg, reg - v)


def check_v_le_reg(ideal: MonomialIdeal) -> bool:
    if pure_power_exponents(ideal) is None:
        raise VnumError("m-primary ideal required")
    return v_primary_matrix(ideal).value <= regularity_zero_dim(ideal)
