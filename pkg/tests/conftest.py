import random

from vnumber import Monomial, minimalize


def random_m_primary_ideal(rng: random.Random, t=None, exp_max=6, max_gens=8):
    """Random m-primary ideal: one pure power per variable plus mixed extras."""
    if t is None:
        t = rng.randint(1, 3)
    gens = [Monomial.variable(t, i + 1, rng.randint(1, exp_max)) for i in range(t)]
    for _ in range(rng.randint(0, max_gens - t)):
        exps = tuple(rng.randint(0, exp_max) for _ in range(t))
        if sum(exps) > 0:
            gens.append(Monomial(exps))
    return minimalize(gens)


def random_monomial_ideal(rng: random.Random, t=None, exp_max=4, max_gens=5):
    if t is None:
        t = rng.randint(1, 3)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = tuple(rng.randint(0, exp_max) for _ in range(t))
        if sum(exps) > 0:
            gens.append(exps)
    if not gens:
        gens.append(tuple([1] + [0] * (t - 1)))
    return minimalize(Monomial(e) for e in gens)


def random_monomial(rng: random.Random, t, exp_max=4):
    return Monomial(tuple(rng.randint(0, exp_max) for _ in range(t)))
