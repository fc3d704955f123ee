"""Random and exhaustive generators shared by the test modules."""

import itertools
import random

from tamebrauer.brauer import TameClass
from tamebrauer.lattice import Vector, canonicalize
from tamebrauer.symbols import FieldModel


def skew_from_upper(m, upper):
    W = [[0] * m for _ in range(m)]
    for (i, j), x in zip(itertools.combinations(range(m), 2), upper):
        W[i][j], W[j][i] = x, -x
    return W


def all_forms(m, N):
    """Every skew form on (Z/N)^m, entries in [0, N)."""
    k = m * (m - 1) // 2
    for upper in itertools.product(range(N), repeat=k):
        yield skew_from_upper(m, upper)


def random_form(rng, m, N):
    return skew_from_upper(m, [rng.randrange(N) for _ in range(m * (m - 1) // 2)])


def random_field(rng, m, twisted=False):
    """Z^m, or (if twisted) a random full-rank lattice containing Z^m."""
    if not twisted:
        return FieldModel.standard(m)
    gens = [Vector.unit(m, i) for i in range(m)]
    gens += [Vector(tuple(rng.randint(-3, 3) for _ in range(m)), rng.choice([1, 2, 3, 5]))
             for _ in range(rng.randint(0, 2))]
    return FieldModel(0, canonicalize(gens, m))


def random_class(rng, m, N, twisted=False):
    return TameClass.make(random_field(rng, m, twisted), N, random_form(rng, m, N))


def random_unimodular(rng, m, steps=12):
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    for _ in range(steps):
        i, j = rng.sample(range(m), 2) if m > 1 else (0, 0)
        if i == j:
            U[i] = [-x for x in U[i]]
            continue
        c = rng.randint(-3, 3)
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        if rng.random() < 0.3:
            U[i], U[j] = U[j], U[i]
    return U


def congruent(U, W):
    """U W U^T."""
    m = len(W)
    return [[sum(U[a][i] * W[i][j] * U[b][j] for i in range(m) for j in range(m))
             for b in range(m)] for a in range(m)]
