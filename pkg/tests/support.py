"""Random inputs shared by the property tests."""

import random

from hypothesis import strategies as st

from lieinv.algebra import change_basis, mat_inverse
from lieinv.catalog import ENTRIES
from lieinv.errors import SingularMatrix
from lieinv.scalar import Scalar

SEED = 20240611


def small_scalar(rng, bound=3, gaussian=True):
    re = rng.randint(-bound, bound)
    im = rng.randint(-1, 1) if gaussian and rng.random() < 0.3 else 0
    return Scalar(re, im)


def random_invertible(n, rng, bound=2):
    while True:
        g = [[small_scalar(rng, bound) for _ in range(n)] for _ in range(n)]
        try:
            mat_inverse(g)
        except (SingularMatrix, ZeroDivisionError):
            continue
        return g


def random_unimodular(n, rng, steps=None):
    """Dense invertible matrix over Z[i] with unit determinant."""
    g = [[Scalar(int(i == j)) for j in range(n)] for i in range(n)]
    if n == 1:
        return [[rng.choice((Scalar(1), Scalar(-1), Scalar(0, 1)))]]
    for _ in range(steps or 3 * n):
        i, j = rng.sample(range(n), 2)
        f = Scalar(rng.choice((-2, -1, 1, 2)), rng.choice((0, 0, 0, 1)))
        g[i] = [a + f * b for a, b in zip(g[i], g[j])]
    k = rng.randrange(n)
    g[k] = [x * Scalar(0, 1) for x in g[k]]
    return g


def random_basis_changes(sc, count, seed=SEED, unimodular=True):
    rng = random.Random(seed)
    for _ in range(count):
        g = random_unimodular(sc.dim, rng) if unimodular else random_invertible(sc.dim, rng)
        yield change_basis(sc, g)


def random_points(count, seed=SEED):
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        num = rng.randint(-12, 12)
        den = rng.randint(1, 6)
        p = Scalar(num) / den
        if rng.random() < 0.2:
            p = p + Scalar(0, rng.choice((-1, 1)))
        if p not in pts:
            pts.append(p)
    return pts


def catalog_instances(kind=None, max_dim=4):
    """Every catalog entry of small dimension, families at their sample parameters."""
    out = []
    for e in ENTRIES:
        if e.dim > max_dim or (kind and e.kind != kind):
            continue
        if e.params and not e.sample:
            params = {"a": 2} if e.params == ("a",) else None
            if params is None:
                continue
        else:
            params = e.sample or None
        out.append((e.label, e.instantiate(params)))
    return out


scalars = st.builds(lambda a, b, c, d: Scalar(a) / c + Scalar(0, b) / d,
                    st.integers(-50, 50), st.integers(-50, 50),
                    st.integers(1, 20), st.integers(1, 20))
