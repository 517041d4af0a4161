from tropblade.cyclic import CyclicGround, KSubset, parse_labels
from hypothesis import strategies as st


def S(text, n, removed=()):
    return KSubset.of(parse_labels(text), n, removed)


def names(sets):
    return {str(s) for s in sets}


@st.composite
def ksubsets(draw, n_min=4, n_max=9):
    n = draw(st.integers(n_min, n_max))
    k = draw(st.integers(1, n - 1))
    members = draw(st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True))
    return KSubset.of(members, CyclicGround(n))


@st.composite
def same_size_pair(draw, n_min=4, n_max=9):
    n = draw(st.integers(n_min, n_max))
    k = draw(st.integers(1, n - 1))
    pick = st.lists(st.integers(1, n), min_size=k, max_size=k, unique=True)
    g = CyclicGround(n)
    return KSubset.of(draw(pick), g), KSubset.of(draw(pick), g)


def arrangement(terms, n, removed=()):
    from tropblade.bladecomplex import BladeArrangement

    g = CyclicGround.of(n, removed)
    size = len(parse_labels(next(iter(terms))))
    return BladeArrangement(g, size, {S(t, n, removed): w for t, w in terms.items()})


def boundary_terms(arr):
    """Reduced boundary of a top-level arrangement as {(set, j): weight}."""
    from tropblade.bladecomplex import reduce_frozen, total_boundary

    out = {}
    for level, image in total_boundary(arr).items():
        (j,) = level
        for s, w in reduce_frozen(image).terms.items():
            out[(str(s), j)] = w
    return out


def random_positive_vector(rng, n, k, walk=30, low=-6, high=6):
    """Random maximal collection by a flip walk, seeded uniformly, then extended."""
    from tropblade.separation import flip_walk, w0
    from tropblade.tropical import extend_from_seed

    W = flip_walk(w0(n, k), walk, rng.randrange(10**9))
    seed = {s: rng.randint(low, high) for s in sorted(W.sets, key=lambda s: s.mask)}
    return W, extend_from_seed(W, seed)


def perturb(rng, p):
    """Shift one random entry by a nonzero amount."""
    from fractions import Fraction

    from tropblade.tropical import PluckerVector

    items = p.sorted_items()
    target, _ = rng.choice(items)
    bump = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
    return PluckerVector(p.n, p.k, {s: v + (bump if s == target else 0) for s, v in items})
