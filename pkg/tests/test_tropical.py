import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import S, names, perturb, random_positive_vector
from oracles import tropical_positive
from reference_data import D13
from tropblade.bladecomplex import BladeArrangement, LVector, L_to_beta
from tropblade.cyclic import CyclicGround
from tropblade.errors import ArityError, PreconditionError, SizeError
from tropblade.separation import collection, flip_walk, flip_walk_states, w0
from tropblade.tropical import (
    OctahedronClass,
    PluckerVector,
    classify_octahedron,
    d_vector,
    extend_from_seed,
    first_violation,
    is_finest,
    is_positive_plucker,
    octahedra,
    verdicts,
    z_membership,
)


def vec(values, n, k):
    return PluckerVector(n, k, {S(t, n): v for t, v in values.items()})


def as_tuples(p):
    return {s.members: v for s, v in p.entries.items()}


def test_plucker_vector_must_be_total():
    with pytest.raises(SizeError):
        PluckerVector(4, 2, {S("13", 4): 1})
    with pytest.raises(SizeError):
        PluckerVector.zero(4, 2) + PluckerVector.zero(5, 2)


def test_positivity_examples():
    assert is_positive_plucker(d_vector(S("13", 4)))
    assert is_positive_plucker(PluckerVector.zero(4, 2))
    bump = PluckerVector.from_function(4, 2, lambda s: 1 if str(s) == "13" else 0)
    assert not is_positive_plucker(bump)
    assert first_violation(bump).cls is OctahedronClass.NOT_POSITIVE


def test_d_vector_table():
    p = d_vector(S("13", 4))
    assert {str(s): v for s, v in p.entries.items()} == D13
    with pytest.raises(PreconditionError):
        d_vector(S("13", 5, (2,)))


@pytest.mark.parametrize("n", range(4, 9))
def test_every_d_vector_is_positive(n):
    for k in range(2, min(4, n - 2) + 1):
        for J in CyclicGround(n).subsets(k):
            p = d_vector(J)
            assert p[J] == 0
            assert is_positive_plucker(p), J


def test_octahedron_classes():
    v = classify_octahedron(d_vector(S("13", 4)), (), 1, 2, 3, 4)
    assert v.cls is OctahedronClass.SPLIT_AD_BC and v.sums == (2, 2, 6)
    assert tuple(map(sorted, v.separating_pair)) == ([1, 4], [2, 3])
    w = classify_octahedron(d_vector(S("24", 4)), (), 1, 2, 3, 4)
    assert w.cls is OctahedronClass.SPLIT_AB_CD
    assert tuple(map(sorted, w.separating_pair)) == ([1, 2], [3, 4])
    z = classify_octahedron(PluckerVector.zero(4, 2), (), 1, 2, 3, 4)
    assert z.cls is OctahedronClass.UNSPLIT and z.separating_pair is None
    with pytest.raises(ArityError):
        classify_octahedron(PluckerVector.zero(5, 3), (), 1, 2, 3, 4)
    with pytest.raises(PreconditionError):
        classify_octahedron(PluckerVector.zero(4, 2), (), 2, 1, 3, 4)
    with pytest.raises(PreconditionError):
        classify_octahedron(PluckerVector.zero(6, 3), (1,), 1, 2, 3, 4)


def test_diagonal_sum_below_both_sides_is_not_positive():
    # s1 = 0 < s2 = s3 = 2
    p = vec({"12": 1, "34": 1, "14": 1, "23": 1, "13": 0, "24": 0}, 4, 2)
    assert classify_octahedron(p, (), 1, 2, 3, 4).cls is OctahedronClass.NOT_POSITIVE
    assert not is_positive_plucker(p)


def test_octahedron_count():
    from math import comb

    for n, k in [(4, 2), (6, 3), (8, 4)]:
        assert len(octahedra(n, k)) == comb(n, k - 2) * comb(n - k + 2, 4)


@settings(max_examples=40)
@given(st.sampled_from([(2, 5), (3, 6), (3, 7)]), st.integers(0, 10**6))
def test_positive_check_matches_oracle(kn, seed):
    k, n = kn
    rng = random.Random(seed)
    _, p = random_positive_vector(rng, n, k, walk=10)
    q = perturb(rng, p) if rng.random() < 0.5 else p
    assert is_positive_plucker(q) == tropical_positive(as_tuples(q), n, k)


@settings(max_examples=25)
@given(st.sampled_from([(2, 5), (3, 6), (3, 7)]), st.integers(0, 10**6))
def test_positive_vectors_never_classify_not_positive(kn, seed):
    k, n = kn
    _, p = random_positive_vector(random.Random(seed), n, k, walk=10)
    assert all(v.cls is not OctahedronClass.NOT_POSITIVE for v in verdicts(p))


def test_is_finest_examples():
    assert is_finest(d_vector(S("13", 4)))
    assert not is_finest(PluckerVector.zero(6, 3))
    W = w0(6, 3)
    total = PluckerVector.zero(6, 3)
    for J in W.nonfrozen:
        total = total + d_vector(J)
    assert names(W.nonfrozen) == {"124", "125", "134", "145"}
    assert is_finest(total)
    with pytest.raises(PreconditionError):
        is_finest(vec({"12": 0, "34": 0, "14": 0, "23": 0, "13": 1, "24": 0}, 4, 2))


@pytest.mark.parametrize("k,n", [(3, 6), (3, 7), (2, 6)])
def test_finest_split_never_uses_the_crossing_diagonal(k, n):
    for W in list(flip_walk_states(w0(n, k), 10, 4)):
        total = PluckerVector.zero(n, k)
        for J in W.nonfrozen:
            total = total + d_vector(J)
        for v in verdicts(total):
            a, b, c, d = v.quad
            assert v.separating_pair not in (None, (v.L | {a, c}, v.L | {b, d}))


def test_z_membership_examples():
    g = CyclicGround(4)
    c = LVector(g, 2, {S(t, 4): v for t, v in D13.items()})
    assert z_membership(L_to_beta(c))
    bad = z_membership(BladeArrangement.blade(S("13", 4)) + BladeArrangement.blade(S("24", 4)))
    assert not bad and bad.L == () and names(bad.pair) == {"13", "24"}
    assert z_membership(BladeArrangement.zero(g, 2))
    neg = z_membership(BladeArrangement.blade(S("13", 4), -1))
    assert not neg and "negative" in neg.reason
    with pytest.raises(PreconditionError):
        z_membership(BladeArrangement.zero(g.without(1), 2))


@pytest.mark.parametrize("k,n", [(2, 5), (3, 6), (3, 7), (4, 8)])
def test_extend_reproduces_d_vectors(k, n):
    rng = random.Random(n * 10 + k)
    for W in flip_walk_states(w0(n, k), 6, rng.randrange(1000)):
        for J in rng.sample(CyclicGround(n).subsets(k), 5):
            p = d_vector(J)
            assert extend_from_seed(W, {s: p[s] for s in W.sets}) == p


def test_extend_zero_seed():
    W = flip_walk(w0(7, 3), 12, 3)
    p = extend_from_seed(W, {s: 0 for s in W.sets})
    assert is_positive_plucker(p)
    assert all(p[s] == 0 for s in W.sets)


def test_extend_single_relation():
    W = w0(4, 2)
    seed = {S("12", 4): 5, S("23", 4): -1, S("34", 4): 2, S("14", 4): 0, S("13", 4): 3}
    p = extend_from_seed(W, seed)
    assert p[S("24", 4)] == min(5 + 2, 0 - 1) - 3


def test_extend_errors():
    with pytest.raises(PreconditionError):
        extend_from_seed(collection(["13"], 4), {S("13", 4): 0})
    W = w0(4, 2)
    with pytest.raises(PreconditionError):
        extend_from_seed(W, {S("13", 4): 0})


@settings(max_examples=30)
@given(st.sampled_from([(2, 6), (3, 6), (3, 7)]), st.integers(0, 10**6))
def test_any_seed_extends(kn, seed):
    # seeds on a maximal collection are free coordinates, so no seed is contradictory
    k, n = kn
    rng = random.Random(seed)
    W, p = random_positive_vector(rng, n, k, low=-50, high=50)
    assert is_positive_plucker(p)
    assert tropical_positive(as_tuples(p), n, k)


@settings(max_examples=30)
@given(st.sampled_from([(3, 6), (4, 7)]), st.integers(0, 10**6))
def test_positive_iff_in_Z(kn, seed):
    k, n = kn
    rng = random.Random(seed)
    _, p = random_positive_vector(rng, n, k)
    c = LVector(CyclicGround(n), k, dict(p.entries))
    assert is_positive_plucker(p) and z_membership(L_to_beta(c))
    q = perturb(rng, p)
    cq = LVector(CyclicGround(n), k, dict(q.entries))
    assert is_positive_plucker(q) == bool(z_membership(L_to_beta(cq)))
