"""The twelve acceptance criteria, each checked with exact equality.

A summary line per criterion is printed at the end of the pytest run.
"""

import random
from fractions import Fraction

import pytest

from helpers import S, arrangement, boundary_terms, names, perturb, random_positive_vector
from oracles import maximal_ws_collections
from reference_data import (
    BOUNDARIES_N6,
    D13,
    D13_COMBINATION,
    L_EXPANSIONS_N4,
    RAY_EXPANSIONS,
    W8,
    W8_BOUNDARY_8,
)
from tropblade.blades import distance
from tropblade.bladecomplex import BladeArrangement, LVector, L_to_beta, expand_L, frozen_sum
from tropblade.cones import Verdict, face_pairs, is_minimal_in_S, lin_equiv, ray_in_L_coords
from tropblade.cyclic import CyclicGround
from tropblade.plabic import boundary_pipeline, build_tiling, fiber_connected, plabic_boundary, structures_isomorphic
from tropblade.separation import (
    boundary_collection,
    collection,
    flip_walk,
    flip_walk_states,
    validate_collection,
    w0,
)
from tropblade.tropical import (
    OctahedronClass,
    PluckerVector,
    d_vector,
    is_finest,
    is_positive_plucker,
    verdicts,
    z_membership,
)


def L_vector(p):
    return LVector(CyclicGround(p.n), p.k, dict(p.entries))


@pytest.mark.criterion(1)
def test_distance_table():
    J = S("13", 4)
    got = {str(I): distance(J, I) for I in CyclicGround(4).subsets(2)}
    assert got == D13
    assert [got[t] for t in ("12", "34", "13", "14", "23", "24")] == [1, 1, 0, 3, 3, 2]


@pytest.mark.criterion(2)
def test_L_basis_expansions():
    for J, expected in L_EXPANSIONS_N4.items():
        assert expand_L(S(J, 4)) == arrangement(expected, 4)
    total = BladeArrangement.zero(CyclicGround(4), 2)
    for I in CyclicGround(4).subsets(2):
        total = total + expand_L(I) * distance(S("13", 4), I)
    assert total == arrangement(D13_COMBINATION, 4)


@pytest.mark.criterion(3)
def test_distance_identity_everywhere():
    for n in range(4, 9):
        for k in range(2, n - 1):
            g = CyclicGround(n)
            subs = g.subsets(k)
            expansions = {I: expand_L(I) for I in subs}
            F = frozen_sum(g, k)
            for J in subs:
                lhs = F - BladeArrangement.blade(J, n)
                for I in subs:
                    d = distance(J, I)
                    if d:
                        lhs = lhs + expansions[I] * d
                assert lhs.is_zero(), (n, k, J)


@pytest.mark.criterion(4)
def test_boundary_expansions():
    for J in ("124", "125", "134", "145", "135", "235", "136"):
        got = boundary_terms(BladeArrangement.blade(S(J, 6)))
        assert got == {key: 1 for key in BOUNDARIES_N6[J]}, J


@pytest.mark.criterion(5)
def test_cone_criterion():
    simplicial = is_minimal_in_S([S(t, 6) for t in ("124", "125", "134", "145")])
    assert simplicial.verdict is Verdict.MAXIMAL_SIMPLICIAL
    W = [S(t, 6) for t in ("135", "235", "145", "136")]
    rep = is_minimal_in_S(W)
    assert rep.verdict is Verdict.NOT_MINIMAL
    assert names(rep.inessential) == {"135"}
    for L in range(1, 7):
        assert set(face_pairs(W[:1], (L,))) <= set(face_pairs(W[1:], (L,)))


def _printed(J):
    return LVector(CyclicGround(6), 3, {S(t, 6): Fraction(v) for t, v in RAY_EXPANSIONS[J].items()})


@pytest.mark.criterion("6a")
def test_ray_coordinates_135():
    assert lin_equiv(_printed("135"), ray_in_L_coords(S("135", 6)))


@pytest.mark.criterion("6b")
@pytest.mark.xfail(strict=True, reason="printed generators for 235, 145, 136 differ from d_vector in 4 entries")
def test_ray_coordinates_other_three():
    for J in ("235", "145", "136"):
        assert lin_equiv(_printed(J), ray_in_L_coords(S(J, 6))), J


@pytest.mark.criterion(7)
def test_boundary_of_maximal_collections():
    for k, n in [(3, 6), (3, 7), (3, 8), (4, 8)]:
        samples = list(flip_walk_states(w0(n, k), 200, 2024 + n))
        assert len(samples) >= 200
        for W in samples:
            for j in range(1, n + 1):
                B = boundary_collection(W, j)
                validate_collection(B.sets, B.ground, k - 1)
                assert len(B) == (k - 1) * (n - k) + 1


@pytest.mark.criterion(8)
def test_plabic_pipeline():
    W = collection(W8, 8)
    Q = plabic_boundary(build_tiling(W), 8)
    assert names(Q.faces) == W8_BOUNDARY_8
    for k, n in [(3, 6), (3, 7), (4, 7)]:
        got, want = boundary_pipeline(w0(n, k), n)
        assert structures_isomorphic(got, want)
    assert fiber_connected(W, 8, S("67", 8, (8,)))
    assert fiber_connected(W, 8, S("34", 8, (8,)))


@pytest.mark.criterion(9)
def test_every_d_vector_positive():
    for n in range(4, 9):
        for k in range(2, min(4, n - 2) + 1):
            for J in CyclicGround(n).subsets(k):
                assert is_positive_plucker(d_vector(J)), J


@pytest.mark.criterion(10)
def test_positive_iff_in_Z():
    rng = random.Random(10)
    for k, n in [(3, 6), (4, 7)]:
        negatives = 0
        for _ in range(100):
            _, p = random_positive_vector(rng, n, k)
            assert is_positive_plucker(p)
            assert z_membership(L_to_beta(L_vector(p)))
            q = perturb(rng, p)
            pos, member = is_positive_plucker(q), bool(z_membership(L_to_beta(L_vector(q))))
            assert pos == member
            negatives += not pos
        assert negatives >= 50


@pytest.mark.criterion(11)
def test_finest_subdivisions():
    for k, n in [(3, 6), (3, 7), (4, 8), (2, 6)]:
        for W in flip_walk_states(w0(n, k), 30, 11):
            p = PluckerVector.zero(n, k)
            for J in W.nonfrozen:
                p = p + d_vector(J)
            assert is_finest(p)
        assert all(v.cls is OctahedronClass.UNSPLIT for v in verdicts(PluckerVector.zero(n, k)))


@pytest.mark.criterion(12)
def test_two_row_sanity_and_purity():
    triangulations = {frozenset(W.nonfrozen) for W in flip_walk_states(w0(6, 2), 3000, 11)}
    assert len(triangulations) == 14
    for T in triangulations:
        assert is_minimal_in_S(T).verdict is Verdict.MAXIMAL_SIMPLICIAL
    for k, n in [(2, 4), (2, 5), (3, 5)]:
        sizes = {len(C) for C in maximal_ws_collections(n, k)}
        assert sizes == {k * (n - k) + 1}
