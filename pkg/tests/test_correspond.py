"""Algebraic maps, invariance, correspondence graphs, fibers, splitting."""

import random
from fractions import Fraction

import pytest

from segrekit.catalog import load_manifold, sample_points
from segrekit.correspond import (AlgebraicMap, CorrespondenceError,
                                 ExcludedLocusError, build_correspondence,
                                 compose, fiber, max_rank_check,
                                 power_correspondence, splits_at,
                                 verify_invariance)
from segrekit.gaussian import GaussianRational as QI
from segrekit.ideal import member
from segrekit.manifold import CRManifold

SPHERE = load_manifold("sphere_C2.mfd")
POWER = load_manifold("power_r2_n2.mfd")
HQ2 = load_manifold("hyperquadric_k1_n2.mfd")

SQUARE_SRC = """
vars z1 z2
component: z1^2
component: z2^2
"""

ROT_SRC = """
vars z1 z2
component: 3/5*z1 + 4/5*z2
component: -4/5*z1 + 3/5*z2
"""


def pt(*vals):
    return tuple(QI.from_value(v) for v in vals)


def test_map_apply_and_jacobian():
    f = AlgebraicMap.from_text(SQUARE_SRC, POWER)
    assert f.apply(pt(2, 3)) == pt(4, 9)
    J = f.jacobian_at(pt(2, 3))
    assert J[0][0] == QI.from_value(4) and J[1][1] == QI.from_value(6)
    assert J[0][1].is_zero()


def test_max_rank():
    f = AlgebraicMap.from_text(SQUARE_SRC, POWER)
    rep = max_rank_check(f, pt(1, 1))
    assert rep.full_rank
    rep0 = max_rank_check(f, pt(0, 0))
    assert not rep0.full_rank


def test_invariance_rotation():
    f = AlgebraicMap.from_text(ROT_SRC, SPHERE)
    pts = sample_points("sphere_C2", 5, seed=1)
    rep = verify_invariance(SPHERE, SPHERE, f, pts, per_point=8, seed=1)
    assert rep.ok and rep.checked >= 40


def test_invariance_detects_non_cr_map():
    bad = AlgebraicMap.from_text("""
    vars z1 z2
    component: z1 + z2
    component: z1 - z2
    """, SPHERE)
    pts = sample_points("sphere_C2", 3, seed=2)
    rep = verify_invariance(SPHERE, SPHERE, bad, pts, per_point=8, seed=2)
    assert not rep.ok and rep.failures


def test_power_graph_generators():
    f = AlgebraicMap.from_text(SQUARE_SRC, POWER)
    C = build_correspondence(POWER, HQ2, f)
    gens = sorted(str(g) for g in C.graph.generators)
    assert gens == ["wb_z1^2-wpb_z1", "wb_z2^2-wpb_z2"]


def test_forward_and_reverse_fibers():
    f = AlgebraicMap.from_text(SQUARE_SRC, POWER)
    C = build_correspondence(POWER, HQ2, f)
    fwd = fiber(C, pt(1, 1))
    assert fwd.degree == 1
    rev = fiber(C, pt(1, 4), reverse=True)
    assert rev.degree == 4
    pts = sorted((str(z[0]), str(z[1])) for z, m in rev.solutions)
    assert pts == sorted([("1", "2"), ("-1", "2"), ("1", "-2"), ("-1", "-2")])
    assert all(m == 1 for _, m in rev.solutions)


def test_excluded_locus_raises():
    f = AlgebraicMap.from_text(SQUARE_SRC, POWER)
    C = build_correspondence(POWER, HQ2, f)
    with pytest.raises(ExcludedLocusError):
        fiber(C, pt(0, 1))


def test_relation_correspondence_valency():
    C = power_correspondence(HQ2, POWER, 1, 2)
    res = fiber(C, pt(1, 4))
    assert res.degree == 4


def test_splits_true_and_false():
    f = AlgebraicMap.from_text(SQUARE_SRC, POWER)
    C = build_correspondence(POWER, HQ2, f)
    assert splits_at(C, pt(1, 1))
    C2 = power_correspondence(HQ2, POWER, 1, 2)
    # w = (0, 1): the square root branches, the fiber has a double point
    assert not splits_at(C2, pt(0, 1))


def test_compose_rotations():
    rot = AlgebraicMap.from_text(ROT_SRC, SPHERE)
    C = build_correspondence(SPHERE, SPHERE, rot)
    CC = compose(C, C)
    # rot o rot = rotation by the doubled angle: (-7/25, 24/25; -24/25, -7/25)
    rot2 = AlgebraicMap.from_text("""
    vars z1 z2
    component: -7/25*z1 + 24/25*z2
    component: -24/25*z1 - 7/25*z2
    """, SPHERE)
    D = build_correspondence(SPHERE, SPHERE, rot2)
    assert CC.graph == D.graph


def test_compose_with_identity():
    f = AlgebraicMap.from_text(SQUARE_SRC, POWER)
    C = build_correspondence(POWER, HQ2, f)
    idp = build_correspondence(POWER, POWER, AlgebraicMap.identity(POWER))
    left = compose(idp, C)
    assert left.graph == C.graph


def test_compose_rejects_mismatched_middle():
    f = AlgebraicMap.from_text(SQUARE_SRC, POWER)
    C = build_correspondence(POWER, HQ2, f)
    with pytest.raises(CorrespondenceError):
        compose(C, C)


def test_fiber_points_satisfy_graph():
    """Every computed fiber solution, paired with the input, must satisfy
    the graph ideal exactly."""
    f = AlgebraicMap.from_text(SQUARE_SRC, POWER)
    C = build_correspondence(POWER, HQ2, f)
    w = pt(2, 3)
    res = fiber(C, w)
    for wp, _ in res.solutions:
        binding = {}
        for n, v in zip(C.wb_names, w):
            binding[n] = v.conjugate()
        for n, v in zip(C.wpb_names, wp):
            binding[n] = v.conjugate()
        for g in C.graph.generators:
            assert g.eval(binding).is_zero()
