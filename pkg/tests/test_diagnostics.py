"""Tests for discrete frame diagnostics and the sign-cancellation frame."""

import numpy as np
import pytest

from framelab import (
    CoordinateVector,
    DiscreteFrame,
    SpaceTag,
    boundedly_complete_probe,
    counterexample_frame,
    counterexample_report,
    estimate_tail_dual_norm,
    project_frame,
    suppression_ratio_scan,
    tail_dual_norm,
    tail_functional,
    tail_report,
    unit_vector_frame,
)
from framelab.diagnostics import _restricted_dual_functional


def test_space_tag_validation():
    with pytest.raises(ValueError):
        SpaceTag("lp")
    with pytest.raises(ValueError):
        SpaceTag("c0", p=2.0)
    with pytest.raises(ValueError):
        SpaceTag("linf")
    assert SpaceTag.lp(2.0).label() == "lp(2.0)"
    assert SpaceTag.c0().label() == "c0"


def test_space_tag_norms():
    v = CoordinateVector({0: 3.0, 1: -4.0})
    assert SpaceTag.lp(2.0).norm(v) == 5.0
    assert SpaceTag.c0().norm(v) == 4.0
    assert SpaceTag.l1().norm(v) == 7.0
    # duals: lq for lp, l1 for c0, sup for l1
    assert SpaceTag.lp(2.0).dual_norm(v) == 5.0
    assert SpaceTag.c0().dual_norm(v) == 7.0
    assert SpaceTag.l1().dual_norm(v) == 4.0


def test_unit_frame_reconstructs_exactly():
    frame = unit_vector_frame(SpaceTag.lp(2.0), range(1, 9))
    x = CoordinateVector({1: 2.0, 5: -3.5})
    assert frame.reconstruct(x) == x
    assert frame.max_unit_reconstruction_error(range(1, 9)) == 0.0


def test_reconstruct_positions_index_pairs_not_coordinates():
    frame = unit_vector_frame(SpaceTag.lp(2.0), range(1, 5))
    x = CoordinateVector({1: 1.0, 2: 1.0, 3: 1.0, 4: 1.0})
    # position j holds the pair for coordinate j+1
    assert frame.reconstruct(x, [0, 1]) == CoordinateVector({1: 1.0, 2: 1.0})


def test_tail_functional_of_unit_frame_is_restriction():
    frame = unit_vector_frame(SpaceTag.lp(2.0), range(1, 5))
    f = CoordinateVector({1: 1.0, 2: 2.0, 3: 3.0, 4: 4.0})
    tail = tail_functional(frame, f, positions={0, 1})
    assert tail == CoordinateVector({3: 3.0, 4: 4.0})


def test_tail_dual_norm_integer_case():
    # tail past the first two pairs keeps coordinates 3 and 4 with a 3-4-5 norm
    frame = unit_vector_frame(SpaceTag.lp(2.0), range(1, 5))
    f = CoordinateVector({1: 7.0, 2: -2.0, 3: 3.0, 4: 4.0})
    assert tail_dual_norm(frame, f, {0, 1}) == 5.0


def test_tail_vanishes_past_support():
    frame = unit_vector_frame(SpaceTag.lp(1.5), range(1, 9))
    f = CoordinateVector({1: 1.0, 2: -2.0})
    assert tail_dual_norm(frame, f, {0, 1}) == 0.0


def test_l1_tail_of_all_ones_never_decays():
    frame = unit_vector_frame(SpaceTag.l1(), range(1, 9))
    f = CoordinateVector({n: 1.0 for n in range(1, 9)})
    # dual of l1 carries the sup norm, so every nonempty tail has norm one
    for k in range(8):
        assert tail_dual_norm(frame, f, set(range(k))) == 1.0


def test_tail_monotone_under_growing_positions():
    rng = np.random.default_rng(27)
    frame = unit_vector_frame(SpaceTag.lp(2.5), range(1, 11))
    f = CoordinateVector({n: float(v) for n, v in
                          zip(range(1, 11), rng.standard_normal(10))})
    norms = [tail_dual_norm(frame, f, set(range(k))) for k in range(11)]
    for a, b in zip(norms, norms[1:]):
        assert b <= a + 1e-12
    assert norms[-1] == 0.0


def test_estimate_attains_exact_norm():
    frame_coords = range(1, 7)
    f = CoordinateVector({1: 1.5, 3: -2.0, 4: 0.5, 6: 3.0})
    for space in (SpaceTag.lp(2.0), SpaceTag.lp(3.0), SpaceTag.c0(),
                  SpaceTag.l1()):
        frame = unit_vector_frame(space, frame_coords)
        exact = tail_dual_norm(frame, f, {0, 1})
        est = estimate_tail_dual_norm(frame, f, {0, 1}, trials=200, seed=0)
        assert est == pytest.approx(exact, rel=1e-12)
        rep = tail_report(frame, f, {0, 1}, trials=200)
        assert rep.estimate <= rep.tail_dual_norm * (1.0 + 1e-12)
        assert rep.positions == (0, 1)


def test_project_frame_drops_coordinates():
    frame = unit_vector_frame(SpaceTag.lp(2.0), range(1, 5))
    proj = project_frame(frame, {1, 2})
    assert proj.reconstruct(CoordinateVector.unit(1)) == CoordinateVector.unit(1)
    assert proj.reconstruct(CoordinateVector.unit(3)).is_zero()
    assert proj.max_unit_reconstruction_error([1, 2]) == 0.0


def test_completeness_probe_flags_flat_increments():
    K = 10
    frame = counterexample_frame(K)
    thirds = [j for j in range(len(frame.pairs)) if (j + 1) % 3 == 0]
    nesting = [thirds[:k] for k in range(K + 1)]
    report = boundedly_complete_probe(frame, CoordinateVector.unit(1), nesting)
    # each step adds one fresh block vector of sup norm one
    assert report.increments == tuple([1.0] * K)
    assert report.non_cauchy


def test_completeness_probe_decaying_case():
    frame = unit_vector_frame(SpaceTag.lp(2.0), range(1, 6))
    xss = CoordinateVector({1: 1.0, 2: 0.5})
    nesting = [list(range(k)) for k in range(6)]
    report = boundedly_complete_probe(frame, xss, nesting)
    assert report.increments[-1] == 0.0
    assert not report.non_cauchy


def test_suppression_scan_unit_frames():
    for space in (SpaceTag.lp(2.0), SpaceTag.c0(), SpaceTag.l1()):
        frame = unit_vector_frame(space, range(1, 9))
        # restricted reconstruction is a coordinate projection, never expansive
        assert suppression_ratio_scan(frame, trials=100) <= 1.0 + 1e-12


def test_suppression_bound_of_triple_frame():
    frame = counterexample_frame(6)
    # coordinate j of a restricted sum is x_j*a + x_1*b with a in {0,1} and
    # b in {-1,0,1}, so the ratio can never exceed 2 ...
    assert suppression_ratio_scan(frame, trials=300) <= 2.0 + 1e-12
    # ... and 2 is attained: keep the two positive e_1* pairs of block one
    doubled = frame.reconstruct(CoordinateVector.unit(1), [0, 2])
    assert doubled == CoordinateVector({1: 2})


def test_counterexample_frame_structure():
    frame = counterexample_frame(3)
    assert len(frame) == 9
    assert frame.space == SpaceTag.c0()
    e2 = CoordinateVector.unit(2)
    assert frame.pairs[3] == (e2, CoordinateVector.unit(2))
    assert frame.pairs[4] == (e2, CoordinateVector.unit(1, -1))
    assert frame.pairs[5] == (e2, CoordinateVector.unit(1))
    with pytest.raises(ValueError):
        counterexample_frame(0)


def test_counterexample_full_reconstruction_is_exact_integers():
    frame = counterexample_frame(12)
    x = CoordinateVector({1: 5, 3: -7, 12: 2})
    y = frame.reconstruct(x)
    assert y == x
    assert all(isinstance(v, int) for _, v in y.items())


def test_counterexample_restricted_sum_is_all_ones():
    K = 40
    frame = counterexample_frame(K)
    thirds = [j for j in range(len(frame.pairs)) if (j + 1) % 3 == 0]
    candidate = frame.reconstruct(CoordinateVector.unit(1), thirds)
    assert len(candidate) == K
    assert all(candidate[j] == 1 for j in range(1, K + 1))


def test_restricted_dual_functional_matches_direct_sum():
    rng = np.random.default_rng(28)
    K = 15
    frame = counterexample_frame(K)
    for _ in range(25):
        f = CoordinateVector({int(n): int(v) for n, v in zip(
            rng.integers(1, K + 1, size=4), rng.integers(-9, 10, size=4))})
        subset = [int(n) for n in range(1, 3 * K + 1) if rng.random() < 0.4]
        series = _restricted_dual_functional(f, subset, K)
        direct = {}
        for n in subset:
            vec, fun = frame.pairs[n - 1]
            w = f.pair(vec)
            for idx, v in fun.items():
                direct[idx] = direct.get(idx, 0) + w * v
        assert series == CoordinateVector(direct)
    with pytest.raises(ValueError):
        _restricted_dual_functional(CoordinateVector.unit(1), [3 * K + 1], K)


def test_counterexample_report_all_green():
    report = counterexample_report(50)
    assert report.ok
    assert report.K == 50
    assert report.full_reconstruction_exact
    assert report.restricted_coordinates_all_one
    assert report.restricted_escapes_c0
    assert report.dual_series_matches_direct
    assert report.dual_action_matches_sum
