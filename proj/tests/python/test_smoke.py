"""Python binding smoke tests: the main operations round-trip through numpy."""

import math

import numpy as np
import pytest

try:
    import _curvkit as ck
except ImportError:  # installed-package layout
    import curvkit as ck


def test_version_and_registry():
    assert ck.__version__
    names = ck.model_names()
    assert set(names) == {"flat", "hopf", "fubini_study", "u_invariant", "iwasawa"}


def test_hopf_metric_and_closed_form():
    hopf = ck.hopf(2)
    g = hopf.evaluate(np.array([2.0 + 0j, 0.0 + 0j]))
    assert np.allclose(g, np.eye(2))

    t = ck.chern_curvature(hopf, np.array([2.0 + 0j, 0.0 + 0j]))
    # Paper-index R_{2 2bar 1 1bar} = 1/4.
    assert abs(t.component(1, 1, 0, 0) - 0.25) < 1e-12
    assert abs(t.component(1, 1, 0, 0) - ck.hopf_curvature_closed_form(
        np.array([2.0 + 0j, 0.0 + 0j]), 1, 1, 0, 0)) < 1e-12

    ok, violation = ck.kahler_like_check(t, 1e-7)
    assert not ok
    assert violation > 1e-2


def test_fubini_study_constants():
    fs = ck.fubini_study(2)
    p = np.array([0.4 + 0.2j, -0.1 + 0.7j])
    t = ck.chern_curvature(fs, p)
    x = np.array([0.3 - 1.0j, 0.8 + 0.1j])
    assert abs(ck.hsc(t, x) - 2.0) < 1e-6
    assert abs(ck.scalar_curvature(t) - 6.0) < 1e-6
    ric = ck.ricci(t, 1)
    assert np.allclose(ric, 3.0 * t.g, atol=1e-6)
    assert abs(ck.sphere_average_ricci(t) - 3.0) < 1e-6
    assert abs(ck.sphere_average_hsc(t) - 2.0) < 1e-6


def test_weighted_and_minimization():
    fs = ck.fubini_study(2)
    t = ck.chern_curvature(fs, np.array([0.5 + 0j, 0.25 + 0j]))
    x = np.array([1.0 + 0j, 1.0 + 1.0j])
    assert abs(ck.weighted_orth_ricci(t, 1.0, -1.0, x, "kahler") - 1.0) < 1e-6
    res = ck.min_over_directions(t, 1.0, -1.0, "kahler")
    assert res.converged
    assert abs(res.min_value - 1.0) < 1e-6
    assert abs(np.vdot(res.argmin, np.asarray(t.g) @ res.argmin).real) > 0


def test_custom_profile_and_abc():
    a, b, c = ck.fs_abc(1.5)
    assert abs(a - 2.0) < 1e-9
    assert abs(b - 1.0) < 1e-9
    assert abs(c - 2.0) < 1e-9

    # Custom radial profile via a python callable.
    field = ck.u_invariant(lambda r: 1.0 / (1.0 + r), 2, name="fs_py")
    t = ck.chern_curvature(field, np.array([1.0 + 0j, 0.0 + 0j]))
    assert abs(ck.scalar_curvature(t) - 6.0) < 1e-4


def test_conditions_and_diameter():
    assert ck.projectivity_condition(1.0, -1.0).satisfied
    assert not ck.projectivity_condition(1.0, -1.5).satisfied
    assert ck.hodge_vanishing_condition(1.0, -1.0, 2).satisfied
    assert ck.balanced_vanishing_condition(1.0, -1.0, 2).satisfied
    assert abs(ck.diameter_bound(1.0, -0.5, 2, 1.0) - math.pi * math.sqrt(2.5)) < 1e-10
    with pytest.raises(ck.InvalidRegime):
        ck.diameter_bound(1.0, -0.5, 2, -1.0)


def test_cheung_criterion_space_forms():
    neg = ck.constant_hsc_tensor(np.eye(2, dtype=complex), -2.0)
    verdict = ck.cheung_criterion(neg, -3.0)
    assert verdict.part1 and verdict.part2 and verdict.conclusion

    pos = ck.constant_hsc_tensor(np.eye(2, dtype=complex), 2.0)
    assert not ck.cheung_criterion(pos, 3.0).conclusion


def test_cone_scan_classifications():
    iwa = ck.iwasawa()
    pts = [np.array([0.3 + 0.1j, -0.2 + 0.5j, 1.0 + 0j])]
    cells = ck.cone_scan(iwa, pts, [0.5, 1.0], [-1.0, -0.25], kind=1)
    assert len(cells) == 4
    assert all(cell["classification"] == "degenerate" for cell in cells)


def test_average_identity_audit():
    fs = ck.fubini_study(2)
    t = ck.chern_curvature(fs, np.array([0.2 + 0.1j, 0.3 - 0.4j]))
    rep = ck.average_identity_audit(t, 1.0, -1.0)
    assert rep["closes"] == "twice_chern"
    assert abs(rep["lhs"] - 1.0) < 1e-6
