import math

import mpmath as mp
import pytest
from hypothesis import given, settings, strategies as st

from heinzlab import scalar
from heinzlab.errors import ParameterError
from heinzlab.scalar import DERIVED_CORRECTED, PAPER_STATED

pos = st.floats(1e-2, 1e2)
unit = st.floats(0.0, 1.0)


# --- Kantorovich constant and means -------------------------------------------

def test_kantorovich_examples():
    assert scalar.kantorovich(1.0) == 1.0
    assert scalar.kantorovich(4.0) == 1.5625
    assert scalar.kantorovich(7.0) == pytest.approx(scalar.kantorovich(1 / 7.0), rel=1e-15)
    for bad in (0.0, -1.0, math.inf):
        with pytest.raises(ParameterError):
            scalar.kantorovich(bad)


def test_means_at_equal_arguments():
    for kappa in (0.0, 0.3, 1.0):
        assert scalar.scalar_means(5.0, 5.0, kappa) == pytest.approx((5.0, 5.0, 5.0, 5.0), rel=1e-15)


def test_heinz_examples():
    assert scalar.heinz_mean(4.0, 9.0, 0.0) == 6.5
    assert scalar.heinz_mean(1.0, 16.0, 0.25) == pytest.approx(5.0, rel=1e-15)


def test_scalar_means_validation():
    with pytest.raises(ParameterError):
        scalar.scalar_means(-1.0, 1.0, 0.5)
    with pytest.raises(ParameterError):
        scalar.scalar_means(1.0, 1.0, 1.5)


@settings(max_examples=300)
@given(pos, pos, unit)
def test_heinz_symmetry_is_exact(rho, sigma, kappa):
    assert scalar.heinz_mean(rho, sigma, kappa) == scalar.heinz_mean(rho, sigma, 1.0 - kappa)


@settings(max_examples=300)
@given(pos, pos, st.sampled_from([k / 10 for k in range(11)]))
def test_heinz_interpolates_geometric_and_arithmetic(rho, sigma, kappa):
    assert scalar.check_heinz_interpolation(rho, sigma, kappa).passed


@settings(max_examples=300)
@given(pos, pos, st.floats(0.0, 10.0), st.floats(0.0, 10.0))
def test_heron_monotone(rho, sigma, a, b):
    lo, hi = sorted((a, b))
    assert scalar.check_heron_monotone(rho, sigma, lo, hi).passed


# --- Young family ---------------------------------------------------------------

def test_young_refined_examples():
    for kappa in (0.0, 0.4):
        assert scalar.check_young_refined(3.0, 3.0, kappa).slack == 0.0
    assert scalar.check_young_refined(2.0, 7.0, 0.0, m=2, r_exp=1.5).slack == pytest.approx(0.0, abs=1e-12)
    res = scalar.check_young_refined(1.0, 4.0, 0.5)
    assert (res.lhs, res.rhs, res.slack) == (2.5, 2.5, 0.0)


def test_man1_with_p_two_is_young_refined_at_half():
    for rho, sigma, m, r in ((1.0, 4.0, 1, 1.0), (0.3, 7.0, 3, 2.2), (50.0, 0.02, 2, 1.0)):
        a = scalar.check_man1(rho, sigma, 2.0, 2.0, m, r)
        b = scalar.check_young_refined(rho, sigma, 0.5, m, r)
        assert a.lhs == pytest.approx(b.lhs, rel=1e-15)
        assert a.rhs == pytest.approx(b.rhs, rel=1e-15)


def test_man1_against_extended_precision():
    with mp.workdps(50):
        p, q, rho, sigma = mp.mpf(3), mp.mpf(3) / 2, mp.mpf(1), mp.mpf(8)
        lhs = rho ** (1 / p) * sigma ** (1 / q) + (1 / p) * (mp.sqrt(rho) - mp.sqrt(sigma)) ** 2
        rhs = rho / p + sigma / q
    res = scalar.check_man1(1.0, 8.0, 3.0, 1.5)
    assert res.passed
    assert res.lhs == pytest.approx(float(lhs), rel=1e-14)
    assert res.rhs == pytest.approx(float(rhs), rel=1e-14)


def test_man1_rejects_non_conjugate_exponents():
    with pytest.raises(ParameterError):
        scalar.check_man1(1.0, 2.0, 3.0, 2.0)
    with pytest.raises(ParameterError):
        scalar.check_man1(1.0, 2.0, 2.0, 2.0, m=0)
    with pytest.raises(ParameterError):
        scalar.check_man1(1.0, 2.0, 2.0, 2.0, r_exp=0.5)


# --- Kantorovich-type Young inequalities ----------------------------------------

def _kantorovich_oracle(rho, sigma, kappa, direction):
    with mp.workdps(50):
        rho, sigma, kappa = mp.mpf(rho), mp.mpf(sigma), mp.mpf(kappa)
        K = lambda t: (t + 1) ** 2 / (4 * t)
        h = sigma / rho
        r, R = min(kappa, 1 - kappa), max(kappa, 1 - kappa)
        rp, Rp = min(2 * r, 1 - 2 * r), max(2 * r, 1 - 2 * r)
        g = rho**kappa * sigma ** (1 - kappa)
        a = kappa * rho + (1 - kappa) * sigma
        sq = (mp.sqrt(rho) - mp.sqrt(sigma)) ** 2
        sides = {
            "refine_A5": (K(h) ** r * g, a),
            "reverse_A5": (a, K(h) ** R * g),
            "refine_A6": (r * sq + K(mp.sqrt(h)) ** rp * g, a),
            "reverse_A7": (a, K(mp.sqrt(h)) ** (-rp) * g + R * sq),
            "reverse_A8": (a - R * sq, K(mp.sqrt(h)) ** Rp * g),
        }[direction]
        return float(sides[0]), float(sides[1])


@pytest.mark.parametrize("direction", scalar.KANTOROVICH_DIRECTIONS)
def test_kantorovich_young_against_extended_precision(direction):
    res = scalar.check_kantorovich_young(1.0, 2.0, 0.25, direction)
    lhs, rhs = _kantorovich_oracle(1.0, 2.0, 0.25, direction)
    assert res.passed
    assert res.lhs == pytest.approx(lhs, rel=1e-14)
    assert res.rhs == pytest.approx(rhs, rel=1e-14)


def test_kantorovich_refine_a5_example():
    res = scalar.check_kantorovich_young(1.0, 4.0, 0.5, "refine_A5")
    assert (res.lhs, res.rhs) == (2.5, 2.5)
    assert res.slack == 0.0


@settings(max_examples=300)
@given(pos, pos, unit, st.sampled_from(scalar.KANTOROVICH_DIRECTIONS))
def test_kantorovich_young_holds(rho, sigma, kappa, direction):
    assert scalar.check_kantorovich_young(rho, sigma, kappa, direction).passed


# --- Heinz refinements -----------------------------------------------------------

def test_weighted_identity_expressions_agree():
    a, b, c = scalar.b2_identity(2.0, 3.0, 0.5, 0.2)
    assert abs(a - b) <= 1e-15 * abs(b)
    assert abs(c - b) <= 1e-15 * abs(b)


def test_lemmas_at_nu_zero():
    # B1: both sides collapse to sigma; B3 keeps the full square term on the right
    for form in scalar.FORMS:
        res = scalar.check_heinz_scalar_lemmas(2.0, 7.0, 0.6, 0.0, "B1", form)
        assert res.lhs == pytest.approx(7.0, rel=1e-15) and res.rhs == pytest.approx(7.0, rel=1e-15)
        assert res.slack == pytest.approx(0.0, abs=1e-14)
        res = scalar.check_heinz_scalar_lemmas(2.0, 7.0, 0.6, 0.0, "B3", form)
        sq = (math.sqrt(2.0**0.6 * 7.0**0.4) - math.sqrt(7.0)) ** 2
        assert res.lhs == pytest.approx(7.0, rel=1e-15)
        assert res.rhs == pytest.approx(7.0 + sq, rel=1e-15)


def test_derived_bracket_is_the_summed_square_terms():
    rho, sigma, kappa = 1.0, 4.0, 0.5
    squares = (math.sqrt(scalar.sharp(rho, sigma, kappa)) - math.sqrt(sigma)) ** 2 + (
        math.sqrt(scalar.sharp(sigma, rho, kappa)) - math.sqrt(rho)
    ) ** 2
    bracket = 2.0 * scalar.heinz_bracket(rho, sigma, kappa, 2.0)
    assert squares == pytest.approx(0.5147186257614296, rel=1e-14)
    assert bracket == pytest.approx(squares, rel=1e-14)


def test_stated_heinz_forms_are_evaluated_and_reported():
    for which in ("A1", "A2"):
        res = scalar.check_heinz_refined(1.0, 4.0, 0.5, 0.2, which, PAPER_STATED)
        assert math.isfinite(res.lhs) and math.isfinite(res.rhs)
        assert res.label == f"{which}/{PAPER_STATED}"


@settings(max_examples=300)
@given(pos, pos, st.floats(1e-3, 1.0), st.floats(0.0, 0.999), st.sampled_from(["A1", "A2"]))
def test_derived_heinz_refinements_hold(rho, sigma, kappa, frac, which):
    assert scalar.check_heinz_refined(rho, sigma, kappa, frac * kappa, which, DERIVED_CORRECTED).passed


@settings(max_examples=300)
@given(pos, pos, st.floats(1e-3, 1.0), st.floats(0.0, 0.999), st.sampled_from(["B1", "B3"]))
def test_derived_lemmas_hold(rho, sigma, kappa, frac, which):
    assert scalar.check_heinz_scalar_lemmas(rho, sigma, kappa, frac * kappa, which, DERIVED_CORRECTED).passed


def test_nu_must_be_below_kappa():
    with pytest.raises(ParameterError):
        scalar.check_heinz_refined(1.0, 2.0, 0.4, 0.4, "A1")
    with pytest.raises(ParameterError):
        scalar.check_heinz_refined(1.0, 2.0, 0.4, 0.1, "A1", form="printed")


# --- Heinz-Heron bound ----------------------------------------------------------

def test_bhatia_heron_examples():
    assert scalar.check_bhatia_heron(3.0, 5.0, 0.5).slack == pytest.approx(0.0, abs=1e-15)
    assert scalar.check_bhatia_heron(3.0, 5.0, 0.0).slack == 0.0
    res = scalar.check_bhatia_heron(1.0, 9.0, 0.25)
    assert res.lhs == pytest.approx(2.0 * math.sqrt(3.0), rel=1e-15)
    assert res.rhs == pytest.approx(3.5, rel=1e-15)
    assert res.passed


# --- weighted AM-GM families ----------------------------------------------------

def test_furu_examples():
    assert scalar.check_furu([0.2, 0.3, 0.5], [1.7, 1.7, 1.7]).slack == pytest.approx(0.0, abs=1e-15)
    res = scalar.check_furu([0.5, 0.5], [1.0, 4.0])
    assert (res.lhs, res.rhs, res.slack) == (2.5, 2.5, 0.0)
    res = scalar.check_furu([1 / 3, 1 / 3, 1 / 3], [1.0, 1.0, 8.0])
    assert res.lhs == pytest.approx(10 / 3, rel=1e-15) and res.rhs == pytest.approx(10 / 3, rel=1e-15)


def test_constrained_examples():
    for t in (0.01, 1.0, 30.0):
        res = scalar.check_constrained_scalar([1.0], [t])
        assert abs(res.slack) <= 1e-14 * res.rhs
    assert scalar.check_constrained_scalar([1.0, 2.0, 0.5], [1.7] * 3).slack == pytest.approx(0.0, abs=1e-14)
    res = scalar.check_constrained_scalar([1.0, 2.0], [1.0, 3.0])
    with mp.workdps(50):
        u = mp.mpf(7) / 3
        rhs = u + mp.sqrt(1 + u * u)
        lhs = ((1 + mp.sqrt(2)) * (3 + mp.sqrt(10)) ** 2) ** (mp.mpf(1) / 3)
    assert res.passed
    assert res.lhs == pytest.approx(float(lhs), rel=1e-14)
    assert res.rhs == pytest.approx(float(rhs), rel=1e-14)


def test_weight_validation():
    with pytest.raises(ParameterError):
        scalar.check_furu([0.5, 0.6], [1.0, 2.0])
    with pytest.raises(ParameterError):
        scalar.check_furu([1.0], [1.0, 2.0])
    with pytest.raises(ParameterError):
        scalar.check_constrained_scalar([0.0, 0.0], [1.0, 2.0])


@settings(max_examples=300)
@given(st.lists(st.tuples(st.floats(0.01, 1.0), pos), min_size=1, max_size=5))
def test_furu_and_constrained_hold(pairs):
    raw = [w for w, _ in pairs]
    weights = [w / math.fsum(raw) for w in raw]
    weights[-1] = 1.0 - math.fsum(weights[:-1])
    omegas = [o for _, o in pairs]
    assert scalar.check_constrained_scalar(raw, omegas).passed
    if min(weights) >= 0.0:
        assert scalar.check_furu(weights, omegas).passed


# --- equality at rho = sigma ------------------------------------------------------

def _all_checks_at(x):
    """Every scalar check evaluated at rho = sigma = x, keyed by a readable name."""
    out = {
        "young": scalar.check_young(x, x, 0.3),
        "amgm": scalar.check_amgm(x, x),
        "young_refined": scalar.check_young_refined(x, x, 0.3),
        "man1": scalar.check_man1(x, x, 3.0, 1.5),
        "interpolation": scalar.check_heinz_interpolation(x, x, 0.3),
        "heron_monotone": scalar.check_heron_monotone(x, x, 0.2, 3.0),
        "bhatia_heron": scalar.check_bhatia_heron(x, x, 0.3),
    }
    for d in scalar.KANTOROVICH_DIRECTIONS:
        out[d] = scalar.check_kantorovich_young(x, x, 0.3, d)
    for form in scalar.FORMS:
        for which in ("B1", "B3"):
            out[f"{which}/{form}"] = scalar.check_heinz_scalar_lemmas(x, x, 0.6, 0.2, which, form)
        for which in ("A1", "A2"):
            out[f"{which}/{form}"] = scalar.check_heinz_refined(x, x, 0.6, 0.2, which, form)
    return out


@pytest.mark.parametrize("name", sorted(_all_checks_at(2.5)))
def test_every_check_has_zero_slack_at_equal_arguments(name):
    # the stated A1/A2 bracket equals rho at rho = sigma, so those two cases fail
    for x in (0.03, 2.5, 40.0):
        assert abs(_all_checks_at(x)[name].slack) <= 1e-12
