import math

import numpy as np
import pytest

from qcdyn import (
    CouplingModel,
    QuadratureRule,
    QuadratureSpec,
    StaticNoiseParams,
    SystemParams,
    average_common,
    average_different,
    closed_form_common,
    closed_form_different,
    closed_form_measures,
    damping_factor,
    frobenius_distance,
    initial_state,
    measure_triple,
)
from qcdyn.closedform import raw_entry

POINTS = [
    (0.5, StaticNoiseParams(1.0, 1.0), 2.0),
    (0.8, StaticNoiseParams(3.0, 1.0), 4.0),
    (0.2, StaticNoiseParams(2.0, 0.5), 6.0),
    (1.0, StaticNoiseParams(0.7, -0.4), 3.3),
]


def test_common_matches_raw_transcription():
    for lam, noise, t in POINTS:
        built = closed_form_common(noise, lam, t)
        for pos, (r, c) in (("11", (0, 0)), ("12", (0, 1)), ("21", (1, 0)), ("22", (1, 1))):
            assert abs(built[r, c] - raw_entry(CouplingModel.COMMON, pos, noise, lam, t)) < 1e-12


def test_different_matches_raw_up_to_corner_sign():
    for lam, noise, t in POINTS:
        built = closed_form_different(noise, lam, t)
        for pos, (r, c) in (("12", (0, 1)), ("21", (1, 0)), ("22", (1, 1))):
            assert abs(built[r, c] - raw_entry(CouplingModel.DIFFERENT, pos, noise, lam, t)) < 1e-12
        # the transcribed corner entry carries a global sign defect
        raw_corner = raw_entry(CouplingModel.DIFFERENT, "11", noise, lam, t)
        assert abs(built[0, 0] + raw_corner) < 1e-12


def test_block_pattern():
    rho = closed_form_common(StaticNoiseParams(1.0, 1.0), 0.5, 2.0)
    assert rho[0, 0] == rho[3, 3] == rho[0, 3] == rho[3, 0]
    assert rho[1, 1] == rho[2, 2] == rho[1, 2] == rho[2, 1]
    assert rho[0, 1] == rho[0, 2] == rho[3, 1] == rho[3, 2]


def test_t0_limit_is_bell_state():
    noise = StaticNoiseParams(1.0, 1.0)
    assert frobenius_distance(closed_form_common(noise, 0.5, 0.0), initial_state(1.0)) < 1e-14
    assert frobenius_distance(closed_form_different(noise, 0.5, 0.0), initial_state(1.0)) < 1e-14


def test_common_corner_frozen_value():
    rho = closed_form_common(StaticNoiseParams(1.0, 1.0), 0.5, 2.0)
    assert abs(rho[0, 0].real - 0.175705442185962) < 1e-14


def test_unit_trace_identity():
    # corner + mid entries sum to 1/2 algebraically, so the trace is exactly 1
    rng = np.random.default_rng(41)
    for _ in range(20):
        noise = StaticNoiseParams(rng.uniform(0.2, 4.0), rng.uniform(-2.0, 2.0))
        lam, t = rng.uniform(0.05, 1.5), rng.uniform(0.0, 10.0)
        for cf in (closed_form_common, closed_form_different):
            assert abs(np.trace(cf(noise, lam, t)).real - 1.0) < 1e-12


def test_closed_forms_match_quadrature():
    fine = QuadratureSpec(QuadratureRule.GAUSS_LEGENDRE, 513)
    lam, noise, t = 0.8, StaticNoiseParams(3.0, 1.0), 4.0
    p = SystemParams(lam=lam, r=1.0)
    assert frobenius_distance(average_common(p, noise, t, fine), closed_form_common(noise, lam, t)) <= 1e-6
    assert frobenius_distance(average_different(p, noise, t, fine), closed_form_different(noise, lam, t)) <= 1e-6


def test_damping_factor_series_branch_is_continuous():
    for model in CouplingModel:
        below = damping_factor(model, 9.9e-7)
        above = damping_factor(model, 1.01e-6)
        assert abs(below - above) < 1e-10
        assert damping_factor(model, 0.0) == 1.0


def test_coherence_envelope_bound():
    # |(1,2)| of the common-model closed form is bounded by 1/(8 t delta_m lam)
    rng = np.random.default_rng(42)
    for _ in range(200):
        noise = StaticNoiseParams(rng.uniform(0.1, 4.0), rng.uniform(-2.0, 3.0))
        lam, t = rng.uniform(0.05, 1.5), rng.uniform(0.05, 10.0)
        if t * noise.delta_m * lam <= 0.1:
            continue
        rho = closed_form_common(noise, lam, t)
        assert abs(rho[0, 1]) <= 1.0 / (8.0 * t * noise.delta_m * lam) * (1 + 1e-12)


def test_transcribed_purity_common_at_half_pi():
    # phi = pi/2 makes the expression collapse to 1/2 exactly
    noise = StaticNoiseParams(1.0, 1.0)
    lam = 1.0
    t = math.pi / 2
    out = closed_form_measures(CouplingModel.COMMON, noise, lam, t)
    assert out.purity.flag == ""
    assert abs(out.purity.value - 0.5) < 1e-12


def test_transcribed_purity_common_small_phi_limit():
    out = closed_form_measures(CouplingModel.COMMON, StaticNoiseParams(1.0, 1.0), 1e-9, 1.0)
    assert out.purity.flag == ""
    assert abs(out.purity.value - 1.0) < 1e-12


def test_transcribed_concurrence_common_flagged_at_small_phi():
    out = closed_form_measures(CouplingModel.COMMON, StaticNoiseParams(1.0, 1.0), 0.05, 1.0)
    assert out.concurrence.flag == "sqrt-domain"
    assert math.isnan(out.concurrence.value)


def test_transcribed_entropy_different_flags_log_domain():
    # eta exceeds 1 for small phi, driving the first logarithm negative
    out = closed_form_measures(CouplingModel.DIFFERENT, StaticNoiseParams(1.0, 1.0), 1.0, 1.0)
    assert out.decoherence.flag == "log-domain"


def test_transcribed_purity_different_flagged():
    out = closed_form_measures(CouplingModel.DIFFERENT, StaticNoiseParams(1.0, 1.0), 0.5, 2.0)
    assert out.purity.flag == "denominator-misprint"
    # the literal value times t^4 recovers the pipeline purity
    p = SystemParams(lam=0.5, r=1.0)
    pipeline = measure_triple(average_different(p, StaticNoiseParams(1.0, 1.0), 2.0)).purity
    assert abs(out.purity.value * 2.0 ** 4 - pipeline) < 1e-8


def test_transcribed_entropy_common_matches_pipeline_where_defined():
    noise = StaticNoiseParams(1.0, 1.0)
    for lam, t in ((0.5, 2.0), (0.5, 5.0), (0.8, 4.0)):
        out = closed_form_measures(CouplingModel.COMMON, noise, lam, t)
        assert out.decoherence.flag == ""
        p = SystemParams(lam=lam, r=1.0)
        pipeline = measure_triple(average_common(p, noise, t)).decoherence
        assert abs(out.decoherence.value - pipeline) <= 1e-8


def test_transcribed_purity_common_matches_pipeline():
    noise = StaticNoiseParams(1.0, 1.0)
    for lam, t in ((0.5, 2.0), (0.2, 7.0), (0.8, 3.0)):
        out = closed_form_measures(CouplingModel.COMMON, noise, lam, t)
        p = SystemParams(lam=lam, r=1.0)
        pipeline = measure_triple(average_common(p, noise, t)).purity
        assert abs(out.purity.value - pipeline) <= 1e-8


def test_transcribed_concurrence_different_never_flags_but_disagrees():
    noise = StaticNoiseParams(1.0, 1.0)
    out = closed_form_measures(CouplingModel.DIFFERENT, noise, 0.5, 2.0)
    assert out.concurrence.flag == ""
    p = SystemParams(lam=0.5, r=1.0)
    pipeline = measure_triple(average_different(p, noise, 2.0)).concurrence
    assert abs(out.concurrence.value - pipeline) > 1e-3  # genuine transcription defect


def test_raw_entries_raise_at_t0():
    with pytest.raises(ZeroDivisionError):
        raw_entry(CouplingModel.COMMON, "11", StaticNoiseParams(1.0, 1.0), 0.5, 0.0)
