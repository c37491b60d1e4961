"""Closed-form disorder averages and the transcribed measure expressions.

Integrating the pure-state evolution over the uniform disorder distribution
gives the averaged matrix in closed form.  Writing x = t * delta_m * lam and
y = 4 * t * lam * delta_o, every entry reduces to a damping factor

    common:     F(x) = sin(2x) / (2x)
    different:  F(x) = (sin(x) / x)^2

multiplying cos(y) on the diagonal blocks and sin(y) on the off-diagonal
ones.  The assembled matrices here use that cancellation-free grouping (with
a series branch for the removable singularity at x -> 0) and agree with the
raw per-entry formulas wherever those are defined.

The raw transcribed entry and measure expressions are also kept, verbatim,
because several of them are defective: the (1,1) entry of the
different-configuration average carries a global sign error, one purity
denominator is misprinted, and the transcribed entropy/concurrence
expressions leave their real domains or disagree with the measure pipeline.
The quadrature pipeline is ground truth; :mod:`qcdyn.reconcile` audits every
transcribed formula against it and records the defects.
"""

import math
from dataclasses import dataclass

import numpy as np

from .averaging import CouplingModel, StaticNoiseParams
from .model import validate_density_matrix
from .tolerances import TOLERANCES

_SWITCH = TOLERANCES.series_switch
_LN2 = math.log(2.0)


def damping_factor(model: CouplingModel, x: float) -> float:
    """Disorder damping factor F(x); F(0) = 1 and |F| <= 1.

    Below the series switch the Taylor limit is used so the removable
    singularity at x = 0 never produces NaN.
    """
    x = float(x)
    if model is CouplingModel.COMMON:
        if abs(x) < _SWITCH:
            return 1.0 - 2.0 * x * x / 3.0
        return math.sin(2.0 * x) / (2.0 * x)
    if abs(x) < _SWITCH:
        return 1.0 - x * x / 3.0
    s = math.sin(x) / x
    return s * s


def _pattern(corner: float, off: complex, mid: float) -> np.ndarray:
    offc = np.conj(off)
    return np.array(
        [
            [corner, off, off, corner],
            [offc, mid, mid, offc],
            [offc, mid, mid, offc],
            [corner, off, off, corner],
        ],
        dtype=complex,
    )


def averaged_state_closed_form(
    model: CouplingModel, noise: StaticNoiseParams, lam: float, t: float
) -> np.ndarray:
    """Closed-form disorder-averaged state for initial purity r = 1.

    General r follows from mixing with I/4, which averaging leaves invariant.
    The different-configuration (1,1)/(1,4) entry uses the sign-corrected
    value; the raw transcription of that entry is negated (see reconcile).
    """
    x = t * noise.delta_m * lam
    y = 4.0 * t * lam * noise.delta_o
    f = damping_factor(model, x)
    corner = (1.0 + f * math.cos(y)) / 4.0
    off = 1j * f * math.sin(y) / 4.0
    mid = (1.0 - f * math.cos(y)) / 4.0
    return validate_density_matrix(_pattern(corner, off, mid))


def closed_form_common(noise: StaticNoiseParams, lam: float, t: float) -> np.ndarray:
    return averaged_state_closed_form(CouplingModel.COMMON, noise, lam, t)


def closed_form_different(noise: StaticNoiseParams, lam: float, t: float) -> np.ndarray:
    return averaged_state_closed_form(CouplingModel.DIFFERENT, noise, lam, t)


# ---------------------------------------------------------------------------
# Raw transcribed entry formulas (defects preserved for the reconciliation).
# Python floats raise ZeroDivisionError at t = 0; callers treat that as a
# domain failure of the transcription rather than papering over it.
# ---------------------------------------------------------------------------

def raw_entry(model: CouplingModel, position: str, noise: StaticNoiseParams, lam: float, t: float) -> complex:
    """Literal transcribed value of one averaged-matrix entry.

    ``position`` is one of "11", "12", "21", "22" (1-based row, col within
    the repeating block pattern).
    """
    dm, do = noise.delta_m, noise.delta_o
    minus = 2.0 * t * (dm - 2.0 * do) * lam
    plus = 2.0 * t * (dm + 2.0 * do) * lam
    if model is CouplingModel.COMMON:
        den = 16.0 * t * dm * lam
        if position == "11":
            return complex((4.0 * t * dm * lam + math.sin(minus) + math.sin(plus)) / den)
        if position == "12":
            return 1j * (math.cos(minus) - math.cos(plus)) / den
        if position == "21":
            return -1j * (math.cos(minus) - math.cos(plus)) / den
        if position == "22":
            return complex(
                (4.0 * t * dm * lam + math.sin(4.0 * t * (-dm / 2.0 + do) * lam) - math.sin(plus))
                / den
            )
    else:
        den = 16.0 * t * t * dm * dm * lam * lam
        mid_cos = 2.0 * math.cos(4.0 * t * do * lam)
        mid_sin = 2.0 * math.sin(4.0 * t * do * lam)
        if position == "11":
            # Transcribed with a leading -4 t^2 dm^2 lam^2; the quadrature of
            # the double integral shows the entire expression is negated.
            return complex(
                (-4.0 * t * t * dm * dm * lam * lam + math.cos(minus) - mid_cos + math.cos(plus))
                / den
            )
        if position == "12":
            return 1j * (math.sin(minus) + mid_sin - math.sin(plus)) / den
        if position == "21":
            return -1j * (math.sin(minus) + mid_sin - math.sin(plus)) / den
        if position == "22":
            return complex(
                (4.0 * t * t * dm * dm * lam * lam + math.cos(minus) - mid_cos + math.cos(plus))
                / den
            )
    raise ValueError(f"unknown entry position {position!r}")


# ---------------------------------------------------------------------------
# Transcribed measure expressions, with domain guards.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlaggedValue:
    """A transcribed-formula value plus a non-fatal domain/defect annotation."""

    value: float
    flag: str = ""


@dataclass(frozen=True)
class TranscribedMeasures:
    decoherence: FlaggedValue
    purity: FlaggedValue
    concurrence: FlaggedValue


def closed_form_measures(
    model: CouplingModel, noise: StaticNoiseParams, lam: float, t: float
) -> TranscribedMeasures:
    """Evaluate the transcribed decoherence/purity/concurrence expressions.

    Values are returned exactly as the expressions compute them; a flag marks
    points where an expression leaves its real domain or where the
    transcription itself is structurally defective.  Consistency with the
    measure pipeline is judged by the reconciliation report, not here.
    """
    x = t * noise.delta_m * lam
    if model is CouplingModel.COMMON:
        return TranscribedMeasures(
            decoherence=_entropy_common(x),
            purity=_purity_common(x),
            concurrence=_concurrence_common(x),
        )
    return TranscribedMeasures(
        decoherence=_entropy_different(x),
        purity=_purity_different(x, t),
        concurrence=_concurrence_different(x),
    )


def _entropy_common(x: float) -> FlaggedValue:
    if x < _SWITCH:
        # Pure-state limit of the expression as x -> 0.
        return FlaggedValue(0.0)
    s2 = math.sin(2.0 * x)
    eta = abs(s2) / x  # sin^2(2x) / sqrt(x^2 sin^2(2x)), regrouped
    if eta >= 2.0:
        return FlaggedValue(math.nan, "log-domain")
    sigma = s2 / (2.0 * x)  # reciprocal of the arccoth argument 2x csc(2x)
    if abs(sigma) >= 1.0:
        return FlaggedValue(math.nan, "atanh-domain")
    tail = 0.0 if s2 == 0.0 else (s2 / x) * math.atanh(sigma)
    value = 0.5 * (
        math.log(4.0) - math.log(0.5 - 0.25 * eta) - math.log(2.0 + eta) - tail
    )
    return FlaggedValue(value)


def _entropy_different(x: float) -> FlaggedValue:
    if x < _SWITCH:
        # eta -> 4 drives the first logarithm negative.
        return FlaggedValue(math.nan, "log-domain")
    eta = 2.0 * abs(math.sin(2.0 * x)) / x
    if eta >= 1.0:
        return FlaggedValue(math.nan, "log-domain")
    ratio = math.sin(x) / x
    tau = ratio * ratio
    if tau >= 1.0:
        return FlaggedValue(math.nan, "atanh-domain")
    value = 0.5 * (
        _LN2
        - math.log(0.5 - 0.5 * eta)
        - math.log(1.0 + eta)
        - 2.0 * tau * math.atanh(tau)
    )
    return FlaggedValue(value)


def _purity_common(x: float) -> FlaggedValue:
    if x < _SWITCH:
        return FlaggedValue(1.0 - 2.0 * x * x / 3.0)
    return FlaggedValue((1.0 + 8.0 * x * x - math.cos(4.0 * x)) / (16.0 * x * x))


def _purity_different(x: float, t: float) -> FlaggedValue:
    # Transcribed with a 16 t^4 x^4 denominator, which is dimensionally
    # inconsistent with the common-model expression; kept literal and flagged.
    if t == 0.0 or x < _SWITCH:
        return FlaggedValue(math.nan, "denominator-misprint")
    value = (
        3.0 + 8.0 * x ** 4 - 4.0 * math.cos(2.0 * x) + math.cos(4.0 * x)
    ) / (16.0 * t ** 4 * x ** 4)
    return FlaggedValue(value, "denominator-misprint")


def _concurrence_common(x: float) -> FlaggedValue:
    if x < _SWITCH:
        # eta -> 8 makes sqrt(4 - eta) imaginary.
        return FlaggedValue(math.nan, "sqrt-domain")
    cx = math.cos(x)
    eta = 8.0 * cx * cx * abs(math.sin(x)) / x  # 2 sin^2(2x)/sqrt(x^2 sin^2 x)
    if eta > 4.0:
        return FlaggedValue(math.nan, "sqrt-domain")
    value = (math.sqrt(4.0 + eta) - math.sqrt(4.0 - eta)) / (2.0 * math.sqrt(2.0))
    return FlaggedValue(value)


def _concurrence_different(x: float) -> FlaggedValue:
    if x < _SWITCH:
        eta = 1.0
    else:
        ratio = math.sin(x) / x
        eta = ratio * ratio
    # Literal grouping: only the first square root carries the 1/sqrt(2).
    value = -math.sqrt(1.0 - eta) / math.sqrt(2.0) + math.sqrt(1.0 + eta)
    return FlaggedValue(value)
