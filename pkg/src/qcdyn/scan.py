"""Time series, parameter sweeps, fluctuation traces, and sudden-death events.

Everything here drives the averaging and measure layers over a uniform time
grid.  Sudden-death/birth detection scans a grid for threshold crossings of
the concurrence and refines each crossing by bisection on the continuous
function, so event times are sharper than the grid spacing.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from .averaging import (
    DEFAULT_QUADRATURE,
    CouplingModel,
    QuadratureSpec,
    StaticNoiseParams,
    averaged_state,
)
from .closedform import averaged_state_closed_form
from .errors import DomainError, UnknownAxisError
from .measures import MeasureTriple, concurrence, measure_triple
from .model import IDENTITY_4, Realization, SystemParams, evolve_realization
from .tolerances import TOLERANCES

SWEEP_AXES = ("lambda", "delta_m", "delta_o", "r")


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time grid; spacing is (t_end - t_start) / (steps - 1)."""

    t_start: float = 0.0
    t_end: float = 8.0
    steps: int = 401

    def __post_init__(self):
        if self.t_start < 0.0:
            raise DomainError(f"t_start must be >= 0, got {self.t_start}")
        if not self.t_end > self.t_start:
            raise DomainError("t_end must exceed t_start")
        if self.steps < 2:
            raise DomainError(f"steps must be >= 2, got {self.steps}")

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.steps)

    @property
    def spacing(self) -> float:
        return (self.t_end - self.t_start) / (self.steps - 1)


class SeriesMethod(Enum):
    QUADRATURE = "quadrature"
    CLOSED_FORM = "closed-form"


class EventKind(Enum):
    DEATH = "death"
    BIRTH = "birth"


@dataclass(frozen=True)
class EsdEvent:
    """A refined threshold crossing of the concurrence."""

    kind: EventKind
    t_event: float
    bracket: tuple[float, float]


@dataclass
class MeasureSeries:
    """Per-time (decoherence, purity, concurrence) triples plus provenance."""

    grid: TimeGrid
    model: CouplingModel
    system: SystemParams
    noise: StaticNoiseParams
    quadrature: QuadratureSpec
    method: SeriesMethod
    triples: tuple[MeasureTriple, ...]

    def times(self) -> np.ndarray:
        return self.grid.times()

    @property
    def decoherence(self) -> np.ndarray:
        return np.array([tr.decoherence for tr in self.triples])

    @property
    def purity(self) -> np.ndarray:
        return np.array([tr.purity for tr in self.triples])

    @property
    def concurrence(self) -> np.ndarray:
        return np.array([tr.concurrence for tr in self.triples])


@dataclass
class FluctuationTrace:
    """Real and imaginary parts of one matrix element along a time grid."""

    grid: TimeGrid
    element: tuple[int, int]
    re_values: np.ndarray
    im_values: np.ndarray


def state_at(
    model: CouplingModel,
    system: SystemParams,
    noise: StaticNoiseParams,
    t: float,
    quadrature: QuadratureSpec = DEFAULT_QUADRATURE,
    method: SeriesMethod = SeriesMethod.QUADRATURE,
) -> np.ndarray:
    """Averaged state at one time, by quadrature or by closed form.

    The closed-form route is exact for any r: averaging is linear and leaves
    the white-noise part of the Werner mixture invariant.
    """
    if method is SeriesMethod.QUADRATURE:
        return averaged_state(model, system, noise, t, quadrature)
    pure = averaged_state_closed_form(model, noise, system.lam, t)
    return system.r * pure + (1.0 - system.r) * IDENTITY_4 / 4.0


def time_series(
    model: CouplingModel,
    system: SystemParams,
    noise: StaticNoiseParams,
    grid: TimeGrid,
    quadrature: QuadratureSpec = DEFAULT_QUADRATURE,
    method: SeriesMethod = SeriesMethod.QUADRATURE,
) -> MeasureSeries:
    """Measure triples along the grid; deterministic for deterministic rules."""
    triples = tuple(
        measure_triple(state_at(model, system, noise, float(t), quadrature, method))
        for t in grid.times()
    )
    return MeasureSeries(grid, model, system, noise, quadrature, method, triples)


def concurrence_function(
    model: CouplingModel,
    system: SystemParams,
    noise: StaticNoiseParams,
    quadrature: QuadratureSpec = DEFAULT_QUADRATURE,
    method: SeriesMethod = SeriesMethod.QUADRATURE,
) -> Callable[[float], float]:
    """Concurrence as a continuous function of time, for event detection."""

    def conc(t: float) -> float:
        return concurrence(state_at(model, system, noise, t, quadrature, method))

    return conc


def detect_esd_esb(
    conc: Callable[[float], float],
    grid: TimeGrid,
    threshold: float = 1e-6,
) -> list[EsdEvent]:
    """Find sudden-death/birth events of a continuous concurrence function.

    The grid is scanned for sign changes of (concurrence - threshold); each
    bracket is refined by bisection (evaluating the function inside the
    bracket, not interpolating) until its width is at most 1e-6.  A downward
    crossing is a death, an upward crossing a birth; the returned list is
    time sorted and strictly alternates kinds.
    """
    if not threshold > 0.0:
        raise DomainError(f"threshold must be > 0, got {threshold}")
    times = grid.times()
    above = [conc(float(t)) > threshold for t in times]
    events = []
    for i in range(len(times) - 1):
        if above[i] == above[i + 1]:
            continue
        lo, hi = float(times[i]), float(times[i + 1])
        lo_above = above[i]
        while hi - lo > TOLERANCES.bisection:
            mid = 0.5 * (lo + hi)
            if (conc(mid) > threshold) == lo_above:
                lo = mid
            else:
                hi = mid
        kind = EventKind.DEATH if lo_above else EventKind.BIRTH
        events.append(EsdEvent(kind, 0.5 * (lo + hi), (lo, hi)))
    return events


def sweep(
    axis: str,
    values: Sequence[float],
    model: CouplingModel,
    system: SystemParams,
    noise: StaticNoiseParams,
    grid: TimeGrid,
    quadrature: QuadratureSpec = DEFAULT_QUADRATURE,
    method: SeriesMethod = SeriesMethod.QUADRATURE,
) -> list[MeasureSeries]:
    """One series per value of the swept parameter, in the given order."""
    if axis not in SWEEP_AXES:
        raise UnknownAxisError(f"axis must be one of {SWEEP_AXES}, got {axis!r}")
    series = []
    for v in values:
        sys_v, noise_v = system, noise
        if axis == "lambda":
            sys_v = replace(system, lam=v)
        elif axis == "r":
            sys_v = replace(system, r=v)
        elif axis == "delta_m":
            noise_v = replace(noise, delta_m=v)
        else:
            noise_v = replace(noise, delta_o=v)
        series.append(time_series(model, sys_v, noise_v, grid, quadrature, method))
    return series


def fluctuation_trace(
    system: SystemParams,
    source: Realization | CouplingModel,
    element: tuple[int, int],
    grid: TimeGrid,
    noise: StaticNoiseParams | None = None,
    quadrature: QuadratureSpec = DEFAULT_QUADRATURE,
) -> FluctuationTrace:
    """Re/Im of one density-matrix element along the grid.

    ``source`` is either a fixed :class:`Realization` (noiseless fields) or a
    :class:`CouplingModel` (disorder-averaged state, which then requires
    ``noise``).  ``element`` uses 1-based (row, col) indices; the default
    everywhere else in the package is (1, 4), the coherence that carries the
    Bell-pair entanglement.
    """
    row, col = element
    if not (1 <= row <= 4 and 1 <= col <= 4):
        raise DomainError(f"element indices must be in 1..4, got {element}")
    if isinstance(source, CouplingModel) and noise is None:
        raise DomainError("averaged traces need noise parameters")
    values = []
    for t in grid.times():
        if isinstance(source, Realization):
            rho = evolve_realization(system, source, float(t))
        else:
            rho = averaged_state(source, system, noise, float(t), quadrature)
        values.append(rho[row - 1, col - 1])
    values = np.array(values)
    return FluctuationTrace(grid, (row, col), values.real.copy(), values.imag.copy())
