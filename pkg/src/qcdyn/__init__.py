"""Two-qubit quantum correlation dynamics under classical fluctuating fields.

The library models two non-interacting qubits, each coupled through a
coupling constant to a classical stochastic field with static (quenched)
disorder drawn from a uniform distribution.  It evolves Werner-class initial
states exactly per realization, averages over the disorder for a shared or
an independent environment per qubit, computes von Neumann entropy, purity,
and Wootters concurrence, detects entanglement sudden-death/birth events,
and audits a family of transcribed closed-form expressions against the
quadrature pipeline.
"""

from .averaging import (
    DEFAULT_QUADRATURE,
    CouplingModel,
    QuadratureRule,
    QuadratureSpec,
    StaticNoiseParams,
    average_common,
    average_different,
    averaged_state,
    uniform_average_nodes,
)
from .closedform import (
    FlaggedValue,
    TranscribedMeasures,
    averaged_state_closed_form,
    closed_form_common,
    closed_form_different,
    closed_form_measures,
    damping_factor,
)
from .errors import (
    ConvergenceError,
    DomainError,
    NotHermitianError,
    ParseError,
    PhysicalityError,
    QuadratureError,
    UnknownAxisError,
    ValidationError,
)
from .linalg import (
    EigenResult4,
    conjugate_sandwich,
    dagger,
    frobenius_distance,
    herm_eig4,
    is_hermitian,
    kron,
)
from .measures import (
    LN4,
    MeasureTriple,
    concurrence,
    measure_triple,
    purity,
    von_neumann_entropy,
)
from .model import (
    IDENTITY_2,
    IDENTITY_4,
    PAULI_X,
    PAULI_Y,
    Realization,
    SystemParams,
    evolve_realization,
    initial_state,
    pair_propagator,
    single_qubit_propagator,
    validate_density_matrix,
)
from .reconcile import (
    DEFAULT_POINTS,
    FORMULA_IDS,
    ReconciliationRecord,
    build_report,
)
from .scan import (
    EsdEvent,
    EventKind,
    FluctuationTrace,
    MeasureSeries,
    SeriesMethod,
    TimeGrid,
    concurrence_function,
    detect_esd_esb,
    fluctuation_trace,
    state_at,
    sweep,
    time_series,
)
from .tolerances import TOLERANCES, Tolerances

__version__ = "0.1.0"
