"""Entanglement swapping from partially entangled pairs.

Simulates the Bell-basis measurement that swaps entanglement between two
independently prepared two-qubit pairs and quantifies the result with
coherence, predictability, and entanglement measures that obey exact
complementarity sums.
"""

from .experiment import EnsembleResult, RunConfig, run_ensemble, sample_bbm, three_sigma
from .linalg import (
    DensityMatrix,
    NonHermitianError,
    dagger,
    hermitian_eigenvalues,
    kron,
    partial_trace,
)
from .measures import MeasureReport, chs, cre, diagonal_part, pl, pvn, report, sl, svn
from .states import (
    BELL_LABELS,
    PureState,
    bell_state,
    composite_state,
    fidelity,
    haar_state,
    haar_states,
    schmidt_pair,
)
from .swap import (
    BBMOutcome,
    SwapSpectrum,
    UndefinedBranchError,
    bbm_outcomes,
    outcome_probabilities,
    post_entropies,
    predictability_probability,
    pvn_expansion_check,
    special_case_probs,
    stationarity_check,
    swap_spectrum,
)

__version__ = "0.1.0"
