"""Accardi complementarity for qubit observables.

Pauli matrices in arbitrary directions, their projection-valued measures,
the complementarity predicate (exhaustive and by orthogonality) and a
sequential-measurement simulator.
"""

from .algebra import (
    E1,
    E2,
    E3,
    IDENTITY,
    BlochDirection,
    InputError,
    add,
    adjoint,
    direction,
    hs_inner,
    inverse_sigma_map,
    is_su2,
    matmul,
    normalized_trace,
    pauli,
    scale,
    sigma_map,
)
from .complementarity import (
    ComplementarityReport,
    FourSetEvidence,
    SetReport,
    SubsetPairTrace,
    check_pair_exhaustive,
    check_pair_fast,
    check_set,
    no_four_set_evidence,
    orthonormal_triple,
    pair_trace,
    random_direction,
)
from .simulation import (
    ConditionalTable,
    JointHistogram,
    conditional_probability,
    empirical_conditionals,
    first_outcome_distribution,
    simulate,
)
from .spectral import (
    EMPTY,
    FULL,
    MINUS,
    PLUS,
    SpectralMeasure,
    SpectralSubset,
    bernoulli_measure,
    eigenvector,
    evaluate,
    induced_probability,
    lagrange_projector,
    outer_projector,
    pvm,
)

__version__ = "0.1.0"
