"""Numerical toolkit for unitary CPT-inversion reference frames.

Builds the discrete sub-bases and unitary operator sets {1, C, PT, CPT}
for spin 0, 1/2 and 1 (and generically for higher spin), verifies the
wave-equation algebra that fixes each state-space dimension, decomposes
state spaces into CPT eigensectors, quantifies frame-alignment resources,
and simulates communication protocols that work without a shared
inversion frame.
"""

from .linalg import (
    DEFAULT_TOL,
    KRON_DIM_CAP,
    check_density_matrix,
    check_state_vector,
    hermitian_eigensystem,
    kron,
    kron_power,
    nullspace_dimension,
    numerical_rank,
    trace_distance,
)
from .protocol import (
    ChannelModel,
    ProtocolReport,
    encode_dfs,
    encode_naive,
    run_protocol,
    run_token_assisted,
)
from .reps import (
    BasisLabel,
    PhaseConfig,
    RepresentationSet,
    SpeciesLabel,
    SubBasis,
    build_cpt_generic,
    build_operator,
    build_representation,
    build_subbasis,
    cpt_eigenbasis,
    total_internal_quantum_number,
    verify_group,
)
from .ssr import (
    ResourceForm,
    SectorDecomposition,
    alignment_rate,
    dfs_subspace,
    helstrom_success,
    is_majorana,
    sector_projectors,
    standard_form,
    standard_state,
    twirl,
)
from .wave_eqs import (
    FourMomentum,
    GammaSet,
    SpinOneSet,
    bbs_auxiliary_check,
    clifford_check,
    dirac_set,
    majorana_reality_check,
    majorana_set,
    planewave_kernel,
    scan_dispersion,
    spin_one_set,
    su2_check,
    wsg_gamma_tensor,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "KRON_DIM_CAP",
    "BasisLabel",
    "ChannelModel",
    "FourMomentum",
    "GammaSet",
    "PhaseConfig",
    "ProtocolReport",
    "RepresentationSet",
    "ResourceForm",
    "SectorDecomposition",
    "SpeciesLabel",
    "SpinOneSet",
    "SubBasis",
    "alignment_rate",
    "bbs_auxiliary_check",
    "build_cpt_generic",
    "build_operator",
    "build_representation",
    "build_subbasis",
    "check_density_matrix",
    "check_state_vector",
    "clifford_check",
    "cpt_eigenbasis",
    "dfs_subspace",
    "dirac_set",
    "encode_dfs",
    "encode_naive",
    "helstrom_success",
    "hermitian_eigensystem",
    "is_majorana",
    "kron",
    "kron_power",
    "majorana_reality_check",
    "majorana_set",
    "nullspace_dimension",
    "numerical_rank",
    "planewave_kernel",
    "run_protocol",
    "run_token_assisted",
    "scan_dispersion",
    "sector_projectors",
    "spin_one_set",
    "standard_form",
    "standard_state",
    "su2_check",
    "total_internal_quantum_number",
    "trace_distance",
    "twirl",
    "verify_group",
    "wsg_gamma_tensor",
]
