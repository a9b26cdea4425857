"""Superselection sectors, twirling, and frame-alignment resources.

The phase-stripped CPT operator is a unitary involution, so the state
space splits into its +1 and -1 eigensectors. Superselection forbids
coherence between the sectors; the twirl channel enforces it, the +
sector is a decoherence-free subspace, and the sector weights (q0, q1)
of a pure state quantify how useful it is for aligning inversion frames.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    KRON_DIM_CAP,
    as_complex,
    check_state_vector,
    hermitian_eigensystem,
    kron_power,
    max_abs,
    trace_distance,
)

#: Sector-weight gap below which the alignment rate is reported infinite.
DIVERGENCE_THRESHOLD = 1e-12


def _check_involution(u, tol):
    u = as_complex(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError("operator must be a square matrix")
    n = u.shape[0]
    eye = np.eye(n, dtype=complex)
    if max_abs(u.conj().T @ u - eye) > tol:
        raise ValueError("operator is not unitary within tolerance")
    if max_abs(u @ u - eye) > tol:
        raise ValueError(
            "operator does not square to the identity; strip the CPT phase "
            "(rebuild with theta_C = theta_PT = 0) first")
    return u


@dataclass(frozen=True, eq=False)
class SectorDecomposition:
    """Projectors onto the +1 and -1 eigensectors of a CPT involution."""

    p_plus: np.ndarray
    p_minus: np.ndarray
    dim_plus: int
    dim_minus: int


def sector_projectors(u_cpt, tol: float = DEFAULT_TOL) -> SectorDecomposition:
    """P_plus/minus = (1 +- U)/2 with sector dimensions from the traces.

    Requires a phase-stripped operator (U unitary with U^2 = 1 within
    ``tol``); raises ValueError otherwise.
    """
    u = _check_involution(u_cpt, tol)
    n = u.shape[0]
    eye = np.eye(n, dtype=complex)
    p_plus = (eye + u) / 2.0
    p_minus = (eye - u) / 2.0
    dim_plus = int(round(complex(np.trace(p_plus)).real))
    dim_minus = int(round(complex(np.trace(p_minus)).real))
    if dim_plus + dim_minus != n or dim_plus < 0 or dim_minus < 0:
        raise ValueError("sector dimensions are inconsistent")
    return SectorDecomposition(p_plus, p_minus, dim_plus, dim_minus)


def twirl(rho, u_cpt) -> np.ndarray:
    """Average a state over {1, U}: rho -> (rho + U rho U^dagger)/2.

    The output commutes with U, the trace is preserved, and repeating the
    channel is a no-op. This is the decoherence a CPT superselection rule
    inflicts on sector coherences.
    """
    rho = as_complex(rho)
    u = as_complex(u_cpt)
    if rho.shape != u.shape:
        raise ValueError("state and operator dimensions do not match")
    return (rho + u @ rho @ u.conj().T) / 2.0


def is_majorana(psi, u_cpt, tol: float = DEFAULT_TOL) -> bool:
    """True iff U psi = psi within ``tol`` (eigenvalue exactly +1).

    For spin-1/2 sub-bases this is the defining invariance of a Majorana
    spinor. Invariance up to a phase does not count: a -1 eigenstate is
    not Majorana.
    """
    psi = as_complex(psi)
    u = as_complex(u_cpt)
    if psi.shape != (u.shape[0],):
        raise ValueError("state and operator dimensions do not match")
    return max_abs(u @ psi - psi) <= tol


def dfs_subspace(decomp: SectorDecomposition, sector) -> np.ndarray:
    """Orthonormal basis (columns) of one sector.

    ``sector`` is "+", "-", +1 or -1. The returned columns span the
    decoherence-free subspace of that sector: any state within it is a
    CPT eigenstate, so a sector of dimension d carries a logical qudit of
    dimension d. Raises ValueError on an empty sector.
    """
    key = {"+": 1, "-": -1, 1: 1, -1: -1}.get(sector)
    if key is None:
        raise ValueError(f"sector must be '+' or '-', got {sector!r}")
    projector = decomp.p_plus if key == 1 else decomp.p_minus
    dim = decomp.dim_plus if key == 1 else decomp.dim_minus
    if dim < 1:
        raise ValueError("requested sector is empty; no logical space")
    eigenvalues, eigenvectors = hermitian_eigensystem(projector)
    columns = eigenvectors[:, eigenvalues > 0.5]
    if columns.shape[1] != dim:
        raise ValueError("projector spectrum inconsistent with sector dimension")
    return columns


@dataclass(frozen=True)
class ResourceForm:
    """Sector weights of a pure state: q0 on the + sector, q1 on the -.

    All states with equal weights are interconvertible under
    CPT-invariant operations, so the pair (q0, q1) is the whole resource
    content of the state.
    """

    q0: float
    q1: float

    def __post_init__(self):
        if not (-1e-12 <= self.q0 <= 1.0 + 1e-12
                and -1e-12 <= self.q1 <= 1.0 + 1e-12):
            raise ValueError("sector weights must lie in [0, 1]")
        if abs(self.q0 + self.q1 - 1.0) > 1e-12:
            raise ValueError("sector weights must sum to 1")


def standard_form(psi, decomp: SectorDecomposition,
                  tol: float = DEFAULT_TOL) -> ResourceForm:
    """Sector weights q0 = <psi|P+|psi>, q1 = <psi|P-|psi> of a normalized state."""
    psi = check_state_vector(psi, tol)
    if psi.shape[0] != decomp.p_plus.shape[0]:
        raise ValueError("state and decomposition dimensions do not match")
    q0 = float(np.vdot(psi, decomp.p_plus @ psi).real)
    q1 = float(np.vdot(psi, decomp.p_minus @ psi).real)
    q0 = min(max(q0, 0.0), 1.0)
    q1 = min(max(q1, 0.0), 1.0)
    return ResourceForm(q0, q1)


def alignment_rate(form: ResourceForm) -> float:
    """Frame information per resource token, -2 log2 |q0 - q1| bits.

    Sector-pure states carry zero rate; balanced states (|q0 - q1| below
    ``DIVERGENCE_THRESHOLD``) return ``math.inf`` so downstream consumers
    must handle the divergent case explicitly.
    """
    gap = abs(form.q0 - form.q1)
    if gap < DIVERGENCE_THRESHOLD:
        return math.inf
    return -2.0 * math.log2(gap) + 0.0  # +0.0 avoids a -0.0 at gap == 1


def helstrom_success(psi, u_cpt, n_copies: int,
                     dim_cap: int = KRON_DIM_CAP) -> float:
    """Optimal probability of telling psi^(n) from (U psi)^(n) apart.

    Computed through the general trace-distance formula
    1/2 + 1/2 * T(rho^(x n), (U rho U^dagger)^(x n)) with rho = |psi><psi|.
    For pure states this equals 1/2 + 1/2 sqrt(1 - |<psi|U|psi>|^(2n)).

    Raises ValueError when dim^n would exceed ``dim_cap``.
    """
    psi = check_state_vector(psi)
    u = as_complex(u_cpt)
    if n_copies < 1:
        raise ValueError("n_copies must be >= 1")
    dim = psi.shape[0]
    if dim ** n_copies > dim_cap:
        raise ValueError(
            f"{n_copies} copies of a dimension-{dim} state exceed the "
            f"Kronecker cap {dim_cap}")
    rho = np.outer(psi, psi.conj())
    phi = u @ psi
    sigma = np.outer(phi, phi.conj())
    distance = trace_distance(kron_power(rho, n_copies, dim_cap),
                              kron_power(sigma, n_copies, dim_cap))
    return 0.5 + 0.5 * distance


def standard_state(u_cpt, q0: float) -> np.ndarray:
    """A pure state with sector weights (q0, 1 - q0).

    Built on the first canonical label pair: with b the first basis state
    and U b its CPT partner, the state is
    sqrt(q0) (b + U b)/sqrt(2) + sqrt(1-q0) (b - U b)/sqrt(2).
    Requires a phase-stripped U of dimension >= 2.
    """
    if not 0.0 <= q0 <= 1.0:
        raise ValueError("q0 must lie in [0, 1]")
    u = _check_involution(u_cpt, DEFAULT_TOL)
    n = u.shape[0]
    if n < 2:
        raise ValueError("dimension-1 spaces have a single sector; "
                         "no superposition state exists")
    e0 = np.zeros(n, dtype=complex)
    e0[0] = 1.0
    partner = u @ e0
    if abs(np.vdot(e0, partner)) > 1e-12:
        raise ValueError("first basis state is CPT-invariant; cannot build "
                         "a two-sector superposition on it")
    plus = (e0 + partner) / math.sqrt(2.0)
    minus = (e0 - partner) / math.sqrt(2.0)
    return math.sqrt(q0) * plus + math.sqrt(1.0 - q0) * minus
