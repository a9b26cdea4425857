"""Dense complex linear algebra shared across the package.

Matrices and state vectors are plain ``numpy.ndarray`` objects with dtype
complex128. Every routine here is a pure function; inputs are never
mutated. Dimensions stay at desk scale (a few thousand at most, reached
only by Kronecker powers), so everything is dense and simple.
"""

from __future__ import annotations

import numpy as np

#: Absolute tolerance used by every "within tol" contract unless overridden.
DEFAULT_TOL = 1e-10

#: Hard ceiling on any dimension produced by Kronecker products. Keeps
#: n-copy discrimination experiments at desk scale.
KRON_DIM_CAP = 2**14


def as_complex(a) -> np.ndarray:
    """Return ``a`` as a complex128 ndarray (no copy when already one)."""
    return np.asarray(a, dtype=complex)


def kron(a, b, dim_cap: int = KRON_DIM_CAP) -> np.ndarray:
    """Kronecker product with a dimension guard.

    Satisfies (A otimes B)[(i,k),(j,l)] = A[i,j] * B[k,l] with the second
    index varying fastest.

    Raises
    ------
    ValueError
        If either output dimension would exceed ``dim_cap``.
    """
    a = np.atleast_2d(as_complex(a))
    b = np.atleast_2d(as_complex(b))
    rows = a.shape[0] * b.shape[0]
    cols = a.shape[1] * b.shape[1]
    if rows > dim_cap or cols > dim_cap:
        raise ValueError(
            f"kron output {rows}x{cols} exceeds the dimension cap {dim_cap}"
        )
    return np.kron(a, b)


def kron_power(a, n: int, dim_cap: int = KRON_DIM_CAP) -> np.ndarray:
    """n-fold Kronecker power of ``a`` (n >= 1), guarded by ``dim_cap``."""
    if n < 1:
        raise ValueError("kron_power requires n >= 1")
    a = np.atleast_2d(as_complex(a))
    out = a
    for _ in range(n - 1):
        out = kron(out, a, dim_cap=dim_cap)
    return out


def is_hermitian(m, tol: float = DEFAULT_TOL) -> bool:
    m = as_complex(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return float(np.max(np.abs(m - m.conj().T), initial=0.0)) <= tol


def hermitian_eigensystem(h, tol: float = DEFAULT_TOL):
    """Eigenvalues (ascending) and orthonormal eigenvector columns of ``h``.

    Parameters
    ----------
    h : array_like
        Hermitian matrix; Hermiticity is checked against ``tol``.

    Returns
    -------
    (eigenvalues, eigenvectors)
        Real eigenvalues in ascending order and a unitary matrix whose
        columns are the matching eigenvectors.

    Raises
    ------
    ValueError
        If ``h`` is not Hermitian within ``tol``.
    """
    h = as_complex(h)
    if not is_hermitian(h, tol):
        raise ValueError("matrix is not Hermitian within tolerance")
    eigenvalues, eigenvectors = np.linalg.eigh(h)
    return eigenvalues, eigenvectors


def nullspace_dimension(m, tol: float = DEFAULT_TOL) -> int:
    """Number of singular directions with singular value < tol * ||M||.

    ||M|| is the largest singular value, so the threshold is relative; a
    zero matrix reports min(rows, cols).
    """
    m = np.atleast_2d(as_complex(m))
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0:
        return 0
    top = float(s[0])
    if top == 0.0:
        return int(s.size)
    return int(np.count_nonzero(s < tol * top))


def numerical_rank(m, tol: float = DEFAULT_TOL) -> int:
    m = np.atleast_2d(as_complex(m))
    return min(m.shape) - nullspace_dimension(m, tol)


def check_state_vector(psi, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Validate that ``psi`` is a unit-norm complex vector."""
    psi = as_complex(psi)
    if psi.ndim != 1:
        raise ValueError("state vector must be one-dimensional")
    if abs(np.linalg.norm(psi) - 1.0) > tol:
        raise ValueError("state vector is not normalized within tolerance")
    return psi


def check_density_matrix(rho, tol: float = DEFAULT_TOL,
                         check_positive: bool = True) -> np.ndarray:
    """Validate Hermiticity, unit trace and (optionally) positivity.

    Raises ValueError naming the violated invariant. The positivity scan
    costs a full eigendecomposition; callers on large n-copy matrices may
    skip it and own that part of the contract.
    """
    rho = as_complex(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError("density matrix must be square")
    if not is_hermitian(rho, tol):
        raise ValueError("density matrix is not Hermitian within tolerance")
    if abs(complex(np.trace(rho)).real - 1.0) > tol:
        raise ValueError("density matrix trace differs from 1")
    if check_positive:
        w = np.linalg.eigvalsh(rho)
        if float(w[0]) < -tol:
            raise ValueError("density matrix has a negative eigenvalue")
    return rho


def trace_distance(rho, sigma, tol: float = DEFAULT_TOL) -> float:
    """Trace distance (1/2) sum_i |eig_i(rho - sigma)| in [0, 1].

    Hermiticity, unit trace and matching dimensions are checked here;
    positivity of the inputs stays the caller's contract because the scan
    would triple the eigendecomposition cost on n-copy matrices.
    """
    rho = as_complex(rho)
    sigma = as_complex(sigma)
    if rho.shape != sigma.shape:
        raise ValueError("density matrices have mismatched dimensions")
    check_density_matrix(rho, tol, check_positive=False)
    check_density_matrix(sigma, tol, check_positive=False)
    w = np.linalg.eigvalsh(rho - sigma)
    return float(0.5 * np.sum(np.abs(w)))


def max_abs(m) -> float:
    """Entrywise max-norm, the residual measure used by the verifiers."""
    return float(np.max(np.abs(as_complex(m)), initial=0.0))
