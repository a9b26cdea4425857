"""Matrix content of the relativistic wave equations and their verifiers.

Conventions: natural units (hbar = c = 1), metric signature (+,-,-,-),
plane waves w * exp(-i p.x) so the momentum substitution reads
i d_mu -> p_mu with covariant components p_mu = (p0, -p_vec).

The plane-wave kernels turn each wave equation into a matrix acting on
the amplitude w; counting its numerical nullspace at on-shell momentum
recovers the 2s+1 physical polarizations that justify the sub-basis
dimensions used by :mod:`cptframes.reps`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, max_abs, nullspace_dimension

#: On-shell classification threshold |p^2 - m^2| used in scans and checks.
ON_SHELL_TOL = 1e-9

PAULI_1 = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_3 = np.array([[1, 0], [0, -1]], dtype=complex)

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True, eq=False)
class GammaSet:
    """Four 4x4 matrices satisfying the Clifford relations for (+,-,-,-)."""

    gamma0: np.ndarray
    gamma1: np.ndarray
    gamma2: np.ndarray
    gamma3: np.ndarray

    @property
    def gammas(self):
        return (self.gamma0, self.gamma1, self.gamma2, self.gamma3)


def dirac_set() -> GammaSet:
    """Standard Dirac representation: gamma^0 = diag(1, -1) blocks,
    gamma^j = offdiag(sigma^j, -sigma^j)."""
    eye2 = np.eye(2, dtype=complex)
    zero2 = np.zeros((2, 2), dtype=complex)

    def off(s):
        return np.block([[zero2, s], [-s, zero2]])

    gamma0 = np.block([[eye2, zero2], [zero2, -eye2]])
    return GammaSet(gamma0, off(PAULI_1), off(PAULI_2), off(PAULI_3))


def majorana_set() -> GammaSet:
    """Purely imaginary Clifford set, as a similarity of the Dirac set.

    The transform is U = H / sqrt(2) with the Hermitian involution
    H = [[1, sigma^2], [sigma^2, -1]] (2x2 blocks), so that
    gamma_M = U gamma_D U^dagger = H gamma_D H / 2. All entries of H and
    of the Dirac set are Gaussian integers, hence the result is exact in
    floating point and exactly purely imaginary.

    Raises
    ------
    RuntimeError
        If the transformed matrices carry a real part (construction bug).
    """
    eye2 = np.eye(2, dtype=complex)
    h = np.block([[eye2, PAULI_2], [PAULI_2, -eye2]])
    d = dirac_set()
    transformed = [(h @ g @ h) / 2.0 for g in d.gammas]
    for g in transformed:
        if max_abs(g.real) > 0.0:
            raise RuntimeError("similarity transform failed to produce a "
                               "purely imaginary Clifford set")
    return GammaSet(*transformed)


@dataclass
class CheckReport:
    """Outcome of an algebraic verifier: per-item deviations plus verdict."""

    check: str
    deviations: dict
    max_deviation: float
    passed: bool


def clifford_check(gset: GammaSet, tol: float = DEFAULT_TOL) -> CheckReport:
    """Verify {gamma^mu, gamma^nu} = 2 g^{mu nu} 1 for all index pairs."""
    eye = np.eye(4, dtype=complex)
    deviations = {}
    worst = 0.0
    for mu in range(4):
        for nu in range(mu, 4):
            a, b = gset.gammas[mu], gset.gammas[nu]
            anti = a @ b + b @ a
            dev = max_abs(anti - 2.0 * METRIC[mu, nu] * eye)
            deviations[(mu, nu)] = dev
            worst = max(worst, dev)
    return CheckReport("clifford", deviations, worst, worst <= tol)


@dataclass(frozen=True, eq=False)
class SpinOneSet:
    """The 3x3 spin-1 generators S^1, S^2, S^3."""

    s1: np.ndarray
    s2: np.ndarray
    s3: np.ndarray

    @property
    def spins(self):
        return (self.s1, self.s2, self.s3)

    def m_matrix(self, i: int, j: int) -> np.ndarray:
        """M^{(ij)} = (i S^j)(i S^i); note the reversed index order."""
        return -self.spins[j - 1] @ self.spins[i - 1]

    def s_dot(self, vec) -> np.ndarray:
        return (vec[0] * self.s1 + vec[1] * self.s2 + vec[2] * self.s3)


def spin_one_set() -> SpinOneSet:
    s1 = 1j * np.array([[0, 0, 0], [0, 0, -1], [0, 1, 0]], dtype=complex)
    s2 = 1j * np.array([[0, 0, 1], [0, 0, 0], [-1, 0, 0]], dtype=complex)
    s3 = 1j * np.array([[0, -1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex)
    return SpinOneSet(s1, s2, s3)


def su2_check(sset: SpinOneSet, tol: float = DEFAULT_TOL) -> CheckReport:
    """Verify [S^i, S^j] = i eps_{ijk} S^k and the Casimir sum = 2."""
    deviations = {}
    worst = 0.0
    cyclic = ((1, 2, 3), (2, 3, 1), (3, 1, 2))
    for i, j, k in cyclic:
        a, b, c = sset.spins[i - 1], sset.spins[j - 1], sset.spins[k - 1]
        dev = max_abs(a @ b - b @ a - 1j * c)
        deviations[f"[S{i},S{j}]"] = dev
        worst = max(worst, dev)
    casimir = sum(s @ s for s in sset.spins)
    dev = max_abs(casimir - 2.0 * np.eye(3, dtype=complex))
    deviations["casimir"] = dev
    worst = max(worst, dev)
    return CheckReport("su2", deviations, worst, worst <= tol)


def wsg_gamma_tensor(sset: SpinOneSet) -> dict:
    """All sixteen 6x6 tensor matrices of the massive spin-1 equation.

    gamma^{00} = -offdiag(1); gamma^{0i} = gamma^{i0} = offdiag(S^i, -S^i);
    gamma^{ij} = gamma^{ji} = offdiag(delta_ij + M^{(ij)} + M^{(ji)}).
    """
    eye3 = np.eye(3, dtype=complex)
    zero3 = np.zeros((3, 3), dtype=complex)
    tensor = {(0, 0): -np.block([[zero3, eye3], [eye3, zero3]])}
    for i in range(1, 4):
        s = sset.spins[i - 1]
        block = np.block([[zero3, s], [-s, zero3]])
        tensor[(0, i)] = block
        tensor[(i, 0)] = block
    for i in range(1, 4):
        for j in range(i, 4):
            delta = eye3 if i == j else zero3
            d = delta + sset.m_matrix(i, j) + sset.m_matrix(j, i)
            block = np.block([[zero3, d], [d, zero3]])
            tensor[(i, j)] = block
            tensor[(j, i)] = block
    return tensor


def wsg_tensor_check(sset: SpinOneSet, tol: float = DEFAULT_TOL) -> CheckReport:
    """Structural checks on the spin-1 tensor matrices.

    Verifies the fixed gamma^{00} block, symmetry in (mu, nu), the
    off-diagonal S-block form of gamma^{0i}, and recomputes M^{(ij)} from
    the generators.
    """
    tensor = wsg_gamma_tensor(sset)
    eye3 = np.eye(3, dtype=complex)
    zero3 = np.zeros((3, 3), dtype=complex)
    deviations = {}
    deviations["gamma00"] = max_abs(
        tensor[(0, 0)] + np.block([[zero3, eye3], [eye3, zero3]]))
    sym = 0.0
    for mu in range(4):
        for nu in range(4):
            sym = max(sym, max_abs(tensor[(mu, nu)] - tensor[(nu, mu)]))
    deviations["symmetry"] = sym
    zeroi = 0.0
    for i in range(1, 4):
        s = sset.spins[i - 1]
        zeroi = max(zeroi, max_abs(
            tensor[(0, i)] - np.block([[zero3, s], [-s, zero3]])))
    deviations["gamma0i"] = zeroi
    m_dev = 0.0
    for i in range(1, 4):
        for j in range(1, 4):
            m_dev = max(m_dev, max_abs(
                sset.m_matrix(i, j)
                - (1j * sset.spins[j - 1]) @ (1j * sset.spins[i - 1])))
    deviations["m_matrices"] = m_dev
    worst = max(deviations.values())
    return CheckReport("wsg", deviations, worst, worst <= tol)


BETA_1 = np.block([[np.zeros((3, 3)), np.eye(3)],
                   [np.eye(3), np.zeros((3, 3))]]).astype(complex)
BETA_3 = np.block([[np.eye(3), np.zeros((3, 3))],
                   [np.zeros((3, 3)), -np.eye(3)]]).astype(complex)


@dataclass(frozen=True)
class FourMomentum:
    """Contravariant four-momentum components in natural units."""

    p0: float
    px: float
    py: float
    pz: float

    @classmethod
    def on_shell(cls, m: float, p_vec, sign: int = 1) -> "FourMomentum":
        px, py, pz = (float(c) for c in p_vec)
        energy = np.sqrt(m * m + px * px + py * py + pz * pz)
        return cls(sign * float(energy), px, py, pz)

    @property
    def p_vec(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz])

    @property
    def covariant(self) -> np.ndarray:
        return np.array([self.p0, -self.px, -self.py, -self.pz])

    @property
    def p_squared(self) -> float:
        return self.p0 * self.p0 - (self.px * self.px + self.py * self.py
                                    + self.pz * self.pz)

    def is_on_shell(self, m: float, tol: float = ON_SHELL_TOL) -> bool:
        return abs(self.p_squared - m * m) < tol


EQUATIONS = ("kg", "dirac", "weyl", "wsg", "bbs")
MASSLESS_EQUATIONS = ("weyl", "bbs")


def planewave_kernel(eq: str, p: FourMomentum, m: float = 0.0) -> np.ndarray:
    """Matrix acting on the plane-wave amplitude for the given equation.

    kg    -> 1x1 scalar (p^2 - m^2)
    dirac -> gamma^mu p_mu + m
    weyl  -> sigma^mu p_mu (massless only)
    wsg   -> p_mu gamma^{mu nu} p_nu - p^2 + 2 m^2
    bbs   -> p0 - beta^3 (S . p_vec) (massless only)
    """
    if m < 0:
        raise ValueError("mass must be >= 0")
    eq = eq.lower()
    if eq not in EQUATIONS:
        raise ValueError(f"unknown wave equation {eq!r}")
    if eq in MASSLESS_EQUATIONS and m > 0:
        raise ValueError(f"the {eq} equation is massless; got m = {m}")
    cov = p.covariant
    if eq == "kg":
        return np.array([[p.p_squared - m * m]], dtype=complex)
    if eq == "dirac":
        d = dirac_set()
        kernel = sum(cov[mu] * d.gammas[mu] for mu in range(4))
        return kernel + m * np.eye(4, dtype=complex)
    if eq == "weyl":
        sigma = (np.eye(2, dtype=complex), PAULI_1, PAULI_2, PAULI_3)
        return sum(cov[mu] * sigma[mu] for mu in range(4))
    if eq == "wsg":
        tensor = wsg_gamma_tensor(spin_one_set())
        eye6 = np.eye(6, dtype=complex)
        kernel = np.zeros((6, 6), dtype=complex)
        for mu in range(4):
            for nu in range(4):
                kernel += cov[mu] * tensor[(mu, nu)] * cov[nu]
        return kernel - p.p_squared * eye6 + 2.0 * m * m * eye6
    # bbs
    s_dot_p = spin_one_set().s_dot(p.p_vec)
    zero3 = np.zeros((3, 3), dtype=complex)
    block = np.block([[s_dot_p, zero3], [zero3, -s_dot_p]])  # beta^3 (S.p)
    return p.p0 * np.eye(6, dtype=complex) - block


def bbs_auxiliary_check(w, tol: float = DEFAULT_TOL) -> bool:
    """True iff the six-component amplitude satisfies w = beta^1 conj(w)."""
    w = np.asarray(w, dtype=complex)
    if w.shape != (6,):
        raise ValueError("auxiliary condition applies to 6-component amplitudes")
    return max_abs(w - BETA_1 @ w.conj()) <= tol


@dataclass
class MajoranaReport:
    """Imaginarity, Clifford and real-solution-space diagnostics."""

    max_real_part: float
    clifford_max_deviation: float
    real_solution_dim: int
    expected_dim: int
    on_shell: bool
    passed: bool


def majorana_reality_check(gset: GammaSet, p: FourMomentum, m: float,
                           tol: float = DEFAULT_TOL) -> MajoranaReport:
    """Verify a purely imaginary Clifford set supports real solutions.

    With gamma purely imaginary, R = i gamma^mu p_mu is a real matrix and
    the real plane-wave ansatz a cos(p.x) + b sin(p.x) reduces the wave
    equation to the real 8x8 system [[m, R], [-R, m]] (a; b) = 0. Doubling
    the complex amplitude into real variables this way, the solution space
    has real dimension 4 at on-shell momentum (for any m >= 0) and 0
    otherwise.
    """
    max_real = max(max_abs(g.real) for g in gset.gammas)
    clifford = clifford_check(gset, tol)
    cov = p.covariant
    r_complex = 1j * sum(cov[mu] * gset.gammas[mu] for mu in range(4))
    max_imag = max_abs(r_complex.imag)
    r = r_complex.real
    eye4 = np.eye(4)
    doubled = np.block([[m * eye4, r], [-r, m * eye4]])
    dim = nullspace_dimension(doubled, ON_SHELL_TOL)
    on_shell = p.is_on_shell(m)
    expected = 4 if on_shell else 0
    passed = (max_real <= tol and max_imag <= tol and clifford.passed
              and dim == expected)
    return MajoranaReport(
        max_real_part=max(max_real, max_imag),
        clifford_max_deviation=clifford.max_deviation,
        real_solution_dim=dim,
        expected_dim=expected,
        on_shell=on_shell,
        passed=passed,
    )


def scan_dispersion(eq: str, count: int, seed: int,
                    perturbation: float = 0.1) -> list:
    """Seeded dispersion scan: nullspace dimension at and off the shell.

    Each item derives its own RNG stream from (seed, item index), so the
    scan is reproducible and order-independent. Massive equations draw
    m in (0, 10]; massless ones use m = 0. Two rows per draw: the on-shell
    momentum and the same momentum with p0 shifted by ``perturbation``.

    Returns a list of (p0, p1, p2, p3, m, nullspace_dim) tuples.
    """
    eq = eq.lower()
    if eq not in EQUATIONS:
        raise ValueError(f"unknown wave equation {eq!r}")
    rows = []
    for k in range(count):
        rng = np.random.default_rng([seed, k])
        m = 0.0 if eq in MASSLESS_EQUATIONS else 10.0 * (1.0 - rng.random())
        p_vec = rng.uniform(-5.0, 5.0, 3)
        while np.linalg.norm(p_vec) < 0.5:  # keep |p| away from zero
            p_vec = rng.uniform(-5.0, 5.0, 3)
        momentum = FourMomentum.on_shell(m, p_vec)
        for p0 in (momentum.p0, momentum.p0 + perturbation):
            probe = FourMomentum(p0, *p_vec)
            dim = nullspace_dimension(planewave_kernel(eq, probe, m),
                                      ON_SHELL_TOL)
            rows.append((probe.p0, probe.px, probe.py, probe.pz, m, dim))
    return rows
