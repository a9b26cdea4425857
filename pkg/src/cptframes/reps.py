"""Discrete particle labels and the unitary inversion-operator sets.

A species is characterized by its conserved internal quantum numbers and
spin. At fixed momentum magnitude along a chosen forward axis, the orbit
of a reference label under charge conjugation (C), combined parity/time
reversal (PT) and the full inversion (CPT) is a finite label set: the
sub-basis. Labels are ordered canonically (conjugation sign slowest, then
spin projection descending, then momentum sign) so that the CPT operator
is anti-diagonal for every spin.

Each operator is a permutation-with-phase matrix on the sub-basis. With
all phases zero the four operators {1, C, PT, CPT} form an exact abelian
Klein four-group; nonzero phases give a projective representation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .linalg import DEFAULT_TOL, max_abs

_TWO_PI = 2.0 * math.pi


def total_internal_quantum_number(q, baryon, lepton):
    """Total conserved internal quantum number: charge plus baryon-minus-lepton.

    Accepts integers or rationals (quark-like constituents carry
    fractional baryon number); returns an int when the result is integral.
    """
    u = Fraction(q) + Fraction(baryon) - Fraction(lepton)
    return int(u) if u.denominator == 1 else u


@dataclass(frozen=True)
class SpeciesLabel:
    """Internal quantum numbers and spin of a particle species.

    ``baryon`` may be rational; sub-basis logic only ever uses the sign of
    the total internal quantum number ``u``.
    """

    q: int
    baryon: Fraction
    lepton: int
    spin_times_two: int
    massive: bool = True

    def __post_init__(self):
        if self.spin_times_two < 0:
            raise ValueError("spin_times_two must be >= 0")
        object.__setattr__(self, "baryon", Fraction(self.baryon))

    @property
    def u(self):
        return total_internal_quantum_number(self.q, self.baryon, self.lepton)


@dataclass(frozen=True, order=True)
class BasisLabel:
    """One sub-basis label: conjugation sign, doubled spin projection,
    momentum sign.

    ``kappa`` is the sign of ``u`` when ``u != 0``; for neutral species
    with spin it labels the two handedness/helicity partners.
    """

    kappa: int
    m2: int
    pi: int

    def __post_init__(self):
        if self.kappa not in (1, -1):
            raise ValueError("kappa must be +1 or -1")
        if self.pi not in (1, -1):
            raise ValueError("pi must be +1 or -1")


@dataclass(frozen=True)
class SubBasis:
    """Ordered label set spanning the fixed-|p| state space of a species.

    Canonical order: kappa slowest (+ then -), then m descending, then pi
    (+ then -). Degenerate sub-bases (neutral spinless species, or zero
    momentum) deduplicate labels that coincide under the inversion maps
    and set the ``degenerate`` flag.
    """

    species: SpeciesLabel
    p_mag: float
    labels: tuple[BasisLabel, ...]
    degenerate: bool
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {label: i for i, label in enumerate(self.labels)}
        if len(index) != len(self.labels):
            raise ValueError("sub-basis labels must be pairwise distinct")
        for label in self.labels:
            if abs(label.m2) > self.species.spin_times_two:
                raise ValueError("|m| exceeds the species spin")
        object.__setattr__(self, "_index", index)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: BasisLabel) -> int:
        return self._index[label]

    @property
    def kappa_fixed(self) -> bool:
        """True when conjugation labels were deduplicated away."""
        return len({label.kappa for label in self.labels}) == 1

    @property
    def pi_fixed(self) -> bool:
        """True when momentum-sign labels were deduplicated away."""
        return len({label.pi for label in self.labels}) == 1


@dataclass(frozen=True)
class PhaseConfig:
    """Free phases of the C and PT operators; the CPT phase is their sum."""

    theta_c: float = 0.0
    theta_pt: float = 0.0

    @property
    def theta_cpt(self) -> float:
        return self.theta_c + self.theta_pt


def build_subbasis(species: SpeciesLabel, p_mag: float,
                   photon_mode: bool = False) -> SubBasis:
    """Construct the canonical sub-basis for a species at fixed |p|.

    Generic dimension is 2*(2s+1)*2. ``photon_mode`` removes the four
    zero-helicity labels of a massless spin-1 species (dimension 8). A
    neutral spinless species deduplicates the conjugation label and zero
    momentum deduplicates the momentum sign; both set the degenerate flag.
    """
    if p_mag < 0:
        raise ValueError("momentum magnitude must be >= 0")
    if photon_mode and (species.spin_times_two != 2 or species.massive):
        raise ValueError("photon_mode requires a massless spin-1 species")
    s2 = species.spin_times_two
    kappa_dedupe = species.u == 0 and s2 == 0
    pi_dedupe = p_mag == 0.0
    kappas = (1,) if kappa_dedupe else (1, -1)
    pis = (1,) if pi_dedupe else (1, -1)
    labels = []
    for kappa in kappas:
        for m2 in range(s2, -s2 - 1, -2):
            if photon_mode and m2 == 0:
                continue
            for pi in pis:
                labels.append(BasisLabel(kappa, m2, pi))
    return SubBasis(species, float(p_mag), tuple(labels),
                    kappa_dedupe or pi_dedupe)


#: Which label coordinates each group element flips.
_FLIPS = {
    "C": (True, False, False),
    "PT": (False, True, True),
    "CPT": (True, True, True),
}


def _mapped_label(label: BasisLabel, flips, kappa_fixed: bool,
                  pi_fixed: bool) -> BasisLabel:
    flip_kappa, flip_m, flip_pi = flips
    kappa = -label.kappa if flip_kappa and not kappa_fixed else label.kappa
    m2 = -label.m2 if flip_m else label.m2
    pi = -label.pi if flip_pi and not pi_fixed else label.pi
    return BasisLabel(kappa, m2, pi)


def build_operator(g: str, subbasis: SubBasis,
                   phases: PhaseConfig = PhaseConfig()) -> np.ndarray:
    """Unitary matrix of g in {"C", "PT", "CPT"} on the sub-basis.

    C flips the conjugation sign (phase e^{i theta_C}); PT flips the spin
    projection and momentum sign (phase e^{i theta_PT}); CPT flips all
    three (phase e^{i theta_CPT}). Coordinates deduplicated away in a
    degenerate sub-basis are left untouched. In canonical order at zero
    phases, CPT is the anti-diagonal unit matrix.
    """
    if g not in _FLIPS:
        raise ValueError(f"unknown group element {g!r}; expected C, PT or CPT")
    theta = {"C": phases.theta_c, "PT": phases.theta_pt,
             "CPT": phases.theta_cpt}[g]
    phase = cmath.exp(1j * theta)  # exactly 1+0j at theta == 0
    kappa_fixed = subbasis.kappa_fixed
    pi_fixed = subbasis.pi_fixed
    n = subbasis.dim
    op = np.zeros((n, n), dtype=complex)
    for j, label in enumerate(subbasis.labels):
        target = _mapped_label(label, _FLIPS[g], kappa_fixed, pi_fixed)
        try:
            i = subbasis.index(target)
        except KeyError:  # cannot happen for sub-bases built here
            raise RuntimeError(
                f"label map of {g} leaves the sub-basis at {label}") from None
        op[i, j] = phase
    return op


@dataclass(frozen=True, eq=False)
class RepresentationSet:
    """The four operators {1, C, PT, CPT} on a sub-basis."""

    subbasis: SubBasis
    phases: PhaseConfig
    op_identity: np.ndarray
    op_c: np.ndarray
    op_pt: np.ndarray
    op_cpt: np.ndarray

    def operator(self, name: str) -> np.ndarray:
        return {"I": self.op_identity, "C": self.op_c,
                "PT": self.op_pt, "CPT": self.op_cpt}[name]


def build_representation(subbasis: SubBasis,
                         phases: PhaseConfig = PhaseConfig()) -> RepresentationSet:
    return RepresentationSet(
        subbasis,
        phases,
        np.eye(subbasis.dim, dtype=complex),
        build_operator("C", subbasis, phases),
        build_operator("PT", subbasis, phases),
        build_operator("CPT", subbasis, phases),
    )


def build_cpt_generic(spin_times_two: int, p_mag: float = 1.0):
    """Sub-basis and zero-phase CPT matrix for arbitrary spin.

    Uses a reference species with u = +1 so the construction is never
    degenerate; reduces exactly to the spin 0, 1/2 and 1 operators.
    """
    species = SpeciesLabel(q=1, baryon=Fraction(0), lepton=0,
                           spin_times_two=spin_times_two, massive=True)
    subbasis = build_subbasis(species, p_mag)
    return subbasis, build_operator("CPT", subbasis)


# --- group structure ---------------------------------------------------

MEMBERS = ("I", "C", "PT", "CPT")
_BITS = {"I": (0, 0), "C": (1, 0), "PT": (0, 1), "CPT": (1, 1)}
_FROM_BITS = {bits: name for name, bits in _BITS.items()}


def klein_product(a: str, b: str) -> str:
    """Abstract Klein four-group multiplication on member names."""
    (c1, p1), (c2, p2) = _BITS[a], _BITS[b]
    return _FROM_BITS[(c1 + c2) % 2, (p1 + p2) % 2]


@dataclass(frozen=True)
class ClosureEntry:
    member: str
    phase: float  # radians in [0, 2*pi)
    residual: float


@dataclass
class GroupReport:
    """Result of checking {1, C, PT, CPT} against the Klein four-group."""

    closure: dict
    squares: dict
    abelian: bool
    commutator_residual: float
    projective: bool
    involutive_exact: bool
    max_residual: float
    passed: bool
    failures: list


def _match_up_to_phase(product: np.ndarray, expected: np.ndarray):
    """Phase and residual of ``product`` against ``phase * expected``."""
    idx = np.unravel_index(int(np.argmax(np.abs(expected))), expected.shape)
    ref = expected[idx]
    ratio = product[idx] / ref
    mod = abs(ratio)
    phase_factor = ratio / mod if mod > 0 else 1.0
    residual = max_abs(product - phase_factor * expected)
    return float(cmath.phase(phase_factor) % _TWO_PI), residual


def verify_group(rep: RepresentationSet, tol: float = DEFAULT_TOL) -> GroupReport:
    """Check closure, commutativity and involutions of the operator set.

    Every pairwise product must equal the Klein-expected member up to a
    global phase; a closure failure names the offending pair (it signals
    a construction bug, not bad input). The representation is flagged
    projective when any product carries a nontrivial phase relative to
    its expected member.
    """
    ops = {name: rep.operator(name) for name in MEMBERS}
    closure = {}
    failures = []
    max_residual = 0.0
    projective = False
    for a in MEMBERS:
        for b in MEMBERS:
            product = ops[a] @ ops[b]
            expected = klein_product(a, b)
            phase, residual = _match_up_to_phase(product, ops[expected])
            closure[(a, b)] = ClosureEntry(expected, phase, residual)
            max_residual = max(max_residual, residual)
            if residual > tol:
                failures.append(f"{a}*{b} does not match {expected} up to phase")
            elif abs(cmath.exp(1j * phase) - 1.0) > tol:
                projective = True

    commutator_residual = 0.0
    for i, a in enumerate(MEMBERS):
        for b in MEMBERS[i + 1:]:
            commutator_residual = max(
                commutator_residual, max_abs(ops[a] @ ops[b] - ops[b] @ ops[a]))
    abelian = commutator_residual <= tol

    identity = ops["I"]
    squares = {}
    involutive_exact = True
    for name in MEMBERS:
        square = ops[name] @ ops[name]
        phase, residual = _match_up_to_phase(square, identity)
        squares[name] = (phase, residual)
        if not np.array_equal(square, identity):
            involutive_exact = False
    if not abelian:
        failures.append("operator set is not commutative")
    return GroupReport(
        closure=closure,
        squares=squares,
        abelian=abelian,
        commutator_residual=commutator_residual,
        projective=projective,
        involutive_exact=involutive_exact,
        max_residual=max_residual,
        passed=not failures,
        failures=failures,
    )


# --- eigenstructure ----------------------------------------------------

def _check_antidiagonal_units(u_cpt: np.ndarray, tol: float):
    n = u_cpt.shape[0]
    expected = np.zeros((n, n), dtype=complex)
    expected[np.arange(n), np.arange(n - 1, -1, -1)] = 1.0
    return max_abs(u_cpt - expected) <= tol


def cpt_eigenbasis(u_cpt: np.ndarray, subbasis: SubBasis,
                   tol: float = DEFAULT_TOL):
    """Orthonormal +/-1 eigenvectors of a phase-stripped CPT operator.

    Each canonical label pair (i, n-1-i) yields (e_i + e_{n-1-i})/sqrt(2)
    with eigenvalue +1 and (e_i - e_{n-1-i})/sqrt(2) with eigenvalue -1;
    an odd-dimensional (fully degenerate) sub-basis contributes its fixed
    middle label to the + sector. The + eigenvectors are listed first, in
    pair order.

    Raises
    ------
    ValueError
        If ``u_cpt`` is not the anti-diagonal unit matrix within ``tol``
        (strip the global CPT phase, i.e. rebuild at theta = 0, first).
    """
    u_cpt = np.asarray(u_cpt, dtype=complex)
    n = subbasis.dim
    if u_cpt.shape != (n, n):
        raise ValueError("operator dimension does not match the sub-basis")
    if not _check_antidiagonal_units(u_cpt, tol):
        raise ValueError(
            "CPT operator carries a nonzero phase; strip the phase "
            "(rebuild with theta_C = theta_PT = 0) before taking eigenvectors")
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    plus, minus = [], []
    for i in range(n // 2):
        j = n - 1 - i
        v_plus = np.zeros(n, dtype=complex)
        v_plus[i] = inv_sqrt2
        v_plus[j] = inv_sqrt2
        v_minus = np.zeros(n, dtype=complex)
        v_minus[i] = inv_sqrt2
        v_minus[j] = -inv_sqrt2
        plus.append((1, v_plus))
        minus.append((-1, v_minus))
    if n % 2 == 1:
        v_mid = np.zeros(n, dtype=complex)
        v_mid[n // 2] = 1.0
        plus.append((1, v_mid))
    return plus + minus
