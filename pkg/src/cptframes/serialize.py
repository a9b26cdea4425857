"""JSON encodings used across the CLI and file interfaces.

Complex numbers are two-element arrays [re, im]; matrices are
{"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order;
state vectors are {"dim": n, "amplitudes": [[re, im], ...]}; density
matrices are {"dim": n, "entries": [[re, im], ...]} row-major.

All numeric output is rounded to 12 significant digits before dumping so
that identical runs serialize to identical bytes. Non-finite floats are
encoded as the strings "inf", "-inf" and "nan" (JSON has no infinity
literal).
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np

from .reps import BasisLabel, SpeciesLabel, SubBasis


def complex_to_pair(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def _pairs(values) -> list:
    return [complex_to_pair(z) for z in values]


def matrix_to_json(m) -> dict:
    m = np.asarray(m, dtype=complex)
    return {"rows": int(m.shape[0]), "cols": int(m.shape[1]),
            "entries": _pairs(m.reshape(-1))}


def matrix_from_json(data) -> np.ndarray:
    rows, cols = int(data["rows"]), int(data["cols"])
    entries = data["entries"]
    if len(entries) != rows * cols:
        raise ValueError("entry count does not match rows * cols")
    flat = np.array([complex(re, im) for re, im in entries])
    return flat.reshape(rows, cols)


def state_to_json(psi) -> dict:
    psi = np.asarray(psi, dtype=complex)
    return {"dim": int(psi.shape[0]), "amplitudes": _pairs(psi)}


def state_from_json(data) -> np.ndarray:
    amplitudes = data["amplitudes"]
    if len(amplitudes) != int(data["dim"]):
        raise ValueError("amplitude count does not match dim")
    return np.array([complex(re, im) for re, im in amplitudes])


def density_to_json(rho) -> dict:
    rho = np.asarray(rho, dtype=complex)
    return {"dim": int(rho.shape[0]), "entries": _pairs(rho.reshape(-1))}


def density_from_json(data) -> np.ndarray:
    dim = int(data["dim"])
    entries = data["entries"]
    if len(entries) != dim * dim:
        raise ValueError("entry count does not match dim * dim")
    flat = np.array([complex(re, im) for re, im in entries])
    return flat.reshape(dim, dim)


def _number_to_json(value):
    # rationals serialize as "p/q" strings, integers as ints
    frac = Fraction(value)
    return int(frac) if frac.denominator == 1 else str(frac)


def species_to_json(species: SpeciesLabel) -> dict:
    return {
        "Q": species.q,
        "B": _number_to_json(species.baryon),
        "L": species.lepton,
        "spin_times_two": species.spin_times_two,
        "massive": species.massive,
    }


def species_from_json(data) -> SpeciesLabel:
    return SpeciesLabel(
        q=int(data["Q"]),
        baryon=Fraction(str(data["B"])),
        lepton=int(data["L"]),
        spin_times_two=int(data["spin_times_two"]),
        massive=bool(data.get("massive", True)),
    )


def subbasis_to_json(subbasis: SubBasis) -> dict:
    return {
        "species": species_to_json(subbasis.species),
        "p_mag": subbasis.p_mag,
        "labels": [{"kappa": l.kappa, "m2": l.m2, "pi": l.pi}
                   for l in subbasis.labels],
        "degenerate": subbasis.degenerate,
    }


def subbasis_from_json(data) -> SubBasis:
    species = species_from_json(data["species"])
    p_mag = float(data["p_mag"])
    labels = tuple(BasisLabel(int(l["kappa"]), int(l["m2"]), int(l["pi"]))
                   for l in data["labels"])
    degenerate = bool(data.get(
        "degenerate",
        (species.u == 0 and species.spin_times_two == 0) or p_mag == 0.0))
    return SubBasis(species, p_mag, labels, degenerate)


def round_floats(obj, significant: int = 12):
    """Recursively round floats to ``significant`` digits for stable output.

    Non-finite floats become their lowercase string names so the result
    stays valid JSON.
    """
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            return "nan"
        return float(f"{x:.{significant}g}")
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, dict):
        return {key: round_floats(value, significant)
                for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(item, significant) for item in obj]
    return obj


def dumps(obj, indent: int = 2) -> str:
    """Serialize with 12-significant-digit floats and a trailing newline."""
    return json.dumps(round_floats(obj), indent=indent, allow_nan=False) + "\n"
