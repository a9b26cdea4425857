"""Command-line interface.

Commands emit JSON on stdout (dispersion scans and trial dumps emit CSV)
and are deterministic given their flags and the global --seed. Exit codes:
0 on success, 1 when a verification command reports a failure, 2 on usage
errors.
"""

from __future__ import annotations

import csv
import io
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import wraps

import click
import numpy as np

from . import protocol as protocol_mod
from . import serialize
from .linalg import DEFAULT_TOL
from .reps import (
    PhaseConfig,
    SpeciesLabel,
    build_representation,
    build_subbasis,
    cpt_eigenbasis,
    verify_group,
)
from .ssr import (
    alignment_rate,
    dfs_subspace,
    helstrom_success,
    sector_projectors,
    standard_form,
    standard_state,
    twirl,
)
from .wave_eqs import (
    EQUATIONS,
    clifford_check,
    dirac_set,
    scan_dispersion,
    spin_one_set,
    su2_check,
    wsg_tensor_check,
)


@dataclass
class RunConfig:
    """Run-wide settings shared by all subcommands."""

    phases: PhaseConfig
    tol: float
    seed: int
    fmt: str = "json"

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")


def _read_config_file(path) -> dict:
    values = {}
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise click.UsageError(
                    f"malformed config line (expected key = value): {line!r}")
            key, _, raw = line.partition("=")
            values[key.strip().replace("-", "_")] = raw.strip()
    return values


def usage_errors(f):
    """Convert library ValueErrors on bad inputs into exit-code-2 errors."""

    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except ValueError as exc:
            raise click.UsageError(str(exc)) from exc

    return wrapper


@click.group()
@click.option("--seed", type=int, default=0, show_default=True,
              help="Master seed for every randomized command.")
@click.option("--tol", type=float, default=DEFAULT_TOL, show_default=True,
              help="Absolute tolerance for verification checks.")
@click.option("--theta-c", type=float, default=0.0, show_default=True,
              help="Phase of the C operator (radians).")
@click.option("--theta-pt", type=float, default=0.0, show_default=True,
              help="Phase of the PT operator (radians).")
@click.option("--config", "config_path",
              type=click.Path(exists=True, dir_okay=False), default=None,
              help="Optional key = value config file; flags override it.")
@click.pass_context
def main(ctx, seed, tol, theta_c, theta_pt, config_path):
    """Build CPT inversion representations, verify the wave-equation
    algebra behind them, and simulate frame-free communication."""
    if config_path:
        from click.core import ParameterSource

        file_values = _read_config_file(config_path)
        casts = {"seed": int, "tol": float, "theta_c": float,
                 "theta_pt": float}
        current = {"seed": seed, "tol": tol, "theta_c": theta_c,
                   "theta_pt": theta_pt}
        for key, cast in casts.items():
            if key in file_values and \
                    ctx.get_parameter_source(key) == ParameterSource.DEFAULT:
                try:
                    current[key] = cast(file_values[key])
                except ValueError as exc:
                    raise click.UsageError(
                        f"bad config value for {key}: {file_values[key]!r}"
                    ) from exc
        seed, tol = current["seed"], current["tol"]
        theta_c, theta_pt = current["theta_c"], current["theta_pt"]
    try:
        ctx.obj = RunConfig(PhaseConfig(theta_c, theta_pt), tol, seed)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


def parse_spin(text: str) -> int:
    """Spin flag value ("0", "1/2", "0.5", "1", ...) -> doubled integer."""
    try:
        doubled = 2 * Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise click.UsageError(f"cannot parse spin {text!r}")
    if doubled.denominator != 1 or doubled < 0:
        raise click.UsageError(
            f"spin must be a non-negative integer or half-integer, got {text!r}")
    return int(doubled)


def rep_options(f):
    f = click.option("--photon", is_flag=True,
                     help="Photon sub-basis (massless spin 1, u = 0, "
                          "zero-helicity labels removed).")(f)
    f = click.option("--massless", is_flag=True, help="Massless species.")(f)
    f = click.option("--p", "p_mag", type=float, default=1.0,
                     show_default=True, help="Momentum magnitude.")(f)
    f = click.option("--u", "u_value", type=int, default=1, show_default=True,
                     help="Total internal quantum number of the reference "
                          "particle.")(f)
    f = click.option("--spin", type=str, default="0", show_default=True,
                     help="Particle spin: 0, 1/2, 1, 3/2, ...")(f)
    return f


def make_subbasis(spin, u_value, p_mag, massless, photon):
    spin_times_two = parse_spin(spin)
    if photon:
        massless = True
        if spin_times_two != 2 or u_value != 0:
            raise click.UsageError(
                "--photon requires --spin 1 and --u 0")
    species = SpeciesLabel(q=u_value, baryon=Fraction(0), lepton=0,
                           spin_times_two=spin_times_two,
                           massive=not massless)
    return build_subbasis(species, p_mag, photon_mode=photon)


def _echo_json(payload):
    click.echo(serialize.dumps(payload), nl=False)


# --- rep ----------------------------------------------------------------

@main.group()
def rep():
    """Sub-basis and operator construction."""


@rep.command("build")
@rep_options
@click.pass_obj
@usage_errors
def rep_build(cfg, spin, u_value, p_mag, massless, photon):
    """Emit the sub-basis and the {1, C, PT, CPT} matrices as JSON."""
    subbasis = make_subbasis(spin, u_value, p_mag, massless, photon)
    built = build_representation(subbasis, cfg.phases)
    _echo_json({
        "subbasis": serialize.subbasis_to_json(subbasis),
        "phases": {"theta_c": cfg.phases.theta_c,
                   "theta_pt": cfg.phases.theta_pt,
                   "theta_cpt": cfg.phases.theta_cpt},
        "operators": {
            "identity": serialize.matrix_to_json(built.op_identity),
            "C": serialize.matrix_to_json(built.op_c),
            "PT": serialize.matrix_to_json(built.op_pt),
            "CPT": serialize.matrix_to_json(built.op_cpt),
        },
    })


@rep.command("eigen")
@rep_options
@click.pass_obj
@usage_errors
def rep_eigen(cfg, spin, u_value, p_mag, massless, photon):
    """Emit the +/-1 eigenbasis of the phase-stripped CPT operator."""
    subbasis = make_subbasis(spin, u_value, p_mag, massless, photon)
    u_cpt = build_representation(subbasis, cfg.phases).op_cpt
    pairs = cpt_eigenbasis(u_cpt, subbasis, cfg.tol)
    _echo_json({
        "subbasis": serialize.subbasis_to_json(subbasis),
        "eigenbasis": [
            {"eigenvalue": value, **serialize.state_to_json(vector)}
            for value, vector in pairs
        ],
    })


# --- verify -------------------------------------------------------------

@main.group()
def verify():
    """Algebraic verification checks (exit 1 on failure)."""


def _finish_check(report):
    _echo_json({
        "check": report.check,
        "max_deviation": report.max_deviation,
        "pass": report.passed,
        "deviations": {str(k): v for k, v in report.deviations.items()},
    })
    if not report.passed:
        sys.exit(1)


@verify.command("clifford")
@click.pass_obj
def verify_clifford(cfg):
    """Anticommutators of the built-in Dirac matrices."""
    _finish_check(clifford_check(dirac_set(), cfg.tol))


@verify.command("su2")
@click.pass_obj
def verify_su2(cfg):
    """Commutators and Casimir of the spin-1 generators."""
    _finish_check(su2_check(spin_one_set(), cfg.tol))


@verify.command("wsg")
@click.pass_obj
def verify_wsg(cfg):
    """Structure of the 6x6 spin-1 tensor matrices."""
    _finish_check(wsg_tensor_check(spin_one_set(), cfg.tol))


@verify.command("group")
@rep_options
@click.pass_obj
@usage_errors
def verify_group_cmd(cfg, spin, u_value, p_mag, massless, photon):
    """Klein four-group closure of {1, C, PT, CPT} at the configured phases."""
    subbasis = make_subbasis(spin, u_value, p_mag, massless, photon)
    report = verify_group(build_representation(subbasis, cfg.phases), cfg.tol)
    _echo_json({
        "check": "group",
        "pass": report.passed,
        "abelian": report.abelian,
        "projective": report.projective,
        "involutive_exact": report.involutive_exact,
        "max_residual": report.max_residual,
        "closure": {
            f"{a}*{b}": {"equals": entry.member, "phase": entry.phase,
                         "residual": entry.residual}
            for (a, b), entry in report.closure.items()
        },
        "squares": {name: {"phase": phase, "residual": residual}
                    for name, (phase, residual) in report.squares.items()},
        "failures": report.failures,
    })
    if not report.passed:
        sys.exit(1)


# --- dispersion ---------------------------------------------------------

@main.command()
@click.argument("equation", type=click.Choice(EQUATIONS,
                                              case_sensitive=False))
@click.option("--scan", "count", type=int, default=20, show_default=True,
              help="Number of seeded momentum draws (two rows each).")
@click.pass_obj
@usage_errors
def dispersion(cfg, equation, count):
    """CSV scan of plane-wave nullspace dimensions on and off shell."""
    if count < 1:
        raise click.UsageError("--scan must be >= 1")
    rows = scan_dispersion(equation, count, cfg.seed)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["p0", "p1", "p2", "p3", "m", "nullspace_dim"])
    for p0, p1, p2, p3, m, dim in rows:
        writer.writerow([f"{v:.12g}" for v in (p0, p1, p2, p3, m)] + [dim])
    click.echo(out.getvalue(), nl=False)


# --- superselection tools -----------------------------------------------

def _cpt_for_flags(spin, u_value, p_mag, massless, photon):
    subbasis = make_subbasis(spin, u_value, p_mag, massless, photon)
    return subbasis, build_representation(subbasis).op_cpt


@main.command("twirl")
@rep_options
@click.option("--input", "source", type=click.Path(exists=True,
                                                   dir_okay=False,
                                                   allow_dash=True),
              default="-", show_default=True,
              help="Density-matrix JSON file ('-' for stdin).")
@click.pass_obj
@usage_errors
def twirl_cmd(cfg, spin, u_value, p_mag, massless, photon, source):
    """Average a density matrix over {1, CPT} and emit the result."""
    import json as json_mod

    with click.open_file(source) as handle:
        data = json_mod.load(handle)
    rho = serialize.density_from_json(data)
    _, u_cpt = _cpt_for_flags(spin, u_value, p_mag, massless, photon)
    _echo_json(serialize.density_to_json(twirl(rho, u_cpt)))


@main.command("rate")
@rep_options
@click.option("--q0", type=float, default=None,
              help="Weight on the + sector (bypasses --state).")
@click.option("--state", "state_path",
              type=click.Path(exists=True, dir_okay=False), default=None,
              help="State-vector JSON file to analyze.")
@click.pass_obj
@usage_errors
def rate_cmd(cfg, spin, u_value, p_mag, massless, photon, q0, state_path):
    """Alignment rate (bits per token) of a resource state."""
    import json as json_mod

    if (q0 is None) == (state_path is None):
        raise click.UsageError("provide exactly one of --q0 or --state")
    if q0 is not None:
        if not 0.0 <= q0 <= 1.0:
            raise click.UsageError("--q0 must lie in [0, 1]")
        q1 = 1.0 - q0
    else:
        with open(state_path, encoding="utf-8") as handle:
            psi = serialize.state_from_json(json_mod.load(handle))
        _, u_cpt = _cpt_for_flags(spin, u_value, p_mag, massless, photon)
        form = standard_form(psi, sector_projectors(u_cpt, cfg.tol), cfg.tol)
        q0, q1 = form.q0, form.q1
    from .ssr import ResourceForm

    rate_bits = alignment_rate(ResourceForm(q0, q1))
    _echo_json({"q0": q0, "q1": q1,
                "rate_bits": "inf" if math.isinf(rate_bits) else rate_bits})


@main.command("distinguish")
@rep_options
@click.option("--q0", type=float, default=0.75, show_default=True,
              help="Weight on the + sector of the probe state.")
@click.option("--copies", type=int, default=1, show_default=True,
              help="Number of probe copies measured jointly.")
@click.pass_obj
@usage_errors
def distinguish_cmd(cfg, spin, u_value, p_mag, massless, photon, q0, copies):
    """Helstrom success probability of telling 1 from CPT with a probe."""
    if not 0.0 <= q0 <= 1.0:
        raise click.UsageError("--q0 must lie in [0, 1]")
    _, u_cpt = _cpt_for_flags(spin, u_value, p_mag, massless, photon)
    psi = standard_state(u_cpt, q0)
    success = helstrom_success(psi, u_cpt, copies)
    _echo_json({"q0": q0, "copies": copies, "success_probability": success})


@main.command("dfs")
@rep_options
@click.option("--sector", type=click.Choice(["+", "-"]), default="+",
              show_default=True, help="Which eigensector to report.")
@click.pass_obj
@usage_errors
def dfs_cmd(cfg, spin, u_value, p_mag, massless, photon, sector):
    """Orthonormal basis of a decoherence-free (eigensector) subspace."""
    _, u_cpt = _cpt_for_flags(spin, u_value, p_mag, massless, photon)
    decomp = sector_projectors(u_cpt, cfg.tol)
    dim = decomp.dim_plus if sector == "+" else decomp.dim_minus
    payload = {"sector": sector, "dimension": dim, "basis": []}
    if dim > 0:
        basis = dfs_subspace(decomp, sector)
        payload["basis"] = [serialize.state_to_json(basis[:, k])
                            for k in range(basis.shape[1])]
    _echo_json(payload)


# --- protocol -----------------------------------------------------------

@main.group("protocol")
def protocol_group():
    """Monte-Carlo communication protocols."""


_MODE_ALIASES = {"random": "random_uniform", "id": "fixed_identity",
                 "cpt": "fixed_cpt"}


@protocol_group.command("run")
@rep_options
@click.option("--encoding", type=click.Choice(["dfs", "naive"]),
              required=True, help="Message encoding strategy.")
@click.option("--mode", type=click.Choice(sorted(_MODE_ALIASES)),
              default="random", show_default=True,
              help="Channel behavior: random g, fixed identity, fixed CPT.")
@click.option("--trials", type=int, default=1000, show_default=True)
@click.option("--token-q0", type=float, default=None,
              help="Sector weight of the frame token; enables the "
                   "token-assisted protocol.")
@click.option("--tokens", type=int, default=1, show_default=True,
              help="Token copies measured per trial.")
@click.option("--dump", "dump_path", type=click.Path(dir_okay=False),
              default=None, help="Write a per-trial CSV to this path.")
@click.pass_obj
@usage_errors
def protocol_run(cfg, spin, u_value, p_mag, massless, photon, encoding, mode,
                 trials, token_q0, tokens, dump_path):
    """Simulate Alice -> Bob transmission through an unknown-g channel."""
    subbasis = make_subbasis(spin, u_value, p_mag, massless, photon)
    u_cpt = build_representation(subbasis).op_cpt
    channel = protocol_mod.ChannelModel(_MODE_ALIASES[mode], u_cpt)
    if encoding == "dfs":
        basis = dfs_subspace(sector_projectors(u_cpt, cfg.tol), "+")
        encoder = lambda a, b: protocol_mod.encode_dfs(a, b, basis)  # noqa: E731
    else:
        encoder = lambda a, b: protocol_mod.encode_naive(a, b, subbasis)  # noqa: E731

    keep = dump_path is not None
    if token_q0 is not None:
        if not 0.0 <= token_q0 <= 1.0:
            raise click.UsageError("--token-q0 must lie in [0, 1]")
        token = standard_state(u_cpt, token_q0)
        report = protocol_mod.run_token_assisted(
            token, tokens, encoder, channel, trials, cfg.seed,
            keep_records=keep)
    else:
        report = protocol_mod.run_protocol(encoder, channel, trials, cfg.seed,
                                           keep_records=keep)

    if dump_path:
        with open(dump_path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(["trial", "g", "guess", "fidelity"])
            for record in report.records:
                guess = "" if record.guessed_cpt is None else \
                    ("cpt" if record.guessed_cpt else "identity")
                writer.writerow([
                    record.index,
                    "cpt" if record.applied_cpt else "identity",
                    guess,
                    f"{record.fidelity:.12g}",
                ])

    payload = {
        "encoding": encoding,
        "mode": _MODE_ALIASES[mode],
        "trials": report.trials,
        "seed": report.seed,
        "mean_fidelity": report.mean_fidelity,
        "std_error": report.std_error,
        "per_g": report.per_g,
    }
    if report.guess_accuracy is not None:
        payload["tokens"] = tokens
        payload["token_q0"] = token_q0
        payload["guess_accuracy"] = report.guess_accuracy
    _echo_json(payload)


if __name__ == "__main__":
    main()
