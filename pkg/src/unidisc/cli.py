"""Command line front end.

Four subcommands, all driven by a small JSON config describing the pair of
unitaries:

    unidisc analyze   --input cfg.json --out report.json [--svg hull.svg]
    unidisc sweep     --input cfg.json --axis vx --grid 0:0.785:33 --out sweep.csv
    unidisc verify    --input cfg.json --seed 42 --out verdict.json
    unidisc decompose --input cfg.json --out canon.json

Exit codes: 0 on success, 2 when strict diagonal mode rejects the pair,
1 for any other input or schema problem.  Output files are written
atomically and contain no timestamps, so reruns on the same config are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace

import numpy as np

from .canonical import (
    bell_diagonal_phases,
    canonical_decompose,
    eigenphases_from_d,
    interaction_unitary,
    is_diagonal_form,
)
from .config import TOL_PERFECT
from .discrimination import distinguishability, fidelity_global, fidelity_local, full_report
from .errors import NonDiagonalProduct, SchemaError, UnidiscError
from .gates import named_gate
from .hull import analyze as hull_analyze
from .oracle import OracleConfig, brute_fidelity_global, brute_fidelity_product, brute_helstrom
from .states import Priors, check_unitary
from .svgrender import render_hull_svg

Array = np.ndarray

SCHEMA_VERSION = 1
SEED_ENV_VAR = "UNI2Q_SEED"
VERIFY_TOLERANCE = 1e-5

_CONFIG_KEYS = {"schema", "u1", "u2", "priors", "oracle", "strict_diagonal"}
_GATE_KEYS = {"name", "angle", "angles", "interaction", "matrix"}
_ORACLE_KEYS = {"seed", "coarse_samples", "refine_starts", "refine_sweeps", "refine_step", "refine_shrink", "tol"}
_AXES = {"vx": 0, "vy": 1, "vz": 2}


# ---------------------------------------------------------------- config ---


@dataclass(frozen=True)
class RunConfig:
    u1: Array
    u2: Array
    u1_spec: dict
    u2_spec: dict
    priors: Priors
    oracle: OracleConfig
    strict_diagonal: bool


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SchemaError(message)


def _matrix_from_json(rows: object) -> Array:
    _require(isinstance(rows, list) and len(rows) == 4, "matrix must be a 4 x 4 array")
    out = np.empty((4, 4), dtype=complex)
    for i, row in enumerate(rows):
        _require(isinstance(row, list) and len(row) == 4, "matrix must be a 4 x 4 array")
        for j, cell in enumerate(row):
            _require(
                isinstance(cell, list) and len(cell) == 2 and all(isinstance(v, (int, float)) for v in cell),
                "matrix entries must be [re, im] pairs",
            )
            out[i, j] = complex(cell[0], cell[1])
    return out


def gate_from_spec(spec: object) -> Array:
    """A 4 x 4 unitary from one gate description in the config."""
    _require(isinstance(spec, dict), "gate spec must be an object")
    unknown = set(spec) - _GATE_KEYS
    _require(not unknown, f"unknown gate spec keys: {sorted(unknown)}")
    kinds = [k for k in ("name", "interaction", "matrix") if k in spec]
    _require(len(kinds) == 1, "gate spec needs exactly one of: name, interaction, matrix")
    if "name" in spec:
        _require(isinstance(spec["name"], str), "gate name must be a string")
        angles: tuple[float, ...] = ()
        if "angle" in spec:
            _require("angles" not in spec, "give either angle or angles, not both")
            _require(isinstance(spec["angle"], (int, float)), "angle must be a number")
            angles = (float(spec["angle"]),)
        elif "angles" in spec:
            _require(
                isinstance(spec["angles"], list) and all(isinstance(a, (int, float)) for a in spec["angles"]),
                "angles must be a list of numbers",
            )
            angles = tuple(float(a) for a in spec["angles"])
        return named_gate(spec["name"], angles)
    _require("angle" not in spec and "angles" not in spec, "angles only apply to named gates")
    if "interaction" in spec:
        v = spec["interaction"]
        _require(
            isinstance(v, list) and len(v) == 3 and all(isinstance(a, (int, float)) for a in v),
            "interaction must be [vx, vy, vz]",
        )
        return interaction_unitary(np.array(v, dtype=float))
    return check_unitary(_matrix_from_json(spec["matrix"]), 4)


def load_config(path: str) -> RunConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read config: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"config is not valid JSON: {exc}") from exc
    _require(isinstance(raw, dict), "config must be a JSON object")
    unknown = set(raw) - _CONFIG_KEYS
    _require(not unknown, f"unknown config keys: {sorted(unknown)}")
    _require(raw.get("schema", SCHEMA_VERSION) == SCHEMA_VERSION, f"unsupported schema version {raw.get('schema')!r}")
    _require("u2" in raw, "config needs a u2 gate spec")
    u1_spec = raw.get("u1", {"name": "identity"})
    u2_spec = raw["u2"]
    u1 = gate_from_spec(u1_spec)
    u2 = gate_from_spec(u2_spec)
    priors = Priors()
    if "priors" in raw:
        p = raw["priors"]
        _require(
            isinstance(p, dict) and set(p) == {"q1", "q2"} and all(isinstance(p[k], (int, float)) for k in p),
            "priors must be an object with numeric q1 and q2",
        )
        priors = Priors(q1=float(p["q1"]), q2=float(p["q2"]))
    oracle_cfg = OracleConfig()
    if "oracle" in raw:
        o = raw["oracle"]
        _require(isinstance(o, dict), "oracle settings must be an object")
        unknown = set(o) - _ORACLE_KEYS
        _require(not unknown, f"unknown oracle keys: {sorted(unknown)}")
        oracle_cfg = OracleConfig(**o)
    strict = raw.get("strict_diagonal", False)
    _require(isinstance(strict, bool), "strict_diagonal must be a boolean")
    return RunConfig(
        u1=u1, u2=u2, u1_spec=u1_spec, u2_spec=u2_spec,
        priors=priors, oracle=oracle_cfg, strict_diagonal=strict,
    )


def _resolve_seed(flag_seed: int | None, cfg: RunConfig) -> OracleConfig:
    # precedence: --seed flag, then UNI2Q_SEED, then the config file
    if flag_seed is not None:
        return replace(cfg.oracle, seed=flag_seed)
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return replace(cfg.oracle, seed=int(env))
        except ValueError as exc:
            raise SchemaError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from exc
    return cfg.oracle


# ------------------------------------------------------------- serializing ---


def _vec(v: Array) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=complex)]


def _mat(m: Array) -> list:
    return [_vec(row) for row in np.asarray(m, dtype=complex)]


def _floats(v: Array | None) -> list | None:
    return None if v is None else [float(x) for x in np.asarray(v, dtype=float)]


def _write_text(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _write_json(path: str, payload: dict) -> None:
    _write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


# ------------------------------------------------------------- subcommands ---


def run_analyze(cfg: RunConfig, svg_path: str | None = None) -> dict:
    rep = full_report(
        cfg.u1, cfg.u2,
        priors=cfg.priors,
        strict_diagonal=cfg.strict_diagonal,
        oracle_config=cfg.oracle,
    )
    payload = {
        "schema": SCHEMA_VERSION,
        "inputs": {"u1": cfg.u1_spec, "u2": cfg.u2_spec},
        "priors": {"q1": rep.priors.q1, "q2": rep.priors.q2},
        "diagonal_form": rep.diagonal_form,
        "method_global": rep.method_global,
        "method_local": rep.method_local,
        "spectrum_phases": _floats(rep.spectrum_phases),
        "interaction": _floats(rep.interaction),
        "fidelity_global": rep.fidelity_global,
        "fidelity_local": rep.fidelity_local,
        "distinguishability_global": rep.distinguishability_global,
        "distinguishability_local": rep.distinguishability_local,
        "success_global": rep.success_global,
        "success_local": rep.success_local,
        "perfect_global": rep.perfect_global,
        "perfect_local": rep.perfect_local,
        "min_repetitions": rep.min_repetitions,
        "repetition_status": rep.repetition_status,
        "input_global": _vec(rep.input_global),
        "input_local": {
            "alice": _vec(rep.input_local.alice),
            "bob": _vec(rep.input_local.bob),
            "joint": _vec(rep.input_local.joint()),
        },
        "weights_global": _floats(rep.weights_global),
        "weights_local": _floats(rep.weights_local),
    }
    if svg_path is not None:
        if rep.hull_analysis is not None:
            _write_text(svg_path, render_hull_svg(rep.hull_analysis))
        else:
            print("warning: no hull picture for a non-diagonal pair, SVG skipped", file=sys.stderr)
    return payload


def _parse_grid(text: str) -> Array:
    parts = text.split(":")
    _require(len(parts) == 3, "grid must be start:stop:count")
    try:
        start, stop, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise SchemaError(f"bad grid {text!r}: {exc}") from exc
    _require(count >= 1, "grid count must be at least 1")
    return np.linspace(start, stop, count)


def run_sweep(cfg: RunConfig, axis: str, grid: Array) -> str:
    _require(axis in _AXES or axis == "angle", f"axis must be one of {sorted(_AXES)} or 'angle'")
    if axis == "angle":
        _require(
            isinstance(cfg.u2_spec, dict) and "name" in cfg.u2_spec,
            "axis 'angle' needs u2 given as a named gate",
        )
        build = lambda val: gate_from_spec({**cfg.u2_spec, "angle": float(val)})
    else:
        _require(
            isinstance(cfg.u2_spec, dict) and "interaction" in cfg.u2_spec,
            f"axis {axis!r} needs u2 given as an interaction vector",
        )
        base = np.array(cfg.u2_spec["interaction"], dtype=float)
        k = _AXES[axis]

        def build(val: float) -> Array:
            d = base.copy()
            d[k] = val
            return interaction_unitary(d)

    lines = [
        ",".join(
            (
                axis,
                "fidelity_global",
                "fidelity_local",
                "distinguishability_global",
                "distinguishability_local",
                "success_global",
                "success_local",
                "perfect_global",
                "perfect_local",
            )
        )
    ]
    fmt = "{:.12g}".format
    for val in grid:
        u2 = build(float(val))
        fg, _ = fidelity_global(cfg.u1, u2, strict_diagonal=cfg.strict_diagonal, oracle_config=cfg.oracle)
        fl, _ = fidelity_local(cfg.u1, u2, strict_diagonal=cfg.strict_diagonal, oracle_config=cfg.oracle)
        dg = distinguishability(cfg.priors, fg)
        dl = distinguishability(cfg.priors, fl)
        # hull distances are exact zeros at perfection; oracle values only approach it
        diag = is_diagonal_form(cfg.u1.conj().T @ u2)
        pg = fg == 0.0 if diag else fg <= TOL_PERFECT
        pl = fl == 0.0 if diag else fl <= TOL_PERFECT
        lines.append(
            ",".join(
                (
                    fmt(float(val)),
                    fmt(fg),
                    fmt(fl),
                    fmt(dg),
                    fmt(dl),
                    fmt((1 + dg) / 2),
                    fmt((1 + dl) / 2),
                    str(int(pg)),
                    str(int(pl)),
                )
            )
        )
    return "\n".join(lines) + "\n"


def run_verify(cfg: RunConfig, oracle_cfg: OracleConfig) -> dict:
    """Cross-validate the geometric answers against the brute-force oracle."""
    prod = cfg.u1.conj().T @ cfg.u2
    if not is_diagonal_form(prod):
        raise NonDiagonalProduct("verify needs a pair whose product is Bell-diagonal")
    _, lam = bell_diagonal_phases(prod)
    h = hull_analyze(lam)
    res_g = brute_fidelity_global(prod, oracle_cfg)
    res_l = brute_fidelity_product(prod, oracle_cfg)
    gap_g = abs(h.f_global - res_g.value)
    gap_l = abs(h.f_local - res_l.value)
    # independent check of the success-probability formula on the hull witness
    fg, wit = fidelity_global(cfg.u1, cfg.u2)
    formula = (1.0 + distinguishability(cfg.priors, fg)) / 2.0
    direct = brute_helstrom(cfg.priors, cfg.u1 @ wit, cfg.u2 @ wit)
    agree = gap_g <= VERIFY_TOLERANCE and gap_l <= VERIFY_TOLERANCE and abs(formula - direct) <= 1e-10
    return {
        "schema": SCHEMA_VERSION,
        "seed": oracle_cfg.seed,
        "diagonal_form": True,
        "fidelity_global_hull": h.f_global,
        "fidelity_global_oracle": res_g.value,
        "gap_global": gap_g,
        "fidelity_local_hull": h.f_local,
        "fidelity_local_oracle": res_l.value,
        "gap_local": gap_l,
        "helstrom_success_formula": formula,
        "helstrom_success_direct": direct,
        "tolerance": VERIFY_TOLERANCE,
        "agree": agree,
    }


def run_decompose(cfg: RunConfig) -> dict:
    prod = cfg.u1.conj().T @ cfg.u2
    form = canonical_decompose(prod)
    rebuilt = form.reconstruct()
    return {
        "schema": SCHEMA_VERSION,
        "interaction": _floats(form.d),
        "eigenphases": _floats(eigenphases_from_d(form.d)),
        "phase": float(form.phase),
        "ua": _mat(form.ua),
        "ub": _mat(form.ub),
        "va": _mat(form.va),
        "vb": _mat(form.vb),
        "reconstruction_error": float(np.abs(rebuilt - prod).max()),
        "diagonal_form": bool(is_diagonal_form(prod)),
    }


# -------------------------------------------------------------------- main ---


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unidisc",
        description="single-shot distinguishability of two-qubit unitaries",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full discrimination report for one pair")
    p.add_argument("--input", required=True, help="JSON config with the pair")
    p.add_argument("--out", required=True, help="where to write the JSON report")
    p.add_argument("--svg", help="also draw the spectrum hulls to this SVG file")
    p.add_argument("--strict-diagonal", action="store_true", help="fail instead of falling back to the oracle")

    p = sub.add_parser("sweep", help="fidelity curves along one interaction axis")
    p.add_argument("--input", required=True)
    p.add_argument("--axis", required=True, help="vx, vy, vz, or angle")
    p.add_argument("--grid", required=True, help="start:stop:count")
    p.add_argument("--out", required=True, help="where to write the CSV")

    p = sub.add_parser("verify", help="cross-check geometry against the oracle")
    p.add_argument("--input", required=True)
    p.add_argument("--seed", type=int, help="oracle seed (beats UNI2Q_SEED and the config)")
    p.add_argument("--out", required=True, help="where to write the JSON verdict")

    p = sub.add_parser("decompose", help="canonical form of u1' u2")
    p.add_argument("--input", required=True)
    p.add_argument("--out", required=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args.input)
        if args.command == "analyze":
            if args.strict_diagonal:
                cfg = replace(cfg, strict_diagonal=True)
            cfg = replace(cfg, oracle=_resolve_seed(None, cfg))
            _write_json(args.out, run_analyze(cfg, svg_path=args.svg))
        elif args.command == "sweep":
            cfg = replace(cfg, oracle=_resolve_seed(None, cfg))
            _write_text(args.out, run_sweep(cfg, args.axis, _parse_grid(args.grid)))
        elif args.command == "verify":
            oracle_cfg = _resolve_seed(args.seed, cfg)
            _write_json(args.out, run_verify(cfg, oracle_cfg))
        else:
            _write_json(args.out, run_decompose(cfg))
    except NonDiagonalProduct as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnidiscError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
