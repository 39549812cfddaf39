"""Command-line front end: ``ncrg spectral|beta|fixed-points|hk``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import fixedpoint as fp
from .frge import ScalingError, apply_duality, extract_betas
from .goldens import golden_equations, reference_points, seed_vector
from .ncalg import Signature
from .regulator import hk_report
from .scalar import Scalar
from .spectral import MAX_M, expansion, raw_expansion
from .truncations import TruncationSpec, builtin

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG = 0, 1, 2

MODELS = ("hermitian1", "fuzzy2d")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    model: str = "fuzzy2d"
    signature: tuple = (2, 0)
    truncation: str | None = None
    k_max: int | None = None
    duality: bool = False
    verify: bool = False
    m: int | None = None
    raw: bool = False
    n_seeds: int = 64
    rng_seed: int = 0
    reference_seeds: bool = True
    filter_relevant: int | None = None
    exclude_marginal: float | None = None
    tol: float = fp.RESIDUAL_TOL
    k: int | None = None
    N: int = 400
    eta: float = 0.0
    out: str | None = None
    format: str = "json"

    def echo(self) -> dict:
        d = asdict(self)
        d["signature"] = list(self.signature)
        return d


def _signature(text: str) -> tuple:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected P,Q got {text!r}") from None
    return p, q


def _truncation(cfg: RunConfig) -> TruncationSpec:
    if cfg.model not in MODELS:
        raise ConfigError(f"unknown model {cfg.model!r}")
    if cfg.truncation:
        try:
            trunc = builtin(cfg.truncation, cfg.signature)
        except KeyError:
            trunc = TruncationSpec.load(cfg.truncation)
    elif cfg.model == "hermitian1":
        if cfg.signature != (1, 0):
            raise ConfigError("hermitian1 has a single Hermitian letter")
        trunc = builtin("hermitian1")
    else:
        try:
            Signature.from_pq(*cfg.signature)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        trunc = builtin("fuzzy2d", cfg.signature)
    if cfg.k_max is not None:
        if cfg.k_max < 1:
            raise ConfigError("k_max must be positive")
        trunc = trunc.with_fp_order(cfg.k_max)
    return trunc


def _use_duality(cfg: RunConfig, trunc: TruncationSpec) -> bool:
    sig = trunc.signature
    if cfg.duality and not (sig.n == 2 and sig.e[0] == sig.e[1]):
        raise ConfigError(f"duality needs signature (2,0) or (0,2), got {sig}")
    return cfg.duality


# commands


def cmd_spectral(cfg: RunConfig) -> tuple:
    m = cfg.m
    if m is None or m < 2 or m % 2 or m > MAX_M:
        raise ConfigError(f"m must be even in 2..{MAX_M}, got {m}")
    try:
        sig = Signature.from_pq(*cfg.signature)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    ex = raw_expansion(m, sig) if cfg.raw else expansion(m, sig)
    rows = [{"operator": op, "coefficient": c} for op, c in ex.rows()]
    return {"m": m, "normalization": "1/2 Tr D^m" if cfg.raw else "1/(4m) Tr D^m", "terms": rows}, None


def _golden_diff(system, trunc: TruncationSpec) -> dict:
    gold = golden_equations(cfg_model(trunc), trunc.signature)
    mine = system.equations()
    diff = {}
    for k in sorted(set(gold) | set(mine)):
        if k not in mine:
            diff[k] = "missing"
        elif k not in gold:
            diff[k] = "not in reference"
        elif mine[k] != gold[k]:
            diff[k] = str(mine[k] - gold[k])
    return diff


def cfg_model(trunc: TruncationSpec) -> str:
    return "hermitian1" if trunc.signature.n == 1 else "fuzzy2d"


def cmd_beta(cfg: RunConfig) -> tuple:
    trunc = _truncation(cfg)
    system = extract_betas(trunc)
    diff = _golden_diff(system, trunc) if cfg.verify else None
    if _use_duality(cfg, trunc):
        system = apply_duality(system)
    res = system.to_json()
    res["count"] = len(system.couplings) + len(system.eta)
    return res, diff


def _point_row(system: fp.PolySystem, point: fp.FixedPoint, rep: fp.StabilityReport) -> dict:
    return {
        "couplings": {k: float(v) for k, v in point.couplings.items()},
        "eta": float(point.eta),
        "residual": float(point.residual),
        "theta": [t if isinstance(t, float) else [t.real, t.imag] for t in rep.sorted_theta()],
        "relevant": rep.relevant,
        "seed": point.seed,
    }


def cmd_fixed_points(cfg: RunConfig) -> tuple:
    if cfg.n_seeds < 1:
        raise ConfigError("--seeds must be at least 1")
    trunc = _truncation(cfg)
    system = extract_betas(trunc)
    sig = trunc.signature
    if sig.n == 2 and sig.e[0] == sig.e[1]:
        system = apply_duality(system)  # the reduced system is the one analysed
    poly = fp.PolySystem.compile(system)
    extra = []
    if cfg.reference_seeds:
        for p in reference_points(cfg_model(trunc), cfg.signature):
            extra.append(seed_vector(p, poly.variables, system.dual_of))
    points = fp.multistart_scan(poly, cfg.n_seeds, cfg.rng_seed, extra_seeds=extra, tol=cfg.tol)
    crit = fp.Criteria(relevant=cfg.filter_relevant, marginal_tol=cfg.exclude_marginal)
    rows = [_point_row(poly, p, r) for p, r in fp.classify(poly, points, crit)]
    rows.sort(key=lambda r: (r["relevant"], r["eta"], sorted(r["couplings"].items())))
    return {"variables": poly.variables, "found": len(points), "points": rows}, None


def cmd_hk(cfg: RunConfig) -> tuple:
    if cfg.k not in (1, 2, 3):
        raise ConfigError(f"k must be 1, 2 or 3, got {cfg.k}")
    if cfg.N < 2:
        raise ConfigError("N must be at least 2")
    rep = hk_report(cfg.k, cfg.N, cfg.eta)
    half = hk_report(cfg.k, max(2, cfg.N // 2), cfg.eta)
    res = rep.to_json()
    # against the lattice sum's own N -> ∞ limit, which equals the closed form only at η = 0
    res["error_ratio_vs_half_N"] = (abs(half.numeric - half.continuum) /
                                     max(abs(rep.numeric - rep.continuum), 1e-300))
    return res, None


COMMANDS = {"spectral": cmd_spectral, "beta": cmd_beta, "fixed-points": cmd_fixed_points, "hk": cmd_hk}


# output


def _table(command: str, results: dict, diff) -> str:
    lines = []
    if command == "spectral":
        lines.append(f"# m={results['m']} ({results['normalization']})")
        lines += [f"{r['operator']:<16} {r['coefficient']}" for r in results["terms"]]
    elif command == "beta":
        for k, v in results["eta"].items():
            lines.append(f"{k} = {v}")
        for k, v in results["beta"].items():
            lines.append(f"beta_{k} = {v}")
    elif command == "fixed-points":
        for r in results["points"]:
            nz = {k: round(v, 6) for k, v in r["couplings"].items() if abs(v) > 1e-12}
            th = ", ".join(f"{t:+.6f}" if isinstance(t, float) else f"{t[0]:+.6f}{t[1]:+.6f}i"
                           for t in r["theta"][:4])
            lines.append(f"eta={r['eta']:+.6f} relevant={r['relevant']} theta=[{th}, ...] {nz}")
        lines.append(f"# {len(results['points'])} of {results['found']} solutions pass the criteria")
    elif command == "hk":
        lines += [f"{k}: {v}" for k, v in results.items()]
    if diff is not None:
        lines.append("# verification: " + ("OK" if not diff else f"{len(diff)} mismatches"))
        lines += [f"  {k}: {v}" for k, v in diff.items()]
    return "\n".join(lines)


def _default(o):
    if isinstance(o, (Scalar,)):
        return str(o)
    if isinstance(o, np.generic):
        return o.item()
    raise TypeError(type(o).__name__)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", choices=MODELS, default="fuzzy2d")
    common.add_argument("--signature", type=_signature, default=None, metavar="P,Q")
    common.add_argument("--truncation", default=None, help="builtin name or JSON file")
    common.add_argument("--kmax", type=int, default=None, dest="k_max")
    common.add_argument("--out", default=None, metavar="FILE")
    common.add_argument("--format", choices=("json", "table"), default="json")

    ap = argparse.ArgumentParser(prog="ncrg", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("spectral", parents=[common], help="chord-diagram expansion of Tr D^m")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--raw", action="store_true", help="report 1/2 Tr D^m instead of 1/(4m) Tr D^m")

    b = sub.add_parser("beta", parents=[common], help="β-functions and η-equations")
    b.add_argument("--duality", action="store_true")
    b.add_argument("--verify", action="store_true", help="diff against the embedded reference")

    f = sub.add_parser("fixed-points", parents=[common], help="multistart Newton and classification")
    f.add_argument("--seeds", type=int, default=64, dest="n_seeds")
    f.add_argument("--rng-seed", type=int, default=0)
    f.add_argument("--filter-relevant", type=int, default=None, metavar="K")
    f.add_argument("--exclude-marginal", type=float, nargs="?", const=1e-4, default=None, metavar="TOL",
                   help="drop points with some |θ| < TOL (non-isolated solution families)")
    f.add_argument("--no-reference-seeds", action="store_false", dest="reference_seeds")
    f.add_argument("--tol", type=float, default=fp.RESIDUAL_TOL)

    h = sub.add_parser("hk", parents=[common], help="regulator sums h_k")
    h.add_argument("--k", type=int, required=True)
    h.add_argument("--N", type=int, default=400)
    h.add_argument("--eta", type=float, default=0.0)
    return ap


def config_from_args(args: argparse.Namespace) -> RunConfig:
    d = {k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__ and v is not None}
    if "signature" not in d:
        d["signature"] = (1, 0) if d.get("model") == "hermitian1" else (2, 0)
    return RunConfig(**d)


def run(cfg: RunConfig) -> tuple:
    """``(document, exit_code)`` for a configuration."""
    results, diff = COMMANDS[cfg.command](cfg)
    doc = {"command": cfg.command, "config_echo": cfg.echo(), "results": results}
    code = EXIT_OK
    if diff is not None:
        doc["golden_diff"] = diff
        code = EXIT_MISMATCH if diff else EXIT_OK
    return doc, code


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    cfg = config_from_args(args)
    try:
        doc, code = run(cfg)
    except (ConfigError, ScalingError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"ncrg: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if cfg.format == "json":
        text = json.dumps(doc, indent=2, default=_default)
    else:
        text = _table(cfg.command, doc["results"], doc.get("golden_diff"))
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
