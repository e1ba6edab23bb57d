"""Command line driver: configure a pair, run seeded verification suites,
and emit a line-delimited JSON report.

Report format.  One JSON object per line: first a config echo
(record="config"), then one record per check instance ordered by
(check id, trial, word), last a summary (record="summary") whose
pass/fail/inconclusive counts add up to the number of check records.
Rationals appear as exact "num/den" strings, polynomials as ascending
coefficient arrays of such strings.  Identical configs reproduce identical
reports except for the "ms" timing fields.

Configuration precedence: command line flags, then the key=value config
file, then the SYMPAIR_SEED environment variable (seed only), then
built-in defaults.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, replace

from .chevalley import (
    check_block_charpoly,
    check_charpoly_factorization,
    check_weyl_invariance,
    generation_check,
    sample_inputs,
)
from .exact import det, mat_mul
from .invariants import (
    KroneckerDetInvariant,
    enumerate_trace_words,
    eval_kron_det,
    eval_trace_word,
    invariant_to_string,
    pfaffian_norm,
    rat_str,
    restrict_trace_word,
)
from .pairs import (
    KINDS,
    PairDescriptor,
    random_cartan_point,
    random_g1,
    random_weyl,
    sample_g0,
)
from .sampling import DEFAULT_BOUND, derive_seed, make_rng, rand_matrix
from .tuples import conjugate

CHECK_NAMES = ("restriction", "charpoly", "block_charpoly", "weyl",
               "pfaffian", "kron_det", "generation")

DEFAULTS = {
    "d": 2,
    "trials": 20,
    "seed": 0,
    "bound": DEFAULT_BOUND,
    "max_degree": 4,
    "max_word_length": 2,
    "out": "-",
    "allow_even_m": False,
}


class UsageError(Exception):
    """Invalid configuration, reported before any verification work."""


@dataclass(frozen=True)
class RunConfig:
    kind: str
    n: int
    m: int | None
    d: int
    trials: int
    seed: int
    bound: int
    max_degree: int
    max_word_length: int
    checks: tuple
    out: str
    allow_even_m: bool = False

    @property
    def pair(self) -> PairDescriptor:
        return PairDescriptor(self.kind, self.n, self.m)


@dataclass(frozen=True)
class Report:
    config: dict
    records: tuple
    summary: dict


def applicable_checks(p: PairDescriptor, allow_even_m: bool):
    """Default check set for the case."""
    names = ["restriction", "weyl"]
    if p.kind in ("AI", "AII"):
        names.append("charpoly")
    else:
        names.append("block_charpoly")
    if p.kind == "AII":
        names.append("pfaffian")
    if p.kind == "BDI" and p.n == p.m:
        names.append("kron_det")
    if _generation_allowed(p, allow_even_m):
        names.append("generation")
    return tuple(n for n in CHECK_NAMES if n in names)


def _generation_allowed(p: PairDescriptor, allow_even_m: bool) -> bool:
    if p.kind != "BDI":
        return True
    return allow_even_m or (p.m % 2 == 1 and p.m > p.n)


def validate_config(cfg: RunConfig) -> RunConfig:
    try:
        p = cfg.pair
    except ValueError as e:
        raise UsageError(str(e))
    for field, low in (("d", 0), ("trials", 0), ("bound", 1),
                       ("max_degree", 1), ("max_word_length", 1),
                       ("seed", None)):
        v = getattr(cfg, field)
        if not isinstance(v, int) or (low is not None and v < low):
            raise UsageError(f"{field} must be an integer"
                             + (f" >= {low}" if low is not None else ""))
    for name in cfg.checks:
        if name not in CHECK_NAMES:
            raise UsageError(f"unknown check {name!r}; choose from "
                             + ",".join(CHECK_NAMES))
    if "charpoly" in cfg.checks and p.kind not in ("AI", "AII"):
        raise UsageError("charpoly check applies to AI and AII only")
    if "block_charpoly" in cfg.checks and p.kind not in ("AIII", "BDI", "CI"):
        raise UsageError("block_charpoly check applies to AIII, BDI, CI only")
    if "pfaffian" in cfg.checks and p.kind != "AII":
        raise UsageError("pfaffian check applies to AII only")
    if "kron_det" in cfg.checks and (p.kind != "BDI" or p.n != p.m):
        raise UsageError("kron_det check applies to BDI with n = m only")
    if "generation" in cfg.checks and not _generation_allowed(p, cfg.allow_even_m):
        raise UsageError("BDI generation claims need m odd and m > n; "
                         "pass --allow-even-m to run it anyway")
    return cfg


def _poly_strs(poly):
    return [rat_str(c) for c in poly.coeffs]


def _outcome(ok: bool) -> str:
    return "pass" if ok else "fail"


def _run_restriction(cfg, p):
    words = enumerate_trace_words(p.kind, cfg.d, cfg.max_degree,
                                  cfg.max_word_length)
    records = []
    for k in range(cfg.trials):
        tseed = derive_seed(cfg.seed, "restriction", k)
        pt, g, t = sample_inputs(p, cfg.d, tseed, cfg.bound)
        for w in words:
            t0 = time.perf_counter()
            lhs = eval_trace_word(w, t)
            rhs = restrict_trace_word(w, pt)
            ms = (time.perf_counter() - t0) * 1000.0
            records.append({
                "check": "restriction", "trial": k, "seed": tseed,
                "word": invariant_to_string(w),
                "lhs": rat_str(lhs), "rhs": rat_str(rhs),
                "outcome": _outcome(lhs == rhs), "ms": ms,
            })
    return records


def _run_charpoly(cfg, p):
    words = enumerate_trace_words(p.kind, cfg.d, cfg.max_degree,
                                  cfg.max_word_length)
    records = []
    for k in range(cfg.trials):
        tseed = derive_seed(cfg.seed, "charpoly", k)
        for w in words:
            t0 = time.perf_counter()
            ch = check_charpoly_factorization(p, cfg.d, w.exponents, tseed,
                                              cfg.bound)
            ms = (time.perf_counter() - t0) * 1000.0
            rec = {
                "check": "charpoly", "trial": k, "seed": tseed,
                "word": invariant_to_string(w),
                "lhs": _poly_strs(ch.lhs), "rhs": _poly_strs(ch.rhs),
                "outcome": _outcome(ch.passed), "ms": ms,
            }
            if ch.square_root_ok is not None:
                rec["square_root_ok"] = ch.square_root_ok
            records.append(rec)
    return records


def _run_block_charpoly(cfg, p):
    words = enumerate_trace_words(p.kind, cfg.d, cfg.max_degree,
                                  cfg.max_word_length)
    records = []
    for k in range(cfg.trials):
        tseed = derive_seed(cfg.seed, "block_charpoly", k)
        for w in words:
            t0 = time.perf_counter()
            ch = check_block_charpoly(p, cfg.d, w.pairs, tseed, cfg.bound)
            ms = (time.perf_counter() - t0) * 1000.0
            records.append({
                "check": "block_charpoly", "trial": k, "seed": tseed,
                "word": invariant_to_string(w),
                "lhs": _poly_strs(ch.lhs), "rhs": _poly_strs(ch.rhs),
                "outcome": _outcome(ch.passed), "ms": ms,
            })
    return records


def _run_weyl(cfg, p):
    words = enumerate_trace_words(p.kind, cfg.d, cfg.max_degree,
                                  cfg.max_word_length)
    records = []
    for k in range(cfg.trials):
        tseed = derive_seed(cfg.seed, "weyl", k)
        pt = random_cartan_point(p, cfg.d, derive_seed(tseed, "pt"), cfg.bound)
        weyl = random_weyl(p, derive_seed(tseed, "element"))
        for w in words:
            t0 = time.perf_counter()
            ch = check_weyl_invariance(p, cfg.d, w, weyl, pt)
            ms = (time.perf_counter() - t0) * 1000.0
            records.append({
                "check": "weyl", "trial": k, "seed": tseed,
                "word": invariant_to_string(w),
                "lhs": rat_str(ch.lhs), "rhs": rat_str(ch.rhs),
                "outcome": _outcome(ch.passed), "ms": ms,
            })
    return records


def _run_pfaffian(cfg, p):
    records = []
    for k in range(cfg.trials):
        tseed = derive_seed(cfg.seed, "pfaffian", k)
        t0 = time.perf_counter()
        x = random_g1(p, tseed, cfg.bound)
        nu = pfaffian_norm(x, p)
        dx = det(x)
        ms = (time.perf_counter() - t0) * 1000.0
        records.append({
            "check": "pfaffian", "trial": k, "seed": tseed,
            "word": "det = norm^2",
            "lhs": rat_str(dx), "rhs": rat_str(nu * nu),
            "outcome": _outcome(dx == nu * nu), "ms": ms,
        })
    if cfg.d >= 2:
        for k in range(cfg.trials):
            tseed = derive_seed(cfg.seed, "pfaffian-mult", k)
            t0 = time.perf_counter()
            pt, g, t = sample_inputs(p, cfg.d, tseed, cfg.bound)
            x, y = t.mats[0], t.mats[1]
            lhs = det(mat_mul(x, y))
            rhs = det(x) * det(y)
            nx, ny = pfaffian_norm(x, p), pfaffian_norm(y, p)
            sign = None
            if nx * ny != 0:
                sign = rat_str(pfaffian_norm(mat_mul(x, y), p) / (nx * ny))
            ms = (time.perf_counter() - t0) * 1000.0
            records.append({
                "check": "pfaffian", "trial": cfg.trials + k, "seed": tseed,
                "word": "det multiplicative on commuting pair",
                "lhs": rat_str(lhs), "rhs": rat_str(rhs),
                "outcome": _outcome(lhs == rhs), "sign": sign, "ms": ms,
            })
    return records


def _run_kron_det(cfg, p):
    records = []
    for k in range(cfg.trials):
        tseed = derive_seed(cfg.seed, "kron_det", k)
        t0 = time.perf_counter()
        pt, g, t = sample_inputs(p, cfg.d, tseed, cfg.bound)
        rng = make_rng(derive_seed(tseed, "coeff"))
        r = 1 + k % 2
        inv = KroneckerDetInvariant(
            r, tuple(rand_matrix(rng, r, bound=cfg.bound) for _ in range(cfg.d)))
        h = sample_g0(p, derive_seed(tseed, "h"), cfg.bound)
        lhs = eval_kron_det(inv, t)
        rhs = eval_kron_det(inv, conjugate(t, h))
        ms = (time.perf_counter() - t0) * 1000.0
        records.append({
            "check": "kron_det", "trial": k, "seed": tseed,
            "word": invariant_to_string(inv),
            "lhs": rat_str(lhs), "rhs": rat_str(rhs),
            "outcome": _outcome(lhs == rhs), "ms": ms,
        })
    return records


def _run_generation(cfg, p):
    records = []
    t0 = time.perf_counter()
    reports = generation_check(p, cfg.d, cfg.max_degree,
                               seed=derive_seed(cfg.seed, "generation"),
                               bound=cfg.bound)
    ms = (time.perf_counter() - t0) * 1000.0
    for i, r in enumerate(reports):
        records.append({
            "check": "generation", "trial": i, "degree": r.degree,
            "dim_invariants": r.dim_invariants,
            "dim_spanned": r.dim_spanned, "points": r.points,
            "outcome": r.status, "ms": ms / max(len(reports), 1),
        })
    return records


_RUNNERS = {
    "restriction": _run_restriction,
    "charpoly": _run_charpoly,
    "block_charpoly": _run_block_charpoly,
    "weyl": _run_weyl,
    "pfaffian": _run_pfaffian,
    "kron_det": _run_kron_det,
    "generation": _run_generation,
}


def run(cfg: RunConfig) -> Report:
    """Execute the configured checks; deterministic in the seed."""
    cfg = validate_config(cfg)
    p = cfg.pair
    config_echo = {
        "record": "config", "pair": cfg.kind, "n": cfg.n, "m": cfg.m,
        "d": cfg.d, "trials": cfg.trials, "seed": cfg.seed,
        "bound": cfg.bound, "max_degree": cfg.max_degree,
        "max_word_length": cfg.max_word_length,
        "checks": list(cfg.checks), "allow_even_m": cfg.allow_even_m,
    }
    records = []
    for name in CHECK_NAMES:
        if name in cfg.checks:
            records.extend(_RUNNERS[name](cfg, p))
    counts = {"pass": 0, "fail": 0, "inconclusive": 0}
    for rec in records:
        counts[rec["outcome"]] += 1
    summary = {"record": "summary", "total": len(records), **counts}
    return Report(config_echo, tuple(records), summary)


def emit_report(report: Report, path: str):
    """Line-delimited JSON: config echo, check records, trailing summary."""
    lines = [json.dumps(report.config, sort_keys=True)]
    lines.extend(json.dumps(rec, sort_keys=True) for rec in report.records)
    lines.append(json.dumps(report.summary, sort_keys=True))
    text = "\n".join(lines) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as f:
            f.write(text)


def _parse_config_file(path: str) -> dict:
    out = {}
    try:
        with open(path) as f:
            raw = f.read()
    except OSError as e:
        raise UsageError(f"cannot read config file: {e}")
    for lineno, line in enumerate(raw.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise UsageError(f"config line {lineno} is not key=value")
        key, _, value = line.partition("=")
        out[key.strip()] = value.strip()
    return out


_INT_KEYS = ("n", "m", "d", "trials", "seed", "bound", "max_degree",
             "max_word_length")


def _coerce_file_values(raw: dict) -> dict:
    vals = {}
    for key, value in raw.items():
        if key in _INT_KEYS:
            try:
                vals[key] = int(value)
            except ValueError:
                raise UsageError(f"config key {key} needs an integer, "
                                 f"got {value!r}")
        elif key == "pair":
            vals["pair"] = value
        elif key == "checks":
            vals["checks"] = value
        elif key == "out":
            vals["out"] = value
        elif key == "allow_even_m":
            if value.lower() not in ("true", "false"):
                raise UsageError("allow_even_m must be true or false")
            vals["allow_even_m"] = value.lower() == "true"
        else:
            raise UsageError(f"unknown config key {key!r}")
    return vals


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sympair",
        description="Exact verification suites for the five classical "
                    "symmetric pairs.")
    parser.add_argument("--pair", choices=KINDS, help="case to verify")
    parser.add_argument("--n", type=int, help="rank parameter n")
    parser.add_argument("--m", type=int,
                        help="second block size (AIII and BDI only)")
    parser.add_argument("--d", type=int, help="tuple length (default 2)")
    parser.add_argument("--trials", type=int,
                        help="seeded trials per check (default 20)")
    parser.add_argument("--seed", type=int, help="master seed (default 0)")
    parser.add_argument("--bound", type=int,
                        help="coefficient bound for sampling (default 5)")
    parser.add_argument("--max-degree", type=int, dest="max_degree",
                        help="total degree cap for generator words")
    parser.add_argument("--max-word-length", type=int, dest="max_word_length",
                        help="length cap for block trace words")
    parser.add_argument("--checks",
                        help="comma list from: " + ",".join(CHECK_NAMES))
    parser.add_argument("--out", help="report path, - for stdout (default)")
    parser.add_argument("--config", help="key=value config file")
    parser.add_argument("--allow-even-m", action="store_true", default=None,
                        dest="allow_even_m",
                        help="run BDI generation despite even or boundary m")
    return parser


def build_config(args) -> RunConfig:
    """Resolve flags over file over environment over defaults."""
    file_vals = _coerce_file_values(_parse_config_file(args.config)) \
        if args.config else {}

    def pick(flag, key, default=None):
        if flag is not None:
            return flag
        if key in file_vals:
            return file_vals[key]
        return default

    kind = pick(args.pair, "pair")
    if kind is None:
        raise UsageError("--pair is required (or pair= in the config file)")
    if kind not in KINDS:
        raise UsageError(f"unknown pair {kind!r}")
    n = pick(args.n, "n")
    if n is None:
        raise UsageError("--n is required (or n= in the config file)")
    seed = pick(args.seed, "seed")
    if seed is None:
        env = os.environ.get("SYMPAIR_SEED")
        if env is not None:
            try:
                seed = int(env)
            except ValueError:
                raise UsageError("SYMPAIR_SEED must be an integer")
        else:
            seed = DEFAULTS["seed"]
    checks_raw = pick(args.checks, "checks")
    allow_even = pick(args.allow_even_m, "allow_even_m",
                      DEFAULTS["allow_even_m"])
    cfg = RunConfig(
        kind=kind,
        n=n,
        m=pick(args.m, "m"),
        d=pick(args.d, "d", DEFAULTS["d"]),
        trials=pick(args.trials, "trials", DEFAULTS["trials"]),
        seed=seed,
        bound=pick(args.bound, "bound", DEFAULTS["bound"]),
        max_degree=pick(args.max_degree, "max_degree",
                        DEFAULTS["max_degree"]),
        max_word_length=pick(args.max_word_length, "max_word_length",
                             DEFAULTS["max_word_length"]),
        checks=(),
        out=pick(args.out, "out", DEFAULTS["out"]),
        allow_even_m=allow_even,
    )
    try:
        p = cfg.pair
    except ValueError as e:
        raise UsageError(str(e))
    if checks_raw is None:
        checks = applicable_checks(p, cfg.allow_even_m)
    else:
        requested = tuple(s.strip() for s in checks_raw.split(",") if s.strip())
        if not requested:
            raise UsageError("empty check list")
        checks = tuple(c for c in CHECK_NAMES if c in requested)
        unknown = set(requested) - set(CHECK_NAMES)
        if unknown:
            raise UsageError("unknown check "
                             + ",".join(sorted(unknown))
                             + "; choose from " + ",".join(CHECK_NAMES))
    return replace(cfg, checks=checks)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        report = run(cfg)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    try:
        emit_report(report, cfg.out)
    except OSError as e:
        print(f"i/o error: {e}", file=sys.stderr)
        return 3
    return 1 if report.summary["fail"] > 0 else 0


if __name__ == "__main__":
    raise SystemExit(main())
