"""Command-line interface.

Subcommands: eval, invariant, table, verify, encode, decode, check, fit.
Complex flags take a single `re,im` argument.  All randomness flows through
the seeded SplitMix64 generator (see rng.py), so identical flags and seed
reproduce identical output.  Exit codes: 0 success/clean, 1 verification or
integrity failure, 2 usage/domain/format errors (error name on stderr).
"""

from __future__ import annotations

import argparse
import sys

from . import codec, core, estimator
from .errors import DomainError, StasError
from .reconstruct import Window, recover_missing
from .rng import SplitMix64

P_RE_BOUNDS = (0.3, 1.0)
P_IM_BOUNDS = (-1.5, 1.5)
Q_BOUNDS = (-2.0, 2.0)
R_BOUNDS = (1, 15)
T_PER_TRIAL = 5
EXCLUDED_T = (0.0, -1.0, -2.0, -3.0)
DEGENERATE_P_TOL = 1e-6


def _complex_flag(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad complex value {text!r}")


def _fmt_value(z: complex) -> str:
    """`re,im`, or bare `re` when the imaginary part is exactly zero."""
    if z.imag == 0.0:
        return codec.fmt_float(z.real)
    return codec.fmt_complex(z)


def _params_from(args) -> core.StasParams:
    if args.p is None:
        raise DomainError("--p is required for this command")
    return core.StasParams(p=args.p, q1=args.q1, q2=args.q2, r1=args.r1, r2=args.r2)


def _invariant_from(args, series: core.SampleSeries | None) -> complex:
    """The invariant for codec commands: from --p, or estimated from data."""
    if args.estimate:
        if series is None:
            raise DomainError("--estimate needs an input series")
        return core.estimate_invariant(series).a_hat
    if args.p is not None:
        return core.closed_form_invariant(_params_from(args))
    raise DomainError("need --p or --estimate to determine the invariant")


def _read(path: str) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(text)


def cmd_eval(args) -> int:
    params = _params_from(args)
    if args.kind == "s":
        value = core.eval_s(params, args.t)
    else:
        value = core.eval_f(params, args.t)
    print(_fmt_value(value))
    return 0


def cmd_invariant(args) -> int:
    params = _params_from(args)
    if args.t is not None:
        print(_fmt_value(core.invariant_ratio(params, args.t)))
    else:
        print(_fmt_value(core.closed_form_invariant(params)))
    return 0


def cmd_table(args) -> int:
    if args.n_max < 4:
        raise DomainError(f"--n-max must be >= 4, got {args.n_max}")
    print("n\tnumerator\tdenominator\tratio")
    for n in range(4, args.n_max + 1):
        num = (n - 2) * core.seq_a(n - 2) + (n - 3) * core.seq_a(n - 3)
        den = n * core.seq_a(n) + (n - 1) * core.seq_a(n - 1)
        print(f"{n}\t{num}\t{den}\t{num / den}")
    return 0


def _draw_trial_params(rng: SplitMix64) -> tuple[core.StasParams, int]:
    """One trial's parameters in the documented draw order; returns resample count."""
    resampled = 0
    while True:
        p = rng.uniform_complex(*P_RE_BOUNDS, *P_IM_BOUNDS)
        if abs(1.0 + p) >= DEGENERATE_P_TOL:
            break
        resampled += 1
    q1 = rng.uniform_complex(*Q_BOUNDS, *Q_BOUNDS)
    q2 = rng.uniform_complex(*Q_BOUNDS, *Q_BOUNDS)
    r1 = rng.odd_int(*R_BOUNDS)
    r2 = rng.odd_int(*R_BOUNDS)
    return core.StasParams(p=p, q1=q1, q2=q2, r1=r1, r2=r2), resampled


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise DomainError(f"--trials must be >= 1, got {args.trials}")
    if not args.t_min < args.t_max:
        raise DomainError("--t-min must be below --t-max")
    max_dev = 0.0
    resampled = 0
    for trial in range(args.trials):
        rng = SplitMix64.for_trial(args.seed, trial)
        params, n_resampled = _draw_trial_params(rng)
        resampled += n_resampled
        a = core.closed_form_invariant(params)
        for _ in range(T_PER_TRIAL):
            t = rng.uniform(args.t_min, args.t_max)
            while t in EXCLUDED_T:
                t = rng.uniform(args.t_min, args.t_max)
            dev = abs(core.invariant_ratio(params, t) - a) / abs(a)
            max_dev = max(max_dev, dev)
    print(f"trials={args.trials} seed={args.seed} "
          f"t_min={codec.fmt_float(args.t_min)} t_max={codec.fmt_float(args.t_max)} "
          f"resampled={resampled}")
    print(f"max_rel_dev={max_dev:.3e}")
    if max_dev < args.tol:
        print("PASS")
        return 0
    print("FAIL")
    return 1


def cmd_encode(args) -> int:
    series = codec.load_sig1(_read(args.input))
    a = _invariant_from(args, series)
    enc = codec.encode_stream(series, a)
    _write(args.output, codec.dump_stasc1(enc))
    return 0


def cmd_decode(args) -> int:
    enc = codec.load_stasc1(_read(args.input))
    series = codec.decode_stream(enc)
    _write(args.output, codec.dump_sig1(series))
    return 0


def _repair(series: core.SampleSeries, implicated: list[int], a: complex) -> core.SampleSeries:
    """Recompute each implicated sample from a covering window."""
    values = list(series.values)
    n_windows = len(values) - 3
    for j in implicated:
        i = max(0, min(j - 3, n_windows - 1))
        slots = [None if i + m == j else values[i + m] for m in range(4)]
        values[j] = recover_missing(Window(tuple(slots), missing=j - i), a)
    return core.SampleSeries(series.t0, tuple(values), kind="f")


def cmd_check(args) -> int:
    series = codec.load_sig1(_read(args.input))
    a = _invariant_from(args, series)
    findings = codec.detect_errors(series, a, args.tol)
    flagged = [f for f in findings if f.verdict == "flagged"]
    for f in flagged:
        samples = ",".join(str(j) for j in f.implicated_samples)
        print(f"window={f.window_index} residual={f.residual:.6e} samples=[{samples}]")
    if args.repair and flagged:
        if not args.output:
            raise DomainError("--repair needs --output for the repaired series")
        implicated = sorted({j for f in flagged for j in f.implicated_samples})
        _write(args.output, codec.dump_sig1(_repair(series, implicated, a)))
        print(f"repaired=[{','.join(str(j) for j in implicated)}]")
    return 1 if flagged else 0


def cmd_fit(args) -> int:
    series = codec.load_sig1(_read(args.input))
    result = estimator.fit_series(series, r_max=args.r_max)
    if series.step == 1.0:
        report = core.estimate_invariant(series)
    else:
        m = round(1.0 / series.step)
        report = core.estimate_invariant(
            core.SampleSeries(series.t0, series.values[::m], kind=series.kind))
    p = result.params
    print(f"a_hat={codec.fmt_complex(report.a_hat)}")
    print(f"p={codec.fmt_complex(p.p)}")
    print(f"q1={codec.fmt_complex(p.q1)}")
    print(f"q2={codec.fmt_complex(p.q2)}")
    print(f"r1={p.r1}")
    print(f"r2={p.r2}")
    print(f"residual_rms={result.residual_rms:.6e}")
    print(f"p_sign_ambiguous={'true' if result.p_sign_ambiguous else 'false'}")
    ties = ";".join(f"{r1},{r2}" for r1, r2 in result.tied_frequencies)
    print(f"ties={ties}")
    return 0


def _add_param_flags(sub) -> None:
    sub.add_argument("--p", type=_complex_flag, default=None, help="base, as re,im")
    sub.add_argument("--q1", type=_complex_flag, default=0j, help="sine amplitude, re,im")
    sub.add_argument("--q2", type=_complex_flag, default=0j, help="cosine amplitude, re,im")
    sub.add_argument("--r1", type=int, default=1, help="odd sine frequency multiplier")
    sub.add_argument("--r2", type=int, default=1, help="odd cosine frequency multiplier")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stasinv",
        description="Four-point invariant toolkit: evaluation, exact table, "
                    "randomized verification, 4-to-3 codec, integrity checks, fitting.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate f(t) or s(t)")
    _add_param_flags(p_eval)
    p_eval.add_argument("--t", type=float, required=True)
    p_eval.add_argument("--kind", choices=("f", "s"), default="f")
    p_eval.set_defaults(func=cmd_eval)

    p_inv = subs.add_parser("invariant",
                            help="closed-form invariant 1/p^2, or the ratio at --t")
    _add_param_flags(p_inv)
    p_inv.add_argument("--t", type=float, default=None)
    p_inv.set_defaults(func=cmd_invariant)

    p_table = subs.add_parser("table", help="exact rational four-point table")
    p_table.add_argument("--n-max", type=int, default=12)
    p_table.set_defaults(func=cmd_table)

    p_verify = subs.add_parser("verify", help="randomized invariant verification")
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--t-min", type=float, default=-20.0)
    p_verify.add_argument("--t-max", type=float, default=-10.0)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.set_defaults(func=cmd_verify)

    p_enc = subs.add_parser("encode", help="SIG1 -> STASC1 4-to-3 encoding")
    _add_param_flags(p_enc)
    p_enc.add_argument("--input", required=True)
    p_enc.add_argument("--output", required=True)
    p_enc.add_argument("--estimate", action="store_true",
                       help="estimate the invariant from the data")
    p_enc.set_defaults(func=cmd_encode)

    p_dec = subs.add_parser("decode", help="STASC1 -> SIG1 reconstruction")
    p_dec.add_argument("--input", required=True)
    p_dec.add_argument("--output", required=True)
    p_dec.set_defaults(func=cmd_decode)

    p_check = subs.add_parser("check", help="sliding-window integrity check")
    _add_param_flags(p_check)
    p_check.add_argument("--input", required=True)
    p_check.add_argument("--output", default=None)
    p_check.add_argument("--tol", type=float, default=1e-6)
    p_check.add_argument("--estimate", action="store_true")
    p_check.add_argument("--repair", action="store_true",
                         help="rewrite implicated samples via the identity")
    p_check.set_defaults(func=cmd_check)

    p_fit = subs.add_parser("fit", help="recover (p, q1, q2, r1, r2) from a series")
    p_fit.add_argument("--input", required=True)
    p_fit.add_argument("--r-max", type=int, default=estimator.DEFAULT_R_MAX)
    p_fit.set_defaults(func=cmd_fit)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except StasError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
