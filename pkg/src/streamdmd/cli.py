"""Command-line entry point for the benchmark harness."""

import argparse
import sys

from . import __version__
from ._common import DEFAULT_EPS
from .bench import METHODS, SYSTEMS, ExperimentConfig, emit_report, run_experiment
from .numerics import DEFAULT_RCOND


def _methods(text):
    if text.strip() in ("", "none"):
        return ()
    names = tuple(m.strip() for m in text.split(",") if m.strip())
    bad = [m for m in names if m not in METHODS]
    if bad:
        raise argparse.ArgumentTypeError(f"invalid method name(s): {', '.join(bad)}")
    return names


def build_parser():
    p = argparse.ArgumentParser(
        prog="streamdmd",
        description="Compare batch DMD, two-basis streaming DMD and single-basis streaming DMD.",
    )
    p.add_argument("--system", choices=SYSTEMS, default="oscillatory")
    p.add_argument("--methods", type=_methods, default=METHODS,
                   help="comma-separated subset of dmd,sdmd,esdmd (default: all)")
    p.add_argument("--n", type=int, default=100, help="state dimension")
    p.add_argument("--fs", type=float, default=120.0, help="sample rate in Hz")
    p.add_argument("--duration", type=float, default=10.0, help="simulated seconds")
    p.add_argument("--rank", type=int, default=10, help="rank cap of the streaming methods")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPS, help="basis expansion tolerance")
    p.add_argument("--rcond", type=float, default=DEFAULT_RCOND, help="pseudoinverse cutoff")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=5, help="timing passes per method")
    p.add_argument("--out", default="results", help="output directory")
    p.add_argument("--input-csv", default=None, help="trajectory CSV for --system csv")
    p.add_argument("--f1", type=float, default=3.0, help="oscillatory system frequency 1 (Hz)")
    p.add_argument("--f2", type=float, default=7.0, help="oscillatory system frequency 2 (Hz)")
    p.add_argument("--coupling", type=float, default=1.0, help="Kuramoto coupling K")
    p.add_argument("--damping", type=float, default=0.9, help="Kuramoto damping gamma")
    p.add_argument("--time-spectrum", action="store_true",
                   help="also time operator + eigendecomposition per iteration")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = ExperimentConfig(
            system=args.system,
            methods=args.methods,
            n=args.n,
            fs=args.fs,
            duration=args.duration,
            rank=args.rank,
            epsilon=args.epsilon,
            rcond=args.rcond,
            seed=args.seed,
            repeat=args.repeat,
            out=args.out,
            input_csv=args.input_csv,
            f1=args.f1,
            f2=args.f2,
            coupling=args.coupling,
            damping=args.damping,
            time_spectrum=args.time_spectrum,
        )
        report = run_experiment(cfg)
        emit_report(report, cfg.out)
    except (ValueError, OSError, ArithmeticError) as exc:
        print(f"streamdmd: error: {exc}", file=sys.stderr)
        return 1

    summary = report.summary()
    print(f"{cfg.system}: n={report.n_states}, iterations={report.n_iterations}, rank cap={cfg.rank}")
    for name in report.spectra:
        line = f"  {name:6s} rank={report.ranks[name]}"
        if name in report.distances:
            line += f"  distance to dmd={report.distances[name]:.3e}"
        if name in summary:
            s = summary[name]
            line += f"  update {s['mean_us']:.1f} +/- {s['std_us']:.1f} us"
        print(line)
    if "speedup_sdmd_over_esdmd" in summary:
        print(f"  sdmd/esdmd mean time ratio: {summary['speedup_sdmd_over_esdmd']:.2f}")
    print(f"  wrote {cfg.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
