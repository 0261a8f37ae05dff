"""Benchmark harness: drive each method over one trajectory, time the updates,
and compare final-step spectra against batch DMD."""

import csv
import json
import math
import os
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from ._common import DEFAULT_EPS
from .batch import fit_batch
from .esdmd import EfficientStreamingDMD
from .numerics import DEFAULT_RCOND
from .sdmd import StreamingDMD
from .snapshots import load_trajectory_csv, stream_from_trajectory
from .spectrum import dynamic_spectrum, match_spectra
from .systems import KuramotoConfig, OscillatoryConfig, kuramoto_trajectory, oscillatory_trajectory

__all__ = [
    "ExperimentConfig",
    "ExperimentReport",
    "METHODS",
    "STREAMING_METHODS",
    "SYSTEMS",
    "make_trajectory",
    "run_experiment",
    "emit_report",
]

METHODS = ("dmd", "sdmd", "esdmd")
STREAMING_METHODS = {"sdmd": StreamingDMD, "esdmd": EfficientStreamingDMD}
SYSTEMS = ("oscillatory", "kuramoto", "csv")


@dataclass
class ExperimentConfig:
    system: str = "oscillatory"
    methods: tuple = METHODS
    n: int = 100
    fs: float = 120.0
    duration: float = 10.0
    rank: int = 10
    epsilon: float = DEFAULT_EPS
    rcond: float = DEFAULT_RCOND
    seed: int = 0
    repeat: int = 5
    out: str = None
    input_csv: str = None
    f1: float = 3.0
    f2: float = 7.0
    coupling: float = 1.0
    damping: float = 0.9
    time_spectrum: bool = False

    def __post_init__(self):
        self.methods = tuple(self.methods)
        if self.system not in SYSTEMS:
            raise ValueError(f"unknown system {self.system!r}; choose from {', '.join(SYSTEMS)}")
        bad = [m for m in self.methods if m not in METHODS]
        if bad:
            raise ValueError(f"invalid method name(s) {bad}; choose from {', '.join(METHODS)}")
        if self.rank < 2:
            raise ValueError("rank must be at least 2")
        if self.repeat < 1:
            raise ValueError("repeat must be at least 1")
        if self.system == "csv" and not self.input_csv:
            raise ValueError("system 'csv' requires input_csv")

    @property
    def streaming_methods(self):
        return [m for m in METHODS if m in self.methods and m in STREAMING_METHODS]


@dataclass
class ExperimentReport:
    """Everything one benchmark run produces.

    ``timings[method]`` holds per-iteration update times in microseconds,
    minimum over the repeats; ``single_pass_timings[method]`` is the first
    pass alone.
    """

    config: ExperimentConfig
    n_states: int
    n_iterations: int
    spectra: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    single_pass_timings: dict = field(default_factory=dict)
    spectrum_timings: dict = field(default_factory=dict)
    distances: dict = field(default_factory=dict)
    ranks: dict = field(default_factory=dict)

    def summary(self):
        out = {}
        for method, t in self.timings.items():
            single = self.single_pass_timings[method]
            out[method] = {
                "mean_us": float(np.mean(t)),
                "std_us": float(np.std(t)),
                "median_us": float(np.median(t)),
                "single_pass_mean_us": float(np.mean(single)),
                "single_pass_std_us": float(np.std(single)),
                "single_pass_median_us": float(np.median(single)),
            }
            if method in self.spectrum_timings:
                st = self.spectrum_timings[method]
                out[method]["spectrum_mean_us"] = float(np.mean(st))
                out[method]["spectrum_std_us"] = float(np.std(st))
        if "sdmd" in out and "esdmd" in out:
            out["speedup_sdmd_over_esdmd"] = out["sdmd"]["mean_us"] / out["esdmd"]["mean_us"]
        return out


def make_trajectory(cfg):
    if cfg.system == "oscillatory":
        return oscillatory_trajectory(
            OscillatoryConfig(n=cfg.n, f1=cfg.f1, f2=cfg.f2, fs=cfg.fs, duration=cfg.duration, seed=cfg.seed)
        )
    if cfg.system == "kuramoto":
        return kuramoto_trajectory(
            KuramotoConfig(
                n=cfg.n,
                coupling=cfg.coupling,
                damping=cfg.damping,
                fs=cfg.fs,
                duration=cfg.duration,
                seed=cfg.seed,
            )
        )
    if not os.path.exists(cfg.input_csv):
        raise FileNotFoundError(f"input file not found: {cfg.input_csv}")
    return load_trajectory_csv(cfg.input_csv)


def _timed_pass(cls, pairs, cfg):
    model = cls(cfg.rank, cfg.epsilon, cfg.rcond)
    update = model.update_pair
    clock = time.perf_counter_ns
    ticks = np.empty(len(pairs), dtype=np.int64)
    for i, pair in enumerate(pairs):
        t0 = clock()
        update(pair)
        ticks[i] = clock() - t0
    return model, ticks / 1e3


def _spectrum_pass(cls, pairs, cfg):
    # per-iteration operator + eigendecomposition cost, timed apart from the updates
    model = cls(cfg.rank, cfg.epsilon, cfg.rcond)
    clock = time.perf_counter_ns
    ticks = np.empty(len(pairs), dtype=np.int64)
    for i, pair in enumerate(pairs):
        model.update_pair(pair)
        t0 = clock()
        model.spectrum()
        ticks[i] = clock() - t0
    return ticks / 1e3


def run_experiment(cfg, trajectory=None):
    """Run the configured methods over one trajectory.

    `trajectory` overrides the configured system when given.
    """
    T = make_trajectory(cfg) if trajectory is None else np.asarray(trajectory, dtype=float)
    stream = stream_from_trajectory(T)
    pairs = stream.pairs()
    report = ExperimentReport(config=cfg, n_states=T.shape[0], n_iterations=len(pairs))

    batch_spec = None
    if "dmd" in cfg.methods or cfg.streaming_methods:
        X, Y = T[:, :-1], T[:, 1:]
        result = fit_batch(X, Y, min(cfg.rank, *X.shape))
        batch_spec = dynamic_spectrum(result.basis, result.operator)
        if "dmd" in cfg.methods:
            report.spectra["dmd"] = batch_spec
            report.ranks["dmd"] = result.rank

    # passes alternate between methods so slow drift in machine speed hits both
    models = {}
    for rep in range(cfg.repeat):
        for name in cfg.streaming_methods:
            model, t = _timed_pass(STREAMING_METHODS[name], pairs, cfg)
            models[name] = model
            if rep == 0:
                report.single_pass_timings[name] = t
                report.timings[name] = t.copy()
            else:
                np.minimum(report.timings[name], t, out=report.timings[name])

    for name, model in models.items():
        spec = model.spectrum()
        report.spectra[name] = spec
        report.ranks[name] = model.basis.shape[1]
        k = min(cfg.rank, len(spec), len(batch_spec))
        report.distances[name] = match_spectra(spec, batch_spec, k)
        if cfg.time_spectrum:
            report.spectrum_timings[name] = _spectrum_pass(STREAMING_METHODS[name], pairs, cfg)
    return report


# Output ----------------------------------------------------------------------

def _g17(v):
    return f"{v:.17g}"


def _json_safe(v):
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    return v


def report_to_dict(report):
    cfg = asdict(report.config)
    cfg["methods"] = list(cfg["methods"])
    spectra = {}
    for name, s in report.spectra.items():
        spectra[name] = {
            "eigenvalues_re": s.eigenvalues.real.tolist(),
            "eigenvalues_im": s.eigenvalues.imag.tolist(),
            "normalized_frequencies": s.normalized_frequencies.tolist(),
            "amplitudes": s.amplitudes.tolist(),
        }
    return {
        "config": cfg,
        "n_states": report.n_states,
        "n_iterations": report.n_iterations,
        "ranks": report.ranks,
        "spectra": spectra,
        "distance_to_dmd": {k: _json_safe(v) for k, v in report.distances.items()},
        "timing_summary": report.summary(),
        "timing_unit": "microseconds",
    }


def emit_report(report, out_dir, formats=("spectrum", "timing", "json")):
    """Write the report files into `out_dir` and return their paths.

    * ``spectrum_<method>.csv``: ``re,im,normalized_frequency,amplitude``
    * ``timing.csv``: ``iteration`` plus one column per streaming method (microseconds)
    * ``report.json``: config echo, spectra, distances and timing summary
    """
    formats = set(formats)
    written = []
    try:
        os.makedirs(out_dir, exist_ok=True)
        if "spectrum" in formats:
            for name, s in report.spectra.items():
                path = os.path.join(out_dir, f"spectrum_{name}.csv")
                with open(path, "w", newline="") as fh:
                    w = csv.writer(fh)
                    w.writerow(["re", "im", "normalized_frequency", "amplitude"])
                    for lam, f, a in zip(s.eigenvalues, s.normalized_frequencies, s.amplitudes):
                        w.writerow([_g17(lam.real), _g17(lam.imag), _g17(f), _g17(a)])
                written.append(path)
        if "timing" in formats and report.config.methods:
            path = os.path.join(out_dir, "timing.csv")
            names = list(report.timings)
            with open(path, "w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(["iteration"] + names)
                if names:
                    for i in range(report.n_iterations):
                        w.writerow([i + 1] + [_g17(report.timings[m][i]) for m in names])
            written.append(path)
        if "json" in formats:
            path = os.path.join(out_dir, "report.json")
            with open(path, "w") as fh:
                json.dump(report_to_dict(report), fh, indent=2)
            written.append(path)
    except OSError as exc:
        raise OSError(f"failed writing report to {exc.filename or out_dir}: {exc.strerror or exc}") from exc
    return written
