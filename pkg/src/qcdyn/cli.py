"""Command-line front end: run a declarative configuration file.

Usage: ``qcdyn CONFIG`` where CONFIG is a document in the format described
by :mod:`qcdyn.config`.  Exit codes: 0 success, 1 parse/validation failure,
2 runtime numerical failure, 3 I/O failure.
"""

import argparse
import sys
from pathlib import Path

from .averaging import CouplingModel
from .config import RunConfig, dumps_config, load_config
from .errors import (
    ConvergenceError,
    DomainError,
    NotHermitianError,
    ParseError,
    PhysicalityError,
    QuadratureError,
    UnknownAxisError,
    ValidationError,
)
from .output import (
    write_events_csv,
    write_reconciliation_csv,
    write_series_csv,
    write_trace_csv,
)
from .reconcile import build_report
from .scan import (
    MeasureSeries,
    concurrence_function,
    detect_esd_esb,
    fluctuation_trace,
    sweep,
    time_series,
)
from .svgchart import line_chart, save_chart

_NUMERICAL_ERRORS = (
    PhysicalityError,
    NotHermitianError,
    ConvergenceError,
    QuadratureError,
    UnknownAxisError,
    DomainError,
    FloatingPointError,
)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="qcdyn",
        description="Two-qubit correlation dynamics under static classical disorder.",
    )
    parser.add_argument("config", help="path to a run configuration file")
    args = parser.parse_args(argv)

    try:
        cfg = load_config(args.config)
    except (ParseError, ValidationError) as exc:
        print(f"qcdyn: config error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"qcdyn: cannot read config: {exc}", file=sys.stderr)
        return 3

    try:
        run(cfg)
    except _NUMERICAL_ERRORS as exc:
        print(f"qcdyn: numerical failure: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"qcdyn: I/O failure: {exc}", file=sys.stderr)
        return 3
    return 0


def run(cfg: RunConfig) -> None:
    """Execute one subcommand and write its artifacts to the output directory."""
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "effective.cfg", "w", encoding="utf-8", newline="") as fh:
        fh.write(dumps_config(cfg))

    if cfg.subcommand == "evolve":
        series = time_series(cfg.model, cfg.system, cfg.noise, cfg.grid, cfg.quadrature)
        write_series_csv(out / "series.csv", series)
        if cfg.emit_svg:
            _series_chart(out / "series.svg", series, "measure dynamics")
    elif cfg.subcommand == "sweep":
        results = sweep(
            cfg.sweep_axis, cfg.sweep_values, cfg.model, cfg.system, cfg.noise,
            cfg.grid, cfg.quadrature,
        )
        for value, series in zip(cfg.sweep_values, results):
            stem = f"sweep_{cfg.sweep_axis}_{value!r}"
            write_series_csv(out / f"{stem}.csv", series)
            if cfg.emit_svg:
                _series_chart(
                    out / f"{stem}.svg", series, f"{cfg.sweep_axis} = {value!r}"
                )
    elif cfg.subcommand == "detect":
        series = time_series(cfg.model, cfg.system, cfg.noise, cfg.grid, cfg.quadrature)
        write_series_csv(out / "series.csv", series)
        conc = concurrence_function(cfg.model, cfg.system, cfg.noise, cfg.quadrature)
        events = detect_esd_esb(conc, cfg.grid, cfg.threshold)
        write_events_csv(out / "events.csv", events)
        if cfg.emit_svg:
            _series_chart(out / "series.svg", series, "measure dynamics")
    elif cfg.subcommand == "trace":
        if cfg.trace_source == "noiseless":
            source = cfg.trace_realization
        else:
            source = CouplingModel(cfg.trace_source)
        trace = fluctuation_trace(
            cfg.system, source, cfg.trace_element, cfg.grid,
            noise=cfg.noise, quadrature=cfg.quadrature,
        )
        write_trace_csv(out / "trace.csv", trace)
        if cfg.emit_svg:
            ts = trace.grid.times()
            chart = line_chart(
                [("Re", ts, trace.re_values), ("Im", ts, trace.im_values)],
                title=f"element ({trace.element[0]},{trace.element[1]})",
                x_label="t",
                y_label="value",
            )
            save_chart(out / "trace.svg", chart)
    elif cfg.subcommand == "compare":
        # Audit the transcribed formulas at the quarter points of the grid
        # (t_start excluded so the singular transcriptions stay defined).
        span = cfg.grid.t_end - cfg.grid.t_start
        points = tuple(
            (cfg.system.lam, cfg.noise, cfg.grid.t_start + span * k / 4.0)
            for k in (1, 2, 3, 4)
        )
        records = build_report(points, cfg.quadrature)
        write_reconciliation_csv(out / "reconciliation.csv", records)
    else:  # pragma: no cover - config validation rejects unknown subcommands
        raise ValidationError("subcommand", f"unhandled subcommand {cfg.subcommand!r}")


def _series_chart(path, series: MeasureSeries, title: str) -> None:
    ts = series.times()
    chart = line_chart(
        [
            ("decoherence", ts, series.decoherence),
            ("purity", ts, series.purity),
            ("concurrence", ts, series.concurrence),
        ],
        title=title,
        x_label="t",
        y_label="measure",
    )
    save_chart(path, chart)


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
