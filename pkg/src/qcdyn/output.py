"""CSV writers with shortest round-trip float formatting.

Every number is written as ``repr(float(x))``, the shortest decimal that
parses back to the same binary value, so identical runs produce
byte-identical files.
"""

from collections.abc import Iterable, Sequence

from .reconcile import ReconciliationRecord
from .scan import EsdEvent, FluctuationTrace, MeasureSeries


def format_float(x) -> str:
    return repr(float(x))


def _write_lines(path, header: str, rows: Iterable[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(row + "\n")


def write_series_csv(path, series: MeasureSeries) -> None:
    rows = (
        ",".join(
            (format_float(t), format_float(tr.decoherence), format_float(tr.purity), format_float(tr.concurrence))
        )
        for t, tr in zip(series.times(), series.triples)
    )
    _write_lines(path, "t,decoherence,purity,concurrence", rows)


def write_events_csv(path, events: Sequence[EsdEvent]) -> None:
    rows = (
        ",".join(
            (ev.kind.value, format_float(ev.t_event), format_float(ev.bracket[0]), format_float(ev.bracket[1]))
        )
        for ev in events
    )
    _write_lines(path, "kind,t_event,t_lo,t_hi", rows)


def write_trace_csv(path, trace: FluctuationTrace) -> None:
    rows = (
        ",".join((format_float(t), format_float(re), format_float(im)))
        for t, re, im in zip(trace.grid.times(), trace.re_values, trace.im_values)
    )
    _write_lines(path, "t,re,im", rows)


def write_reconciliation_csv(path, records: Sequence[ReconciliationRecord]) -> None:
    rows = (
        ",".join(
            (
                rec.formula,
                format_float(rec.lam),
                format_float(rec.delta_m),
                format_float(rec.delta_o),
                format_float(rec.t),
                format_float(rec.transcribed),
                rec.flag,
                format_float(rec.pipeline),
                format_float(rec.abs_diff),
            )
        )
        for rec in records
    )
    _write_lines(
        path, "formula,lambda,delta_m,delta_o,t,transcribed,flag,pipeline,abs_diff", rows
    )
