import math

from qcdyn import FORMULA_IDS, build_report


def test_every_formula_id_appears():
    records = build_report()
    seen = {rec.formula for rec in records}
    assert seen == set(FORMULA_IDS)
    assert len(FORMULA_IDS) == 14


def test_common_entries_reconcile_cleanly():
    for rec in build_report():
        if rec.formula.startswith("common_entry"):
            assert rec.flag == ""
            assert rec.abs_diff <= 1e-9


def test_different_corner_needs_sign_flip():
    records = [r for r in build_report() if r.formula == "different_entry_11"]
    assert records
    for rec in records:
        assert rec.flag == "sign-flip"
        assert abs(rec.transcribed + rec.pipeline) <= 1e-9


def test_different_off_entries_clean():
    for rec in build_report():
        if rec.formula in ("different_entry_12", "different_entry_21", "different_entry_22"):
            assert rec.flag == ""


def test_purity_different_needs_denominator_fix():
    records = [r for r in build_report() if r.formula == "purity_different"]
    assert records and all(rec.flag == "denominator-fix" for rec in records)


def test_purity_common_clean():
    for rec in build_report():
        if rec.formula == "purity_common":
            assert rec.flag == ""
            assert rec.abs_diff <= 1e-8


def test_decoherence_common_clean_where_defined():
    for rec in build_report():
        if rec.formula == "decoherence_common" and not math.isnan(rec.transcribed):
            assert rec.flag == ""
            assert rec.abs_diff <= 1e-8


def test_concurrence_transcriptions_never_reconcile():
    for rec in build_report():
        if rec.formula.startswith("concurrence"):
            assert rec.flag in ("inconsistent", "sqrt-domain", "domain")


def test_decoherence_different_defective():
    records = [r for r in build_report() if r.formula == "decoherence_different"]
    assert records
    for rec in records:
        assert rec.flag in ("inconsistent", "log-domain", "domain")


def test_record_diff_is_consistent():
    for rec in build_report():
        if math.isnan(rec.transcribed):
            assert math.isnan(rec.abs_diff)
        elif rec.formula.endswith(("_11", "_22")) or "_entry_" not in rec.formula:
            # scalar views: diff of real quantities matches |a - b| exactly
            assert abs(abs(rec.transcribed - rec.pipeline) - rec.abs_diff) <= 1e-12
