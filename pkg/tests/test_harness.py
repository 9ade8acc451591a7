import io
import json

import pytest

from eds_lab import constructions as fam
from eds_lab import harness as H
from eds_lab.enumeration import ConstraintSpec, canonical_code, code_str


def hexcode(t):
    return code_str(canonical_code(t))


def test_class_table_sizes():
    assert len(H.class_table(10)) == 106
    assert len(H.select(6, ConstraintSpec(bipartition=(3, 3)))) == 3


def test_t4_3_small_example():
    (rep,) = H.verify("T4.3", 6, 6)
    assert rep.params == {"n": 6, "p": 3, "q": 3}
    assert rep.verdict == H.CONFIRMED
    assert rep.observed_codes == [hexcode(fam.t_s(3, 3, 1))]
    assert rep.observed_value == 205


def test_t2_10_example():
    (rep,) = H.verify("T2.10", 8, 8, {"gamma": 3})
    assert rep.verdict == H.CONFIRMED
    assert rep.observed_value == rep.claimed_value == 383
    assert rep.detail["gamma_equals_beta"] and rep.detail["realizations_isomorphic"]


def test_t2_10_boundary():
    (rep,) = H.verify("T2.10", 4, 4, {"gamma": 1})
    assert rep.verdict == H.BOUNDARY_EXCLUDED
    assert rep.claimed_value == 51 and rep.observed_value == 33
    assert rep.detail["formula_valid"] is False


def test_t4_4_discriminating_point():
    reps = H.verify("T4.4", 15, 15, {"p": 7})
    by_variant = {r.params["variant"]: r for r in reps}
    assert by_variant["rederived"].verdict == H.CONFIRMED
    assert by_variant["rederived"].observed_value == 1734
    assert by_variant["paper"].verdict == H.REFUTED
    assert by_variant["paper"].claimed_value == 1740


def test_t4_4_at_p4_third_minimum_is_hat():
    (rep,) = H.verify("T4.4", 9, 9, {"variant": "rederived"})
    assert rep.verdict == H.REFUTED
    assert rep.detail["T2_isomorphic_T1"] is True
    assert rep.observed_codes == [hexcode(fam.hat_t_s(4, 5, 1))]


def test_class_empty_verdict():
    rep = H._extremal_report("X", {}, [], [fam.path(3)], 4)
    assert rep.verdict == H.CLASS_EMPTY and rep.class_size == 0


def test_uniqueness_failure_lists_all_codes():
    rows = [H.Row(canonical_code(fam.path(5)), 10, 2, 2, 2, (2, 3)), H.Row(canonical_code(fam.star(5)), 10, 4, 1, 1, (1, 4))]
    rep = H._extremal_report("X", {}, rows, [fam.path(5)], 10)
    assert rep.verdict == H.REFUTED
    assert len(rep.observed_codes) == 2


@pytest.mark.parametrize("lemma", H.PROPERTY_SUITES)
def test_property_suites_small(lemma):
    rep = H.property_suite(lemma, 1, 8)
    assert rep.verdict == H.CONFIRMED, rep.detail
    assert rep.observed_value == 0 and rep.class_size > 0


def test_property_caps():
    rep = H.property_suite("L2.6-corona", 1, 12)
    assert rep.params == {"n_min": 1, "n_max": 8}
    with pytest.raises(ValueError):
        H.property_suite("T2.10", 1, 5)


def test_l2_4_single_order():
    rep = H.property_suite("L2.4", 10, 10)
    assert rep.verdict == H.CONFIRMED


def test_unknown_theorem():
    with pytest.raises(ValueError):
        H.verify("T9.9", 4, 6)


def test_parameter_points():
    assert H.parameter_points("T2.11", 4, 9) == [{"n": 4}, {"n": 6}, {"n": 8}]
    assert {"n": 9, "p": 4, "q": 5, "variant": "paper"} in H.parameter_points("T4.4", 9, 9)
    assert H.parameter_points("T3.4", 5, 5) == [{"n": 5, "k": 3}]


def test_extremal_scan_examples():
    scan = H.extremal_scan(7, ConstraintSpec(leaf_count=3))
    assert scan["bottom"] == [{"code": hexcode(fam.balanced_spider(7, 3)), "value": 330}]
    top = H.extremal_scan(7, ConstraintSpec(), bottom_k=0, top_k=1)["top"]
    assert top[0]["code"] == hexcode(fam.path(7))
    pair = H.extremal_scan(6, ConstraintSpec(bipartition=(3, 3)), bottom_k=2)["bottom"]
    assert [r["value"] for r in pair] == [160, 205]
    assert pair[0]["code"] == hexcode(fam.double_star(3, 3))


def test_extremal_scan_other_invariant():
    scan = H.extremal_scan(6, ConstraintSpec(), "wiener", bottom_k=1, top_k=1)
    assert scan["bottom"][0]["value"] == 25 and scan["top"][0]["value"] == 35
    with pytest.raises(ValueError):
        H.extremal_scan(6, ConstraintSpec(), "nope")


def test_ties_ordered_by_code():
    scan = H.extremal_scan(8, ConstraintSpec(), bottom_k=200)
    keys = [(r["value"], r["code"]) for r in scan["bottom"]]
    assert keys == sorted(keys)


def test_report_json_schema_and_roundtrip():
    reps = H.verify("T4.2", 4, 7)
    buf, summary = io.StringIO(), io.StringIO()
    H.emit_report(reps, buf, summary)
    lines = buf.getvalue().splitlines()
    assert len(lines) == len(reps)
    first = json.loads(lines[0])
    assert list(first) == ["theorem", "params", "claimed", "observed", "verdict", "class_size", "ms"]
    assert first["verdict"] == "confirmed" and first["ms"] is None
    assert [r.as_dict() for r in H.read_reports(lines)] == [r.as_dict() for r in reps]
    assert "confirmed: " in summary.getvalue()


def test_timings_fill_ms():
    (rep,) = H.verify("T4.3", 6, 6, timings=True)
    assert isinstance(rep.ms, float)


def test_any_refuted():
    reps = H.verify("T4.4", 9, 9)
    assert H.any_refuted(reps)
    assert not H.any_refuted(H.verify("T4.2", 4, 6))


def test_parallel_matches_serial():
    serial = [r.to_json() for r in H.verify(["T4.3", "T3.4"], 5, 9, jobs=1)]
    parallel = [r.to_json() for r in H.verify(["T4.3", "T3.4"], 5, 9, jobs=3)]
    assert serial == parallel
