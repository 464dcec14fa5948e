from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from qcipoincare.graded_algebra import NonMinimalGeneratorsError
from qcipoincare.harness import (CHECK_GROUPS, FAMILIES, InstanceError, emit_report, generate_instance,
                                 parse_instance, parse_report, run_battery)
from qcipoincare.resolution import grade
from qcipoincare.series import EQUAL, FAILS, INCONCLUSIVE, SKIPPED

WORKED = (Path(__file__).resolve().parents[1] / "docs" / "worked_instance.txt").read_text()


def test_worked_instance_parses():
    inst = parse_instance(WORKED)
    assert inst.char == 101 and inst.names == ["x"]
    assert inst.base_relations == ["x^3"] and inst.ideal == ["x^2"]
    assert [m.name for m in inst.modules] == ["k"]


def test_worked_instance_roundtrip():
    inst = parse_instance(WORKED)
    again = parse_instance(inst.to_text())
    assert again.canonical() == inst.canonical()
    assert again.content_hash() == inst.content_hash()


def test_content_hash_ignores_spelling():
    a = parse_instance(WORKED)
    b = parse_instance(WORKED.replace("[x^2]", "[1*x*x]"))
    assert a.content_hash() == b.content_hash()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(FAMILIES), st.integers(0, 10_000))
def test_generated_instances_roundtrip(family, seed):
    inst = generate_instance(family, seed)
    again = parse_instance(inst.to_text())
    assert again.content_hash() == inst.content_hash()
    assert generate_instance(family, seed).to_text() == inst.to_text()


@pytest.mark.parametrize("text,kind,line,col", [
    ("char: 100\nvars: x\nideal: [x]\n", "characteristic", 1, 7),
    ("char: 101\nvars: x, y\nideal: [x^2 + y]\n", "inhomogeneous", 3, 15),
    ("char: 101\nvars: x\nideal: [x + * x]\n", "syntax", 3, 13),
    ("char: 101\nvars: x\nideal: [z]\n", "syntax", 3, 9),
    ("vars: x\nideal: [x]\n", "syntax", 1, 1),
    ("char: 101\nvars: x\nideal: [x]\nwhatever\n", "syntax", 4, 1),
])
def test_input_errors_locate_the_problem(text, kind, line, col):
    with pytest.raises(InstanceError) as err:
        parse_instance(text)
    assert (err.value.kind, err.value.line, err.value.col) == (kind, line, col)
    assert f"line {line}, column {col}" in str(err.value)


def test_unknown_check_rejected():
    with pytest.raises(InstanceError):
        parse_instance(WORKED + "checks: theorem-Z\n")


def test_battery_on_worked_instance():
    rep = run_battery(parse_instance(WORKED), hmax=8)
    assert rep.certificate["verdict"] == "q.c.i., not c.i."
    assert rep.certificate["m"] == 1 and rep.invariants["grade"] == 0
    assert list(rep.series["P^Q[k]"]) == [1] * 9
    assert list(rep.series["P^E[R]"]) == [1, 0] * 4 + [1]
    assert all(r.verdict in (EQUAL, "holds-strictly", SKIPPED) for r in rep.results)
    by_name = {r.name: r for r in rep.results}
    assert by_name["inert-grade-factor[k]"].details["orientation"] == "both"
    assert rep.exit_code() == 0


def test_battery_skips_modules_not_killed_by_the_ideal():
    text = WORKED + "module N:\n  twists: [0]\n  relations:\n    [x^3]\n"
    rep = run_battery(parse_instance(text.replace("[x^3]\nideal", "[x^4]\nideal")), hmax=4)
    skipped = [r for r in rep.results if r.name == "module[N]"]
    assert skipped and skipped[0].verdict == SKIPPED


def test_non_minimal_ideal_needs_flag():
    text = "char: 101\nvars: x, y\nideal: [x^2, x^2 + x*y, x*y]\n"
    with pytest.raises(NonMinimalGeneratorsError):
        run_battery(parse_instance(text), hmax=3, dmax=10)
    rep = run_battery(parse_instance(text), hmax=3, dmax=10, minimize=True)
    assert rep.certificate["n"] == 2 and rep.notes


def test_empty_check_selection_is_header_only():
    rep = run_battery(parse_instance(WORKED), checks=[])
    assert not rep.results and not rep.series and rep.exit_code() == 0
    assert "verdict" not in emit_report(rep)


def test_machine_report_roundtrip_and_determinism():
    inst = parse_instance(WORKED)
    a = emit_report(run_battery(inst, hmax=6), "machine", include_timing=False)
    b = emit_report(run_battery(parse_instance(inst.to_text()), hmax=6), "machine", include_timing=False)
    assert a == b
    doc = parse_report(a)
    assert list(doc["series"]["P^Q[k]"]) == [1] * 7
    assert doc["exit_code"] == 0 and "timing" not in doc


def test_check_selection_limits_results():
    rep = run_battery(parse_instance(WORKED), hmax=4, checks=["inert"])
    assert [r.name for r in rep.results] == ["inert[k]"]
    assert rep.checks_selected == ["inert"] and "inert" in CHECK_GROUPS


def test_regular_sequence_family_has_full_grade():
    for seed in range(3):
        inst = generate_instance("regular-sequence", seed, n=2, vars=3)
        assert grade(inst.ideal_obj(), 12) == 2


def test_power_family():
    inst = generate_instance("power-in-hypersurface", 0, a=2, b=5)
    assert inst.base_relations == ["x^5"] and inst.ideal == ["x^2"]
    with pytest.raises(ValueError):
        generate_instance("power-in-hypersurface", 0, a=3, b=3)
    with pytest.raises(ValueError):
        generate_instance("no-such-family", 0)


@settings(max_examples=6, deadline=None)
@given(st.integers(1000, 5000))
def test_random_battery_never_fails(seed):
    rep = run_battery(generate_instance("random-homogeneous", seed), hmax=4, dmax=14,
                      checks=["theorem-B", "large", "inert", "qci", "theorem-A"])
    assert not [r.name for r in rep.results if r.verdict in (FAILS, INCONCLUSIVE)]
