import dataclasses
import random

import pytest
from hypothesis import given, settings, strategies as st

from revadder import (
    DEFAULT_LITERATURE,
    HNG_PUBLISHED,
    TSG_PUBLISHED,
    BatchState,
    CostModel,
    analyze,
    ancilla,
    build_hng_reference,
    build_ppkn,
    build_rca,
    cnot,
    compare_report,
    gates_conflict,
    logical_depth,
    named,
    new_circuit,
    quantum_cost,
    render_comparison_csv,
    render_comparison_text,
    render_metrics_csv,
    render_metrics_text,
    simulate_batch,
    toffoli,
)

from helpers import assert_schedule_valid, bitstates_st, circuits_st

PPKN_SCHEDULE = ((0, 1), (2,), (3, 4), (5,))


def test_quantum_cost_of_empty_circuit():
    assert quantum_cost(new_circuit(1, (named("a"),))) == 0


def test_quantum_cost_ppkn():
    c, _ = build_ppkn()
    assert quantum_cost(c) == 10


def test_quantum_cost_hng_reference():
    c, _ = build_hng_reference()
    assert quantum_cost(c) == 13


def test_quantum_cost_custom_model():
    c, _ = build_ppkn()
    assert quantum_cost(c, CostModel(toffoli_cost=7)) == 12
    assert quantum_cost(c, CostModel(cnot_cost=0, toffoli_cost=0)) == 0


def test_conflict_rule():
    # Target into the other gate's control, either direction: conflict.
    assert gates_conflict(cnot(2, 0), cnot(0, 3))
    assert gates_conflict(cnot(0, 3), cnot(2, 0))
    # Same target: conflict.
    assert gates_conflict(cnot(0, 3), cnot(1, 3))
    # Shared control only: no conflict.
    assert not gates_conflict(cnot(2, 0), cnot(2, 1))
    assert not gates_conflict(toffoli(0, 1, 2), toffoli(0, 1, 3))
    # Disjoint lines: no conflict.
    assert not gates_conflict(cnot(0, 1), cnot(2, 3))


def test_logical_depth_empty():
    depth, schedule = logical_depth(new_circuit(2, (named("a"), named("b"))))
    assert depth == 0
    assert schedule.timesteps == ()


def test_logical_depth_ppkn():
    c, _ = build_ppkn()
    depth, schedule = logical_depth(c)
    assert depth == 4
    assert schedule.timesteps == PPKN_SCHEDULE


def test_logical_depth_hng_reference_is_serial():
    c, _ = build_hng_reference()
    depth, schedule = logical_depth(c)
    assert depth == 5
    assert schedule.timesteps == ((0,), (1,), (2,), (3,), (4,))


def test_logical_depth_parallel_fanout():
    c = new_circuit(3, tuple(named(f"q{i}") for i in range(3)))
    c = c.extend((cnot(0, 1), cnot(0, 2)))
    depth, schedule = logical_depth(c)
    assert depth == 1
    assert schedule.timesteps == ((0, 1),)


def test_analyze_ppkn():
    c, _ = build_ppkn()
    report = analyze(c)
    assert report.gate_count == 6
    assert report.not_count == 0
    assert report.cnot_count == 5
    assert report.toffoli_count == 1
    assert report.quantum_cost == 10
    assert report.logical_depth == 4
    assert report.schedule.timesteps == PPKN_SCHEDULE


def test_analyze_single_toffoli():
    c = new_circuit(3, (named("a"), named("b"), ancilla())).append(
        toffoli(0, 1, 2)
    )
    report = analyze(c)
    assert report.gate_count == 1
    assert report.quantum_cost == 5
    assert report.logical_depth == 1


def test_analyze_rca3():
    c, _ = build_rca(3)
    report = analyze(c)
    assert report.gate_count == 18
    assert report.toffoli_count == 3
    assert report.cnot_count == 15
    assert report.quantum_cost == 30
    assert report.logical_depth == 10


def test_analyze_is_deterministic():
    c, _ = build_rca(4)
    assert analyze(c) == analyze(c)


@given(circuits_st(max_width=8, max_gates=40))
def test_schedule_is_valid_partition(c):
    depth, schedule = logical_depth(c)
    assert depth == schedule.depth == len(schedule.timesteps)
    assert_schedule_valid(c, schedule)


@given(circuits_st(max_width=8, max_gates=40))
def test_depth_bounds(c):
    depth, _ = logical_depth(c)
    assert depth <= len(c.gates)
    if c.gates:
        assert depth >= 1
        busiest = max(
            sum(1 for g in c.gates if g.target == t)
            for t in range(c.width)
        )
        assert depth >= busiest


@settings(max_examples=60)
@given(circuits_st(max_width=8, max_gates=50), st.data())
def test_scheduled_execution_matches_sequential(c, data):
    _, schedule = logical_depth(c)
    order = []
    rng = random.Random(data.draw(st.integers(0, 2**32 - 1)))
    for step in schedule.timesteps:
        shuffled = list(step)
        rng.shuffle(shuffled)
        order.extend(shuffled)
    reordered = dataclasses.replace(
        c, gates=tuple(c.gates[i] for i in order)
    )
    states = data.draw(
        st.lists(bitstates_st(c.width), min_size=1, max_size=16)
    )
    batch = BatchState.from_states(states)
    assert simulate_batch(reordered, batch) == simulate_batch(c, batch)


@given(circuits_st(max_width=6, max_gates=30))
def test_report_counts_are_consistent(c):
    report = analyze(c)
    assert report.gate_count == len(c.gates)
    assert (
        report.not_count + report.cnot_count + report.toffoli_count
        == report.gate_count
    )
    assert report.quantum_cost == (
        report.not_count + report.cnot_count + 5 * report.toffoli_count
    )
    assert report.logical_depth == report.schedule.depth


# ---------------------------------------------------------------- comparison


def _computed_pair():
    ppkn, _ = build_ppkn()
    hng, _ = build_hng_reference()
    return (("PPKN", analyze(ppkn)), ("HNG-reference", analyze(hng)))


def test_compare_rejects_empty_input():
    with pytest.raises(ValueError):
        compare_report(())


def test_compare_row_layout():
    table = compare_report(_computed_pair())
    assert [(r.name, r.provenance) for r in table.rows] == [
        ("PPKN", "computed"),
        ("HNG-reference", "computed"),
        ("HNG", "literature"),
        ("TSG", "literature"),
    ]


def test_compare_ppkn_matches_no_baseline():
    # No published PPKN row ships by default, so nothing to disagree with.
    table = compare_report(_computed_pair())
    assert all(d.name != "PPKN" for d in table.discrepancies)


def test_compare_flags_hng_quantum_cost_once():
    table = compare_report(_computed_pair())
    flags = [d for d in table.discrepancies if d.name == "HNG-reference"]
    assert len(flags) == 1
    (flag,) = flags
    assert flag.metric == "quantum cost"
    assert flag.computed == 13
    assert flag.published == 12
    assert "13" in flag.describe() and "12" in flag.describe()


def test_compare_qc_reduction_ratio():
    table = compare_report(_computed_pair())
    reduction = table.qc_reduction
    assert reduction is not None
    assert reduction.qc == 10
    assert reduction.baseline_qc == 12
    assert reduction.ratio == pytest.approx((12 - 10) / 12)
    assert round(100 * reduction.ratio) == 17
    text = reduction.describe()
    assert "16.7%" in text
    assert "17%" in text
    assert "(12 - 10) / 12" in text


def test_compare_custom_literature_can_agree():
    row = dataclasses.replace(HNG_PUBLISHED, quantum_cost=13)
    ppkn, _ = build_ppkn()
    hng, _ = build_hng_reference()
    table = compare_report(
        (("HNG-reference", analyze(hng)),), literature=(row,)
    )
    assert table.discrepancies == ()
    assert table.qc_reduction is None


def test_published_rows_frozen_values():
    assert (HNG_PUBLISHED.gate_count, HNG_PUBLISHED.toffoli_count) == (5, 2)
    assert (HNG_PUBLISHED.quantum_cost, HNG_PUBLISHED.logical_depth) == (12, 5)
    assert (TSG_PUBLISHED.gate_count, TSG_PUBLISHED.quantum_cost) == (6, 14)
    assert DEFAULT_LITERATURE == (HNG_PUBLISHED, TSG_PUBLISHED)


def test_render_comparison_text():
    text = render_comparison_text(compare_report(_computed_pair()))
    lines = text.splitlines()
    assert lines[0].split() == [
        "name", "provenance", "gates", "toffoli", "cnot", "not", "qc", "depth",
    ]
    assert any(line.startswith("discrepancy:") for line in lines)
    assert any("16.7%" in line for line in lines)
    # Literature rows leave unpublished cells blank.
    hng_line = next(line for line in lines if line.startswith("HNG "))
    assert "-" in hng_line


def test_render_comparison_csv():
    out = render_comparison_csv(compare_report(_computed_pair()))
    lines = out.splitlines()
    assert lines[0] == "name,provenance,gates,toffoli,cnot,not,qc,depth"
    assert "PPKN,computed,6,1,5,0,10,4" in lines
    assert "HNG,literature,5,2,,,12,5" in lines
    assert out == render_comparison_csv(compare_report(_computed_pair()))


def test_render_metrics_text_with_gates():
    c, _ = build_ppkn()
    text = render_metrics_text(analyze(c), c)
    assert "quantum cost  10" in text
    assert "logical depth 4" in text
    assert "step 1: g0 cnot 2 0 | g1 cnot 2 1" in text
    assert "step 2: g2 toffoli 0 1 3" in text
    assert "step 4: g5 cnot 1 0" in text


def test_render_metrics_csv_schedule_column():
    c, _ = build_ppkn()
    out = render_metrics_csv(analyze(c))
    lines = out.splitlines()
    assert lines[0] == "gates,toffoli,cnot,not,qc,depth,schedule"
    assert lines[1] == "6,1,5,0,10,4,0 1|2|3 4|5"
