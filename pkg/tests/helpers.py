"""Shared test utilities: seeded circuit generators and hypothesis strategies."""
from __future__ import annotations

import random

from hypothesis import strategies as st

from revadder import Gate, GateKind, ancilla, named, new_circuit


def available_kinds(width: int) -> list[GateKind]:
    kinds = [GateKind.NOT]
    if width >= 2:
        kinds.append(GateKind.CNOT)
    if width >= 3:
        kinds.append(GateKind.TOFFOLI)
    return kinds


def random_gate(rng: random.Random, width: int) -> Gate:
    kind = rng.choice(available_kinds(width))
    lines = rng.sample(range(width), kind.n_controls + 1)
    return Gate(kind, tuple(lines[:-1]), lines[-1])


def random_circuit(rng: random.Random, width: int, n_gates: int):
    roles = [
        ancilla() if rng.random() < 0.25 else named(f"in{i}")
        for i in range(width)
    ]
    gates = [random_gate(rng, width) for _ in range(n_gates)]
    return new_circuit(width, roles).extend(gates)


identifiers = st.from_regex(r"[A-Za-z_][A-Za-z0-9_]{0,5}", fullmatch=True)

roles_st = st.one_of(
    st.builds(named, identifiers, st.one_of(st.none(), identifiers)),
    st.builds(ancilla, st.one_of(st.none(), identifiers)),
)


def gates_st(width: int):
    return st.sampled_from(available_kinds(width)).flatmap(
        lambda kind: st.lists(
            st.integers(0, width - 1),
            min_size=kind.n_controls + 1,
            max_size=kind.n_controls + 1,
            unique=True,
        ).map(lambda lines: Gate(kind, tuple(lines[:-1]), lines[-1]))
    )


@st.composite
def circuits_st(draw, min_width: int = 1, max_width: int = 10, max_gates: int = 30):
    width = draw(st.integers(min_width, max_width))
    roles = draw(st.lists(roles_st, min_size=width, max_size=width))
    gates = draw(st.lists(gates_st(width), max_size=max_gates))
    return new_circuit(width, roles).extend(gates)


def bitstates_st(width: int):
    return st.lists(
        st.integers(0, 1), min_size=width, max_size=width
    ).map(tuple)


def assert_schedule_valid(circuit, schedule) -> None:
    """Every gate exactly once; steps conflict-free; program order kept."""
    from revadder import gates_conflict

    seen = [i for step in schedule.timesteps for i in step]
    assert sorted(seen) == list(range(len(circuit.gates)))
    step_of = {}
    for t, step in enumerate(schedule.timesteps):
        assert step, "empty timestep"
        for i in step:
            step_of[i] = t
        for x in step:
            for y in step:
                if x < y:
                    assert not gates_conflict(circuit.gates[x], circuit.gates[y])
    for j in range(len(circuit.gates)):
        for i in range(j):
            if gates_conflict(circuit.gates[i], circuit.gates[j]):
                assert step_of[i] < step_of[j]
