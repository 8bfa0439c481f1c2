"""Input-preserving full adders and their ripple-carry cascade.

`build_ppkn` is the 6-gate, 1-Toffoli full adder mapping
(Cin, A, B, 0) -> (Sum, A, B, Cout); `build_hng_reference` is the
standard 2-Toffoli baseline realizing (A, B, Cin, 0) -> (A, B, Sum, Cout);
`build_rca` chains n adder blocks, each block's carry ancilla feeding the
next block's carry-in line. Everything is checked against plain integer
addition (`oracle_add`), never against the circuits themselves.
"""
from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Literal, Optional, Sequence

from .core import (
    CapacityError,
    Circuit,
    Gate,
    StructuralError,
    ancilla,
    cnot,
    named,
    new_circuit,
    toffoli,
)
from .simulate import (
    EXHAUSTIVE_LINE_LIMIT,
    BatchState,
    all_basis_states,
    is_bijection,
    permutation_of,
    simulate,
    simulate_batch,
)

#: verify_rca enumerates all 2^(2n+1) vectors only up to this operand width.
EXHAUSTIVE_ADDER_BITS = 8

DEFAULT_TRIALS = 10000
DEFAULT_SEED = 0xADD


def oracle_add(a: int, b: int, cin: int, n: int) -> tuple[int, int]:
    """Ground truth: (a + b + cin) as an n-bit sum and a carry-out bit."""
    if n < 1:
        raise ValueError(f"operand width must be >= 1, got {n}")
    if not 0 <= a < (1 << n) or not 0 <= b < (1 << n):
        raise ValueError(f"operands must be {n}-bit, got a={a} b={b}")
    if cin not in (0, 1):
        raise ValueError(f"carry-in must be a bit, got {cin}")
    total = a + b + cin
    return total & ((1 << n) - 1), total >> n


@dataclass(frozen=True)
class FullAdderSpec:
    """Line roles of a 1-bit input-preserving adder.

    The contract: the carry-in line ends up holding Sum, the a and b
    lines are preserved, and the constant-0 ancilla ends up holding Cout.
    """

    cin_line: int
    a_line: int
    b_line: int
    ancilla_line: int

    def __post_init__(self) -> None:
        lines = (self.cin_line, self.a_line, self.b_line, self.ancilla_line)
        if len(set(lines)) != 4 or any(i < 0 for i in lines):
            raise StructuralError(f"adder lines must be distinct: {lines}")


@dataclass(frozen=True)
class AdderLayout:
    """Line assignment of an n-bit ripple-carry adder.

    Sum bit 0 lands on the carry-in line and sum bit i lands on block
    i-1's ancilla; the final ancilla carries Cout. That is how the
    cascade keeps every operand line readable while re-using carry lines
    for the sum.
    """

    n_bits: int
    cin_line: int
    a_lines: tuple[int, ...]
    b_lines: tuple[int, ...]
    ancilla_lines: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n_bits
        if n < 1:
            raise StructuralError(f"adder needs >= 1 bits, got {n}")
        if not (len(self.a_lines) == len(self.b_lines) == len(self.ancilla_lines) == n):
            raise StructuralError("line lists must all have n_bits entries")
        lines = (self.cin_line,) + self.a_lines + self.b_lines + self.ancilla_lines
        if any(i < 0 for i in lines) or len(set(lines)) != 3 * n + 1:
            raise StructuralError(f"adder lines must be distinct: {lines}")

    @property
    def sum_lines(self) -> tuple[int, ...]:
        return (self.cin_line,) + self.ancilla_lines[:-1]

    @property
    def cout_line(self) -> int:
        return self.ancilla_lines[-1]

    @property
    def width(self) -> int:
        return 3 * self.n_bits + 1

    def encode_input(self, a: int, b: int, cin: int) -> int:
        """Integer-encoded input state (line 0 = LSB) for given operands."""
        value = cin << self.cin_line
        for i in range(self.n_bits):
            value |= ((a >> i) & 1) << self.a_lines[i]
            value |= ((b >> i) & 1) << self.b_lines[i]
        return value


def ppkn_gates(cin: int, a: int, b: int, anc: int) -> tuple[Gate, ...]:
    """The 6-gate adder block on four arbitrary lines.

    Two fan-outs from b pre-combine the operands, one Toffoli writes
    (cin^b)(a^b) onto the ancilla, then two more fan-outs restore a and
    cancel the linear b term (leaving the majority carry), and a final
    CNOT completes the sum on the carry-in line.
    """
    return (
        cnot(b, cin),
        cnot(b, a),
        toffoli(cin, a, anc),
        cnot(b, a),
        cnot(b, anc),
        cnot(a, cin),
    )


def build_ppkn() -> tuple[Circuit, FullAdderSpec]:
    """The 1-Toffoli input-preserving full adder on lines (Cin, A, B, 0)."""
    roles = (
        named("Cin", output="Sum"),
        named("A", output="A"),
        named("B", output="B"),
        ancilla(output="Cout"),
    )
    circuit = new_circuit(4, roles).extend(ppkn_gates(0, 1, 2, 3))
    return circuit, FullAdderSpec(cin_line=0, a_line=1, b_line=2, ancilla_line=3)


def build_hng_reference() -> tuple[Circuit, FullAdderSpec]:
    """A standard 2-Toffoli baseline adder on lines (A, B, Cin, 0).

    The carry-in line doubles as a carry control and the sum target, so
    its operations cannot overlap in time; that is what makes this
    netlist one step deeper than the 1-Toffoli adder.
    """
    roles = (
        named("A", output="A"),
        named("B", output="B"),
        named("Cin", output="Sum"),
        ancilla(output="Cout"),
    )
    gates = (
        toffoli(0, 1, 3),
        cnot(0, 1),
        toffoli(1, 2, 3),
        cnot(1, 2),
        cnot(0, 1),
    )
    circuit = new_circuit(4, roles).extend(gates)
    return circuit, FullAdderSpec(cin_line=2, a_line=0, b_line=1, ancilla_line=3)


def canonical_layout(n: int) -> AdderLayout:
    """The cascade's line order: Cin, then (A_i, B_i, ancilla_i) per block."""
    if n < 1:
        raise ValueError(f"adder needs >= 1 bits, got {n}")
    return AdderLayout(
        n_bits=n,
        cin_line=0,
        a_lines=tuple(3 * i + 1 for i in range(n)),
        b_lines=tuple(3 * i + 2 for i in range(n)),
        ancilla_lines=tuple(3 * i + 3 for i in range(n)),
    )


def build_rca(n: int) -> tuple[Circuit, AdderLayout]:
    """n cascaded adder blocks; block i's ancilla is block i+1's carry-in."""
    layout = canonical_layout(n)
    roles: list = [named("Cin", output="Sum0")]
    for i in range(n):
        roles.append(named(f"A{i}", output=f"A{i}"))
        roles.append(named(f"B{i}", output=f"B{i}"))
        label = f"Sum{i + 1}" if i < n - 1 else "Cout"
        roles.append(ancilla(output=label))
    circuit = new_circuit(layout.width, roles)
    carry = layout.cin_line
    for i in range(n):
        circuit = circuit.extend(
            ppkn_gates(carry, layout.a_lines[i], layout.b_lines[i], layout.ancilla_lines[i])
        )
        carry = layout.ancilla_lines[i]
    return circuit, layout


@dataclass(frozen=True)
class Mismatch:
    """One failing test vector: which figure was wrong, and how."""

    a: int
    b: int
    cin: int
    quantity: str  # "sum" | "cout" | "a" | "b"
    expected: int
    actual: int

    def describe(self) -> str:
        return (
            f"a={self.a} b={self.b} cin={self.cin}: {self.quantity} "
            f"expected {self.expected}, got {self.actual}"
        )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a circuit against integer addition."""

    cases: int
    mismatches: tuple[Mismatch, ...]
    bijective: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def failing_rows(self) -> set[tuple[int, int, int]]:
        """Distinct (a, b, cin) assignments with at least one mismatch."""
        return {(m.a, m.b, m.cin) for m in self.mismatches}


def verify_full_adder(circuit: Circuit, spec: FullAdderSpec) -> VerificationReport:
    """Check all 8 operand rows (ancilla forced 0) against `oracle_add`.

    Sum must appear on the carry-in line, Cout on the ancilla, and both
    operand lines must be preserved. The report also carries a full
    basis-state bijectivity result for the circuit.
    """
    lines = (spec.cin_line, spec.a_line, spec.b_line, spec.ancilla_line)
    if max(lines) >= circuit.width:
        raise StructuralError(
            f"adder spec uses line {max(lines)}, circuit width is {circuit.width}"
        )
    if not circuit.roles[spec.ancilla_line].is_ancilla:
        raise StructuralError(
            f"line {spec.ancilla_line} must be a constant-0 ancilla"
        )
    mismatches: list[Mismatch] = []
    for a, b, c in product((0, 1), repeat=3):
        state = [0] * circuit.width
        state[spec.a_line] = a
        state[spec.b_line] = b
        state[spec.cin_line] = c
        out = simulate(circuit, tuple(state))
        want_sum, want_cout = oracle_add(a, b, c, 1)
        for quantity, expected, actual in (
            ("sum", want_sum, out[spec.cin_line]),
            ("cout", want_cout, out[spec.ancilla_line]),
            ("a", a, out[spec.a_line]),
            ("b", b, out[spec.b_line]),
        ):
            if actual != expected:
                mismatches.append(Mismatch(a, b, c, quantity, expected, actual))
    bijective = None
    if circuit.width <= EXHAUSTIVE_LINE_LIMIT:
        bijective = is_bijection(permutation_of(circuit))
    return VerificationReport(8, tuple(mismatches), bijective)


def _set_bit_positions(word: int):
    while word:
        low = word & -word
        yield low.bit_length() - 1
        word ^= low


def _pack(bits) -> int:
    word = 0
    for j, bit in enumerate(bits):
        if bit:
            word |= 1 << j
    return word


def _check_lanes(
    circuit: Circuit,
    layout: AdderLayout,
    in_words: Sequence[int],
    lanes: int,
    sums: Sequence[int],
    operands: Callable[[int], tuple[int, int, int]],
) -> VerificationReport:
    """Word-level comparison of a simulated batch against oracle sums.

    Each checked line yields one expected word; differing words are
    expanded into per-lane counterexample rows only on failure.
    """
    n = layout.n_bits
    out = simulate_batch(circuit, BatchState(tuple(in_words), lanes))
    bad_lanes: dict[str, set[int]] = {"sum": set(), "cout": set(), "a": set(), "b": set()}

    def compare(expected_word: int, line: int, quantity: str) -> None:
        diff = expected_word ^ out.words[line]
        if diff:
            bad_lanes[quantity].update(_set_bit_positions(diff))

    for i, line in enumerate(layout.sum_lines):
        compare(_pack((s >> i) & 1 for s in sums), line, "sum")
    compare(_pack((s >> n) & 1 for s in sums), layout.cout_line, "cout")
    for i in range(n):
        compare(in_words[layout.a_lines[i]], layout.a_lines[i], "a")
        compare(in_words[layout.b_lines[i]], layout.b_lines[i], "b")

    def gather(lane: int, lines: Sequence[int]) -> int:
        return _pack((out.words[line] >> lane) & 1 for line in lines)

    mismatches = []
    for quantity, lanes_bad in bad_lanes.items():
        for j in sorted(lanes_bad):
            a, b, cin = operands(j)
            want_sum, want_cout = oracle_add(a, b, cin, n)
            if quantity == "sum":
                expected, actual = want_sum, gather(j, layout.sum_lines)
            elif quantity == "cout":
                expected, actual = want_cout, (out.words[layout.cout_line] >> j) & 1
            elif quantity == "a":
                expected, actual = a, gather(j, layout.a_lines)
            else:
                expected, actual = b, gather(j, layout.b_lines)
            mismatches.append(Mismatch(a, b, cin, quantity, expected, actual))
    mismatches.sort(key=lambda m: (m.cin, m.a, m.b, m.quantity))
    return VerificationReport(lanes, tuple(mismatches))


def verify_rca(
    circuit: Circuit,
    layout: AdderLayout,
    mode: Literal["exhaustive", "random"] = "exhaustive",
    *,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
) -> VerificationReport:
    """Check an n-bit cascade against `oracle_add`.

    Exhaustive mode enumerates all 2^(2n+1) operand combinations
    (permitted for n <= 8); random mode samples `trials` seeded vectors.
    Checked on every vector: all sum bits (which live on the carry-in
    line and the intermediate ancillas), the final carry, and bit-exact
    preservation of every A and B line.
    """
    n = layout.n_bits
    lines = (layout.cin_line,) + layout.a_lines + layout.b_lines + layout.ancilla_lines
    if max(lines) >= circuit.width:
        raise StructuralError(
            f"layout uses line {max(lines)}, circuit width is {circuit.width}"
        )
    if mode == "exhaustive":
        if n > EXHAUSTIVE_ADDER_BITS:
            raise CapacityError(
                f"exhaustive adder verification capped at {EXHAUSTIVE_ADDER_BITS} "
                f"bits (2^{2 * EXHAUSTIVE_ADDER_BITS + 1} vectors), requested {n}"
            )
        # lane index encodes (cin, a, b) directly: j = cin | a<<1 | b<<(n+1)
        lanes = 1 << (2 * n + 1)
        masks = all_basis_states(2 * n + 1).words
        in_words = [0] * circuit.width
        in_words[layout.cin_line] = masks[0]
        for i in range(n):
            in_words[layout.a_lines[i]] = masks[1 + i]
            in_words[layout.b_lines[i]] = masks[n + 1 + i]
        m = (1 << n) - 1
        sums = [((j >> 1) & m) + ((j >> (n + 1)) & m) + (j & 1) for j in range(lanes)]

        def operands(j: int) -> tuple[int, int, int]:
            return (j >> 1) & m, (j >> (n + 1)) & m, j & 1

    elif mode == "random":
        if trials < 1:
            raise ValueError(f"trials must be >= 1, got {trials}")
        rng = random.Random(seed)
        a_vals = [rng.getrandbits(n) for _ in range(trials)]
        b_vals = [rng.getrandbits(n) for _ in range(trials)]
        cin_vals = [rng.getrandbits(1) for _ in range(trials)]
        lanes = trials
        in_words = [0] * circuit.width
        in_words[layout.cin_line] = _pack(cin_vals)
        for i in range(n):
            in_words[layout.a_lines[i]] = _pack((a >> i) & 1 for a in a_vals)
            in_words[layout.b_lines[i]] = _pack((b >> i) & 1 for b in b_vals)
        sums = [a + b + c for a, b, c in zip(a_vals, b_vals, cin_vals)]

        def operands(j: int) -> tuple[int, int, int]:
            return a_vals[j], b_vals[j], cin_vals[j]

    else:
        raise ValueError(f"unknown verification mode: {mode!r}")

    return _check_lanes(circuit, layout, in_words, lanes, sums, operands)


# ---------------------------------------------------------------- rendering

def render_verification_text(report: VerificationReport, limit: int = 20) -> str:
    lines = []
    if report.passed:
        lines.append(f"PASS: {report.cases} cases, 0 mismatches")
    else:
        lines.append(
            f"FAIL: {len(report.failing_rows())} of {report.cases} rows wrong "
            f"({len(report.mismatches)} mismatches)"
        )
        for m in report.mismatches[:limit]:
            lines.append(f"  {m.describe()}")
        if len(report.mismatches) > limit:
            lines.append(f"  ... and {len(report.mismatches) - limit} more")
    if report.bijective is not None:
        state = "bijective" if report.bijective else "NOT bijective"
        lines.append(f"basis-state map: {state}")
    return "\n".join(lines) + "\n"


def render_verification_csv(report: VerificationReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("a", "b", "cin", "quantity", "expected", "actual"))
    for m in report.mismatches:
        writer.writerow((m.a, m.b, m.cin, m.quantity, m.expected, m.actual))
    return buf.getvalue()
