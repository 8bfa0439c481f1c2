"""Export to OPENQASM 3 style text. One register, x/cx/ccx gates only."""
from __future__ import annotations

from .core import Circuit, GateKind

_QASM_NAMES = {GateKind.NOT: "x", GateKind.CNOT: "cx", GateKind.TOFFOLI: "ccx"}


def export_qasm(circuit: Circuit) -> str:
    """Deterministic QASM text: header, one width-w register, program order."""
    lines = [
        "OPENQASM 3.0;",
        'include "stdgates.inc";',
        f"qubit[{circuit.width}] q;",
    ]
    for gate in circuit.gates:
        args = ", ".join(f"q[{i}]" for i in gate.controls + (gate.target,))
        lines.append(f"{_QASM_NAMES[gate.kind]} {args};")
    return "\n".join(lines) + "\n"
