"""Reversible NCT circuits: input-preserving adders, metrics, verification."""

from .core import (
    CapacityError,
    Circuit,
    CircuitError,
    Gate,
    GateKind,
    LineRole,
    StructuralError,
    ancilla,
    cnot,
    named,
    new_circuit,
    not_gate,
    toffoli,
)
from .simulate import (
    EXHAUSTIVE_LINE_LIMIT,
    BatchState,
    PermutationTable,
    all_basis_states,
    apply_gate,
    bits_to_int,
    int_to_bits,
    is_bijection,
    permutation_of,
    simulate,
    simulate_batch,
)
from .metrics import (
    DEFAULT_COST_MODEL,
    DEFAULT_LITERATURE,
    HNG_PUBLISHED,
    TSG_PUBLISHED,
    ComparisonRow,
    ComparisonTable,
    CostModel,
    Discrepancy,
    LiteratureRow,
    MetricsReport,
    QcReduction,
    Schedule,
    analyze,
    compare_report,
    describe_gate,
    gates_conflict,
    logical_depth,
    quantum_cost,
    render_comparison_csv,
    render_comparison_text,
    render_metrics_csv,
    render_metrics_text,
)
from .adders import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    EXHAUSTIVE_ADDER_BITS,
    AdderLayout,
    FullAdderSpec,
    Mismatch,
    VerificationReport,
    build_hng_reference,
    build_ppkn,
    build_rca,
    canonical_layout,
    oracle_add,
    ppkn_gates,
    render_verification_csv,
    render_verification_text,
    verify_full_adder,
    verify_rca,
)
from .netlist import ParseError, parse_netlist, serialize_netlist
from .qasm import export_qasm

__version__ = "0.1.0"

__all__ = [
    "AdderLayout",
    "BatchState",
    "CapacityError",
    "Circuit",
    "CircuitError",
    "ComparisonRow",
    "ComparisonTable",
    "CostModel",
    "DEFAULT_COST_MODEL",
    "DEFAULT_LITERATURE",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "Discrepancy",
    "EXHAUSTIVE_ADDER_BITS",
    "EXHAUSTIVE_LINE_LIMIT",
    "FullAdderSpec",
    "Gate",
    "GateKind",
    "HNG_PUBLISHED",
    "LineRole",
    "LiteratureRow",
    "MetricsReport",
    "Mismatch",
    "ParseError",
    "PermutationTable",
    "QcReduction",
    "Schedule",
    "StructuralError",
    "TSG_PUBLISHED",
    "VerificationReport",
    "all_basis_states",
    "analyze",
    "ancilla",
    "apply_gate",
    "bits_to_int",
    "build_hng_reference",
    "build_ppkn",
    "build_rca",
    "canonical_layout",
    "cnot",
    "compare_report",
    "describe_gate",
    "export_qasm",
    "gates_conflict",
    "int_to_bits",
    "is_bijection",
    "logical_depth",
    "named",
    "new_circuit",
    "not_gate",
    "oracle_add",
    "parse_netlist",
    "permutation_of",
    "ppkn_gates",
    "quantum_cost",
    "render_comparison_csv",
    "render_comparison_text",
    "render_metrics_csv",
    "render_metrics_text",
    "render_verification_csv",
    "render_verification_text",
    "serialize_netlist",
    "simulate",
    "simulate_batch",
    "toffoli",
    "verify_full_adder",
    "verify_rca",
]
