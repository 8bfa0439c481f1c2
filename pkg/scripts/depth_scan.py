#!/usr/bin/env python3
"""Sweep cascade widths: metrics, the 3n+1 depth line, and a verification.

For each n the row shows gate counts, quantum cost, measured depth next
to the predicted 3n+1, and the verification outcome (exhaustive up to
8 bits, seeded random sampling above).

Usage: python3 scripts/depth_scan.py [--max-bits N] [--trials T] [--seed S]
"""
import argparse

from revadder import (
    DEFAULT_SEED,
    EXHAUSTIVE_ADDER_BITS,
    analyze,
    build_rca,
    verify_rca,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-bits", type=int, default=16, help="largest operand width")
    parser.add_argument("--trials", type=int, default=2000, help="samples per wide adder")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = parser.parse_args()

    header = f"{'n':>3} {'lines':>5} {'gates':>5} {'qc':>5} {'depth':>5} {'3n+1':>5}  check"
    print(header)
    print("-" * len(header))
    for n in range(1, args.max_bits + 1):
        circuit, layout = build_rca(n)
        report = analyze(circuit)
        if n <= EXHAUSTIVE_ADDER_BITS:
            outcome = verify_rca(circuit, layout)
            check = f"exhaustive({outcome.cases})"
        else:
            outcome = verify_rca(
                circuit, layout, "random", trials=args.trials, seed=args.seed
            )
            check = f"random({outcome.cases})"
        check += " ok" if outcome.passed else " FAILED"
        marker = "" if report.logical_depth == 3 * n + 1 else "  <- off the line"
        print(
            f"{n:>3} {circuit.width:>5} {report.gate_count:>5} "
            f"{report.quantum_cost:>5} {report.logical_depth:>5} {3 * n + 1:>5}  "
            f"{check}{marker}"
        )


if __name__ == "__main__":
    main()
