#!/usr/bin/env python3
"""Print the adder comparison table, then show where the savings land.

Usage: python3 scripts/compare_adders.py [--csv]
"""
import argparse

from revadder import (
    analyze,
    build_hng_reference,
    build_ppkn,
    compare_report,
    render_comparison_csv,
    render_comparison_text,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--csv", action="store_true", help="machine-readable table")
    args = parser.parse_args()

    ppkn, _ = build_ppkn()
    hng, _ = build_hng_reference()
    table = compare_report([
        ("PPKN", analyze(ppkn)),
        ("HNG-reference", analyze(hng)),
    ])
    if args.csv:
        print(render_comparison_csv(table), end="")
        return
    print(render_comparison_text(table), end="")
    print()
    print("per-gate breakdown of the two computed circuits:")
    for name, circuit in (("PPKN", ppkn), ("HNG-reference", hng)):
        report = analyze(circuit)
        print(
            f"  {name}: {report.toffoli_count} Toffoli x5 "
            f"+ {report.cnot_count} CNOT x1 = QC {report.quantum_cost}, "
            f"depth {report.logical_depth}"
        )


if __name__ == "__main__":
    main()
