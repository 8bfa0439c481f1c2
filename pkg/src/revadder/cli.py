"""Command-line interface.

Exit codes: 0 success, 1 verification found counterexamples, 2 bad
usage/flags, 3 netlist parse error. File arguments accept `-` for
standard input/output, so commands compose in pipelines:

    revadder build ppkn | revadder metrics -
    revadder build rca --bits 3 | revadder verify -
"""
from __future__ import annotations

import click

from .adders import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    EXHAUSTIVE_ADDER_BITS,
    FullAdderSpec,
    build_hng_reference,
    build_ppkn,
    build_rca,
    canonical_layout,
    render_verification_text,
    verify_full_adder,
    verify_rca,
)
from .core import CapacityError, Circuit
from .metrics import (
    analyze,
    compare_report,
    render_comparison_csv,
    render_comparison_text,
    render_metrics_csv,
    render_metrics_text,
)
from .netlist import ParseError, parse_netlist, serialize_netlist
from .qasm import export_qasm
from .simulate import simulate

EXIT_VERIFY_FAILED = 1
EXIT_PARSE_ERROR = 3


@click.group()
def main() -> None:
    """Build, simulate, verify, and analyze reversible NCT adder circuits."""


def _read_document(ctx: click.Context, fh) -> tuple:
    name = getattr(fh, "name", "<input>")
    try:
        return parse_netlist(fh.read())
    except ParseError as exc:
        click.echo(f"{name}: {exc}", err=True)
        ctx.exit(EXIT_PARSE_ERROR)


@main.command()
@click.argument("kind", type=click.Choice(["ppkn", "hng", "rca"]))
@click.option("--bits", type=int, default=None, help="Operand width (rca only).")
@click.option("-o", "--output", type=click.File("w"), default="-", help="Destination file.")
def build(kind: str, bits, output) -> None:
    """Emit a built-in circuit as a netlist document."""
    if kind == "rca":
        if bits is None or bits < 1:
            raise click.UsageError("rca needs --bits N with N >= 1")
        circuit, layout = build_rca(bits)
    else:
        if bits is not None:
            raise click.UsageError(f"--bits applies to rca only, not {kind}")
        if kind == "ppkn":
            circuit, _ = build_ppkn()
            layout = canonical_layout(1)
        else:
            circuit, _ = build_hng_reference()
            layout = None
    output.write(serialize_netlist(circuit, layout))


@main.command(name="simulate")
@click.argument("file", type=click.File("r"))
@click.option("--input", "bitstring", required=True,
              help="One bit per line, line 0 leftmost, length = width.")
@click.pass_context
def simulate_cmd(ctx: click.Context, file, bitstring: str) -> None:
    """Run a netlist on one basis state and print the output bits."""
    circuit, _ = _read_document(ctx, file)
    if len(bitstring) != circuit.width or set(bitstring) - {"0", "1"}:
        raise click.UsageError(
            f"--input must be {circuit.width} characters of 0/1, got {bitstring!r}"
        )
    state = tuple(int(c) for c in bitstring)
    out = simulate(circuit, state)
    click.echo(f"input  {bitstring}")
    click.echo(f"output {''.join(str(b) for b in out)}")
    for i, role in enumerate(circuit.roles):
        if role.output is not None:
            click.echo(f"{role.output} = {out[i]}")


def _spec_from_roles(circuit: Circuit) -> FullAdderSpec | None:
    """Recognize a 1-bit adder by its role names (Cin/A/B plus one ancilla)."""
    if circuit.width != 4:
        return None
    by_name: dict[str, int] = {}
    ancillas = []
    for i, role in enumerate(circuit.roles):
        if role.is_ancilla:
            ancillas.append(i)
        elif role.name.lower() in ("cin", "a", "b") and role.name.lower() not in by_name:
            by_name[role.name.lower()] = i
    if len(by_name) == 3 and len(ancillas) == 1:
        return FullAdderSpec(by_name["cin"], by_name["a"], by_name["b"], ancillas[0])
    return None


@main.command()
@click.argument("file", type=click.File("r"))
@click.option("--mode", type=click.Choice(["auto", "exhaustive", "random"]),
              default="auto", help="Vector selection (auto: exhaustive when small).")
@click.option("--trials", type=int, default=DEFAULT_TRIALS, show_default=True,
              help="Sample count in random mode.")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True,
              help="Generator seed in random mode.")
@click.pass_context
def verify(ctx: click.Context, file, mode: str, trials: int, seed: int) -> None:
    """Check a netlist against integer addition; exit 1 on counterexamples."""
    circuit, layout = _read_document(ctx, file)
    if layout is not None and layout.n_bits == 1:
        spec = FullAdderSpec(
            layout.cin_line, layout.a_lines[0], layout.b_lines[0], layout.ancilla_lines[0]
        )
        report = verify_full_adder(circuit, spec)
    elif layout is not None:
        if mode == "auto":
            mode = "exhaustive" if layout.n_bits <= EXHAUSTIVE_ADDER_BITS else "random"
        try:
            report = verify_rca(circuit, layout, mode, trials=trials, seed=seed)
        except CapacityError as exc:
            raise click.UsageError(str(exc)) from None
    else:
        spec = _spec_from_roles(circuit)
        if spec is None:
            raise click.UsageError(
                "document has no adder layout and its roles do not describe "
                "a 1-bit adder (inputs Cin/A/B plus one ancilla)"
            )
        report = verify_full_adder(circuit, spec)
    click.echo(render_verification_text(report), nl=False)
    if not report.passed:
        ctx.exit(EXIT_VERIFY_FAILED)


@main.command()
@click.argument("file", type=click.File("r"))
@click.option("--csv", "as_csv", is_flag=True, help="Machine-readable output.")
@click.pass_context
def metrics(ctx: click.Context, file, as_csv: bool) -> None:
    """Print gate counts, quantum cost, depth, and the witness schedule."""
    circuit, _ = _read_document(ctx, file)
    report = analyze(circuit)
    if as_csv:
        click.echo(render_metrics_csv(report), nl=False)
    else:
        click.echo(render_metrics_text(report, circuit), nl=False)


@main.command()
@click.option("--csv", "as_csv", is_flag=True, help="Machine-readable output.")
def compare(as_csv: bool) -> None:
    """Compare the built-in adders against the published figures."""
    ppkn, _ = build_ppkn()
    hng, _ = build_hng_reference()
    table = compare_report([
        ("PPKN", analyze(ppkn)),
        ("HNG-reference", analyze(hng)),
    ])
    if as_csv:
        click.echo(render_comparison_csv(table), nl=False)
    else:
        click.echo(render_comparison_text(table), nl=False)


@main.command()
@click.argument("file", type=click.File("r"))
@click.option("--format", "fmt", type=click.Choice(["qasm"]), default="qasm",
              show_default=True, help="Export format.")
@click.pass_context
def export(ctx: click.Context, file, fmt: str) -> None:
    """Convert a netlist to an interchange format."""
    circuit, _ = _read_document(ctx, file)
    click.echo(export_qasm(circuit), nl=False)


if __name__ == "__main__":
    main()
