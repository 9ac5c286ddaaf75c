"""
Command-line interface.

Usage:
    swanbounds analyze 2 5                     # bounds for Q(sqrt(-2)), p = 5
    swanbounds scan 5 3 97 --only-nontrivial   # primes with nontrivial classes
    swanbounds scan 5 3 97 -f csv --plot scan.png
    swanbounds stickelberger 7
    swanbounds oracle 5 5
    swanbounds cyclo-check 97

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 cap exceeded.
"""

from __future__ import annotations

import functools
import json
import sys
from concurrent.futures import ProcessPoolExecutor

import click

from . import __version__
from .arith import check_odd_prime, primes_between
from .cyclo import CYCLO_CAP, verify_congruence
from .errors import CapExceeded, OutOfRange, SwanBoundsError, VerificationMismatch
from .finring import CONSTRUCTIVE_CAP, ORACLE_CAP, build_residue_ring, oracle_unit_structure, unit_group_structure
from .abgroup import canonical_chain
from .quadfield import make_field
from .report import AnalysisReport, ScanRow, rows_to_csv, rows_to_json, rows_to_table
from .stickel import LATTICE_CAP, stickelberger_ideal, theta
from .swan import kernel_group_report

__all__ = ["cli", "main"]

FORMATS = click.Choice(["table", "json", "csv"])


def _handle_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except SwanBoundsError as exc:
            click.echo(f"error: {type(exc).__name__}: {exc}", err=True)
            sys.exit(exc.exit_code)

    return wrapper


def stickelberger_exponent(p: int, lattice_cap: int) -> tuple[int, str]:
    """Exponent (p-1)/2, lattice-verified when p is under the cap."""
    formula = (p - 1) // 2
    if p > lattice_cap:
        return formula, "formula"
    eps = stickelberger_ideal(p, cap=lattice_cap).epsilon_gen
    if eps != formula:
        raise VerificationMismatch(f"eps(J) = {eps} but (p-1)/2 = {formula}")
    return eps, "lattice"


def analyze(d: int, p: int, max_p: int = CONSTRUCTIVE_CAP, lattice_cap: int = LATTICE_CAP) -> AnalysisReport:
    field = make_field(d)
    check_odd_prime(p)
    report = kernel_group_report(field, p, cap=max_p)
    exp, source = stickelberger_exponent(p, lattice_cap)
    provenance = {
        "caps": {"max_p": max_p, "oracle_cap": ORACLE_CAP, "lattice_cap": lattice_cap},
        "stickelberger_source": source,
    }
    return AnalysisReport.from_report(report, exp, provenance)


def _scan_row(args: tuple[int, int, int]) -> ScanRow:
    d, p, max_p = args
    return ScanRow.from_report(kernel_group_report(make_field(d), p, cap=max_p))


def scan(
    ds: list[int],
    p_min: int,
    p_max: int,
    only_nontrivial: bool = False,
    max_p: int = CONSTRUCTIVE_CAP,
    jobs: int = 1,
) -> list[ScanRow]:
    if p_min < 3 or p_min > p_max:
        raise OutOfRange(f"need 3 <= p_min <= p_max, got {p_min}..{p_max}")
    if p_max > max_p:
        raise CapExceeded(f"p_max = {p_max} exceeds --max-p {max_p}")
    for d in ds:
        make_field(d)  # validate before spending time on rows
    tasks = [(d, p, max_p) for d in sorted(set(ds)) for p in primes_between(p_min, p_max)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_scan_row, tasks, chunksize=8))
    else:
        rows = [_scan_row(t) for t in tasks]
    rows.sort(key=lambda r: (r.d, r.p))
    if only_nontrivial:
        rows = [r for r in rows if r.nontrivial]
    return rows


@click.group()
@click.version_option(__version__, prog_name="swanbounds")
def cli() -> None:
    """Swan subgroup and kernel group bounds for O_K[C_p], K = Q(sqrt(-d))."""


@cli.command("analyze")
@click.argument("d", type=int)
@click.argument("p", type=int)
@click.option("-f", "--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--max-p", type=int, default=CONSTRUCTIVE_CAP, show_default=True,
              help="Largest p for the constructive unit-group path.")
@click.option("--lattice-cap", type=int, default=LATTICE_CAP, show_default=True,
              help="Largest p for which the Stickelberger exponent is lattice-verified.")
@_handle_errors
def analyze_cmd(d: int, p: int, fmt: str, max_p: int, lattice_cap: int) -> None:
    """Full report for one field and one prime."""
    rep = analyze(d, p, max_p=max_p, lattice_cap=lattice_cap)
    out = {"json": rep.to_json, "csv": rep.to_csv, "table": rep.to_table}[fmt]()
    click.echo(out, nl=False)


@cli.command("scan")
@click.argument("d", type=int, nargs=-1, required=True)
@click.argument("p_min", type=int)
@click.argument("p_max", type=int)
@click.option("--only-nontrivial", is_flag=True, help="Keep only rows with nontrivial R ∩ D lower bound.")
@click.option("-f", "--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--max-p", type=int, default=CONSTRUCTIVE_CAP, show_default=True)
@click.option("-j", "--jobs", type=int, default=1, show_default=True, help="Worker processes.")
@click.option("--plot", "plot_path", type=click.Path(dir_okay=False), default=None,
              help="Also render a figure of the bounds to this file.")
@_handle_errors
def scan_cmd(d, p_min, p_max, only_nontrivial, fmt, max_p, jobs, plot_path) -> None:
    """Tabulate bounds for every odd prime P_MIN <= p <= P_MAX and each D."""
    rows = scan(list(d), p_min, p_max, only_nontrivial, max_p=max_p, jobs=jobs)
    out = {"json": rows_to_json, "csv": rows_to_csv, "table": rows_to_table}[fmt](rows)
    click.echo(out, nl=False)
    if plot_path:
        from .plotting import plot_scan

        label = ", ".join(f"d={x}" for x in sorted(set(d)))
        plot_scan(rows, plot_path, title=f"{label}, {p_min} <= p <= {p_max}")
        click.echo(f"figure written to {plot_path}", err=True)


@cli.command("stickelberger")
@click.argument("p", type=int)
@click.option("-f", "--format", "fmt", type=FORMATS, default="table", show_default=True)
@click.option("--lattice-cap", type=int, default=LATTICE_CAP, show_default=True)
@_handle_errors
def stickelberger_cmd(p: int, fmt: str, lattice_cap: int) -> None:
    """Stickelberger element, ideal J and its augmentation for C = (Z/pZ)^*."""
    check_odd_prime(p)
    J = stickelberger_ideal(p, cap=lattice_cap)
    formula = (p - 1) // 2
    data = {
        "p": p,
        "theta": list(theta(p).coeffs),
        "basis_rank": J.rank,
        "basis_dim": p - 1,
        "epsilon_gen": J.epsilon_gen,
        "formula": formula,
        "match": J.epsilon_gen == formula,
    }
    if fmt == "json":
        click.echo(json.dumps(data, indent=2))
    elif fmt == "csv":
        click.echo("p,basis_rank,basis_dim,epsilon_gen,formula,match\r")
        click.echo(f"{p},{J.rank},{p - 1},{J.epsilon_gen},{formula},{str(data['match']).lower()}\r")
    else:
        click.echo(f"p            {p}")
        click.echo(f"theta        {' '.join(map(str, data['theta']))}")
        click.echo(f"basis        rank {J.rank} in Z^{p - 1}")
        click.echo(f"eps(J)       {J.epsilon_gen}Z")
        click.echo(f"(p-1)/2      {formula}")
        click.echo(f"match        {'yes' if data['match'] else 'NO'}")
    if not data["match"]:
        sys.exit(VerificationMismatch.exit_code)


@cli.command("oracle")
@click.argument("d", type=int)
@click.argument("p", type=int)
@click.option("--oracle-cap", type=int, default=ORACLE_CAP, show_default=True)
@_handle_errors
def oracle_cmd(d: int, p: int, oracle_cap: int) -> None:
    """Compare constructive and brute-force unit-group structure."""
    ring = build_residue_ring(make_field(d), p)
    if p > oracle_cap:
        raise CapExceeded(f"p = {p} exceeds --oracle-cap {oracle_cap}")
    pres = unit_group_structure(ring)
    constructive = list(canonical_chain(pres.orders))
    brute = oracle_unit_structure(ring, cap=oracle_cap)
    match = constructive == brute
    click.echo(f"d={d} p={p} {ring.kind}")
    click.echo(f"presentation   {list(pres.orders)}")
    click.echo(f"constructive   {constructive}")
    click.echo(f"brute force    {brute}")
    click.echo(f"match          {'yes' if match else 'NO'}")
    if not match:
        sys.exit(VerificationMismatch.exit_code)


@cli.command("cyclo-check")
@click.argument("p", type=int)
@click.option("--cap", type=int, default=CYCLO_CAP, show_default=True)
@_handle_errors
def cyclo_check_cmd(p: int, cap: int) -> None:
    """Check (1 - zeta^n)/(1 - zeta) = n mod (1 - zeta) for all n."""
    check_odd_prime(p)
    if p > cap:
        raise CapExceeded(f"p = {p} exceeds --cap {cap}")
    ok = verify_congruence(p)
    click.echo(f"p={p}: {'pass' if ok else 'FAIL'}")
    if not ok:
        sys.exit(VerificationMismatch.exit_code)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
