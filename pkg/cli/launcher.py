"""
launcher.py
-----------
The ``fixbound`` command line: fixed point invariants of fiber-preserving selfmaps.

Exit codes: 0 success, 1 algebraic failure (an identity that must hold did not),
2 parse error or bad arguments, 3 precondition violation.
"""

from __future__ import annotations

import logging
import random
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import typer
from pydantic import ValidationError
from rich.console import Console

from cli.inputs import OutputFormat, RunConfig, build_fiber_matrix, build_map
from cli.render import ConjugationReport, ZeroTestReport, render_invariants, render_model, render_sweep, zero_summary
from common.app_setup import print_error, setup_logging
from common.errors import AlgebraicFailure, FixboundError
from common.settings import load_settings
from exactmat.matrix import charpoly, set_max_dim
from families.builders import Family
from families.witness import unboundedness_sweep, witness
from fixtheory.conjugation import conjugation_failures, gamma_prime_index, sample_gamma_prime, shifted_theta
from fixtheory.invariants import full_report
from polyalg.cyclotomic import iterate_vanishes, vanishing_iterates, zero_iterates
from polyalg.polynomial import format_polynomial

app = typer.Typer(
    add_completion=False,
    help="Exact Lefschetz/Nielsen numbers and fixed point class indices for maps of (aspherical base) x (torus).",
)
err_console = Console(stderr=True, highlight=False)
logger = logging.getLogger(__name__)

FamilyOpt = typer.Option(None, "--family", help="sg-s1 (surface x S^1), sg-tn (surface x T^n), pz-t2 (G_3,1 manifold x T^2)")
LOpt = typer.Option(None, "--L", help='Fiber matrix literal "rows cols; a11 a12 ...; a21 ..."')
RhoOpt = typer.Option(None, "--rho", help='"zero" or an n x (generators) matrix literal')
PresentationOpt = typer.Option(None, "--presentation", help="Base presentation file (needs --chi)")
TorusBaseOpt = typer.Option(None, "--torus-base", help="Use Z^r as the base group")
GOpt = typer.Option(2, "--g", help="Surface genus (>= 2)")
NOpt = typer.Option(None, "--n", help="Fiber rank")
MOpt = typer.Option(None, "--m", help="Family parameter m (>= 1)")
KOpt = typer.Option(1, "--k", help="Iterate k (>= 1)")
ChiOpt = typer.Option(None, "--chi", help="Euler characteristic of the base (overrides the computed value)")
FormatOpt = typer.Option(OutputFormat.table, "--format", help="Output format")


@contextmanager
def _guarded() -> Iterator[None]:
    """Map library errors to exit codes."""
    try:
        yield
    except ValidationError as exc:
        first = exc.errors()[0]
        print_error(f"Invalid arguments: {first['msg']}")
        raise typer.Exit(2)
    except FixboundError as exc:
        print_error(exc.message)
        raise typer.Exit(exc.exit_code)


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    log_file: Optional[str] = typer.Option(None, "--log-file", help="Log file (default ~/.fixbound/log.txt)"),
    max_dim: Optional[int] = typer.Option(None, "--max-dim", help="Largest accepted matrix dimension"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log at DEBUG level"),
):
    settings = load_settings(max_dim=max_dim)
    setup_logging(app_name="fixbound", loglevel=logging.DEBUG if verbose else logging.INFO, logfile=log_file)
    with _guarded():
        set_max_dim(settings.max_dim)
    ctx.obj = settings
    if ctx.invoked_subcommand is None:
        print(ctx.get_help())
        err_console.print("[bold yellow]Tip:[/bold yellow] Use [green]<command> --help[/green] for the options of a command.")


@app.command()
def invariants(
    ctx: typer.Context,
    family: Optional[Family] = FamilyOpt,
    L: Optional[str] = LOpt,
    rho: Optional[str] = RhoOpt,
    presentation: Optional[Path] = PresentationOpt,
    torus_base: Optional[int] = TorusBaseOpt,
    g: int = GOpt,
    n: Optional[int] = NOpt,
    m: Optional[int] = MOpt,
    k: int = KOpt,
    chi: Optional[int] = ChiOpt,
    fmt: OutputFormat = FormatOpt,
    verify: bool = typer.Option(False, "--verify", help="Cross-check indices by coset enumeration"),
):
    """Lefschetz, Nielsen, Min and the fixed point class index of the k-th iterate."""
    with _guarded():
        config = RunConfig(
            command="invariants", family=family, L=L, rho=rho, presentation=presentation, torus_base=torus_base,
            g=g, n=n, m=m, k=k, chi=chi, format=fmt, verify=verify,
        )
        phi = build_map(config)
        report = full_report(phi, config.k, config.chi, verify=config.verify, oracle_limit=ctx.obj.oracle_limit)
        render_invariants(report, config.format, title=f"{phi.base.describe()} x T^{phi.fiber_rank}, k={config.k}")


@app.command("witness")
def witness_cmd(
    family: Optional[Family] = FamilyOpt,
    g: int = GOpt,
    n: Optional[int] = NOpt,
    m: Optional[int] = MOpt,
    k: int = KOpt,
    chi: Optional[int] = ChiOpt,
    fmt: OutputFormat = FormatOpt,
):
    """Witness report for one family member: index m|chi| once validity holds."""
    with _guarded():
        config = RunConfig(command="witness", family=family, g=g, n=n, m=m, k=k, chi=chi, format=fmt)
        report = witness(config.family, config.m, config.k, n=config.n, g=config.g, chi=config.chi)
        render_model(report, config.format, title=f"witness {config.family.value} m={config.m} k={config.k}")
        if not report.valid:
            err_console.print(f"[yellow]warning:[/yellow] L^{config.k} has eigenvalue 1; member is not a witness")


@app.command()
def sweep(
    ctx: typer.Context,
    family: Optional[Family] = FamilyOpt,
    g: int = GOpt,
    n: Optional[int] = NOpt,
    k: int = KOpt,
    m_max: int = typer.Option(..., "--m-max", help="Sweep m = 1..m_max"),
    chi: Optional[int] = ChiOpt,
    fmt: OutputFormat = typer.Option(OutputFormat.csv, "--format", help="Output format"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Worker processes"),
):
    """Witnesses for m = 1..m_max; checks that the index grows strictly with m."""
    with _guarded():
        config = RunConfig(
            command="sweep", family=family, g=g, n=n, k=k, m_max=m_max, chi=chi, format=fmt,
            workers=workers or ctx.obj.workers,
        )
        reports = unboundedness_sweep(
            config.family, config.k, config.m_max, n=config.n, g=config.g, chi=config.chi, workers=config.workers
        )
        render_sweep(reports, config.format)
        invalid = sum(not r.valid for r in reports)
        err_console.print(
            f"{len(reports)} rows; essential index strictly increasing in m; {invalid} warning(s) for invalid members"
        )


@app.command()
def conjcheck(
    ctx: typer.Context,
    family: Optional[Family] = FamilyOpt,
    L: Optional[str] = LOpt,
    rho: Optional[str] = RhoOpt,
    presentation: Optional[Path] = PresentationOpt,
    torus_base: Optional[int] = TorusBaseOpt,
    g: int = GOpt,
    n: Optional[int] = NOpt,
    m: Optional[int] = MOpt,
    chi: Optional[int] = ChiOpt,
    samples: Optional[int] = typer.Option(None, "--samples", help="Number of random samples from Gamma' x Z^n"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed"),
    corrupt: bool = typer.Option(False, "--corrupt", help="Shift theta by e1 on the first generator (must fail)"),
    fmt: OutputFormat = FormatOpt,
):
    """Check that the shear h conjugates phi to the product map on Gamma' x Z^n."""
    with _guarded():
        config = RunConfig(
            command="conjcheck", family=family, L=L, rho=rho, presentation=presentation, torus_base=torus_base,
            g=g, n=n, m=m, chi=chi, format=fmt,
            samples=ctx.obj.samples if samples is None else samples,
            seed=ctx.obj.seed if seed is None else seed,
        )
        phi = build_map(config)
        index = gamma_prime_index(phi)
        drawn = sample_gamma_prime(phi, random.Random(config.seed), config.samples)
        failures = conjugation_failures(phi, drawn, shifted_theta(phi) if corrupt else None)
        report = ConjugationReport(
            gamma_prime_index=index, samples=len(drawn), failures=len(failures), passed=not failures
        )
        render_model(report, config.format, title="conjugation check")
        if failures:
            raise AlgebraicFailure(f"conjugation identity failed on {len(failures)} of {len(drawn)} samples")


@app.command()
def zerotest(
    family: Optional[Family] = FamilyOpt,
    L: Optional[str] = LOpt,
    n: Optional[int] = NOpt,
    m: Optional[int] = MOpt,
    k_max: int = typer.Option(12, "--k-max", help="Cross-check by direct determinants for k <= k_max"),
    fmt: OutputFormat = FormatOpt,
):
    """Cyclotomic factors of charpoly(L) and the iterates k with det(I - L^k) = 0."""
    with _guarded():
        config = RunConfig(command="zerotest", family=family, L=L, n=n, m=m, format=fmt)
        matrix = build_fiber_matrix(config)
        orders = sorted(zero_iterates(matrix))
        vanishing = vanishing_iterates(matrix, k_max)
        predicted = [k for k in range(1, k_max + 1) if iterate_vanishes(orders, k)]
        if predicted != vanishing:
            raise AlgebraicFailure(f"cyclotomic prediction {predicted} differs from determinants {vanishing}")
        report = ZeroTestReport(
            charpoly=format_polynomial(charpoly(matrix)),
            orders=orders,
            summary=zero_summary(orders),
            k_max=k_max,
            vanishing=vanishing,
        )
        render_model(report, config.format, title="root-of-unity eigenvalues")


if __name__ == "__main__":
    app()
