"""
Command Line Interface for nakayama-tau.
"""

import logging
import sys
import time
from datetime import datetime, timezone
from typing import Any, Callable, List, Optional

import click
from rich.console import Console
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from .algebra import (
    NakayamaAlgebra,
    format_module,
    format_sequence,
    parse_algebra,
    parse_module,
    parse_partial_sequence,
    parse_sequence,
)
from .config import config
from .errors import LiteralError, UsageError
from .homcalc import ext1_nonzero, hom_overlap, quotient_top, tau
from .interfaces import IRunRepository
from .mutation import BraidReport, MutationWord, apply_word, orbits, verify_braid
from .reduction import build_context, describe, rel_projectives, whole_category
from .reporting import Report, braid_report, emit_ar_dot, emit_json, orbit_report
from .sequences import completions, count_complete, enumerate_complete, psi, psi_inv
from .storage import RunStore, VerificationRun
from .taurigid import bongartz, cobongartz, is_tau_rigid, is_tf_ordered


# Setup logging
logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)

# Results go to stdout, diagnostics to stderr
console = Console()
err_console = Console(stderr=True)


class AlgebraType(click.ParamType):
    name = "algebra"

    def convert(self, value, param, ctx):
        if isinstance(value, NakayamaAlgebra):
            return value
        try:
            return parse_algebra(value)
        except LiteralError as e:
            self.fail(str(e), param, ctx)


ALGEBRA = AlgebraType()


def algebra_options(func: Callable) -> Callable:
    """--algebra plus the --json / --plain output switches."""
    func = click.option(
        "--plain", "fmt", flag_value="plain", help="Grep-friendly lines instead of a table"
    )(func)
    func = click.option("--json", "fmt", flag_value="json", help="Print the JSON report")(func)
    func = click.option(
        "--algebra", "-a", type=ALGEBRA, required=True, help="Algebra literal, e.g. C6 or A2xC3"
    )(func)
    return func


def _handle_error(e: Exception, command: str) -> None:
    if isinstance(e, UsageError):
        err_console.print(f"[red]Error: {e}[/red]")
        sys.exit(2)
    err_console.print(f"[red]Error: {e}[/red]")
    logger.exception("Error in %s command", command)
    sys.exit(1)


def _elapsed(start: float) -> float:
    return round((time.perf_counter() - start) * 1000.0, 3)


def _emit(
    fmt: Optional[str],
    report: Report,
    lines: List[str],
    table: Optional[Any] = None,
) -> None:
    if fmt == "json":
        click.echo(emit_json(report))
    elif fmt == "plain" or table is None:
        for line in lines:
            click.echo(line)
    else:
        console.print(table)


def _metric_table(title: str, rows: List[tuple]) -> Table:
    table = Table(title=title)
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")
    for key, value in rows:
        table.add_row(key, str(value))
    return table


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose logging")
def cli(verbose: bool):
    """nakayama-tau - tau-tilting calculus and braid checks for Nakayama algebras."""
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


@cli.command("list-ind")
@algebra_options
def list_ind(algebra: NakayamaAlgebra, fmt: Optional[str]):
    """List the indecomposable modules of an algebra."""
    start = time.perf_counter()
    try:
        mods = algebra.indecomposables()
        items = [format_module(algebra, x) for x in mods]
        table = Table(title=f"Indecomposables of {algebra}")
        table.add_column("Module", style="cyan")
        table.add_column("Projective", style="green")
        table.add_column("tau", style="magenta")
        lines = []
        for x in mods:
            t = tau(algebra, x)
            t_label = format_module(algebra, t) if t else "0"
            proj = "yes" if algebra.is_projective(x) else "no"
            table.add_row(format_module(algebra, x), proj, t_label)
            lines.append(f"{format_module(algebra, x)}\t{proj}\t{t_label}")
        report = Report(
            algebra=str(algebra),
            command="list-ind",
            count=len(items),
            items=items,
            elapsed_ms=_elapsed(start),
        )
        _emit(fmt, report, lines, table)
    except Exception as e:
        _handle_error(e, "list-ind")


@cli.command()
@algebra_options
@click.option("--source", "-x", required=True, help="Source module M(t,l)")
@click.option("--target", "-y", required=True, help="Target module M(t,l)")
def hom(algebra: NakayamaAlgebra, fmt: Optional[str], source: str, target: str):
    """Hom and Ext^1 between two indecomposables."""
    start = time.perf_counter()
    try:
        x = parse_module(algebra, source)
        y = parse_module(algebra, target)
        j = hom_overlap(algebra, x, y)
        image = format_module(algebra, quotient_top(algebra, x, j)) if j else "0"
        item = {
            "source": format_module(algebra, x),
            "target": format_module(algebra, y),
            "hom_overlap": j,
            "image": image,
            "ext1_nonzero": ext1_nonzero(algebra, x, y),
        }
        report = Report(
            algebra=str(algebra), command="hom", items=[item], elapsed_ms=_elapsed(start)
        )
        table = _metric_table(
            f"Hom({item['source']}, {item['target']})",
            [
                ("dim Hom", 1 if j else 0),
                ("Image", image),
                ("Ext^1 non-zero", item["ext1_nonzero"]),
            ],
        )
        lines = [f"hom_overlap\t{j}", f"image\t{image}", f"ext1\t{item['ext1_nonzero']}"]
        _emit(fmt, report, lines, table)
    except Exception as e:
        _handle_error(e, "hom")


@cli.command("tau")
@algebra_options
@click.option("--module", "-m", "module", required=True, help="Module M(t,l)")
def tau_command(algebra: NakayamaAlgebra, fmt: Optional[str], module: str):
    """Auslander-Reiten translate of an indecomposable."""
    start = time.perf_counter()
    try:
        x = parse_module(algebra, module)
        t = tau(algebra, x)
        label = format_module(algebra, t) if t else "0"
        report = Report(
            algebra=str(algebra), command="tau", items=[label], elapsed_ms=_elapsed(start)
        )
        _emit(fmt, report, [label])
    except Exception as e:
        _handle_error(e, "tau")


def _complement_command(
    name: str, fn: Callable, algebra: NakayamaAlgebra, fmt: Optional[str], module: str
) -> None:
    start = time.perf_counter()
    try:
        x = parse_module(algebra, module)
        summands = fn(algebra, x)
        items = [format_module(algebra, y) for y in summands]
        report = Report(
            algebra=str(algebra),
            command=name,
            count=len(items),
            items=items,
            elapsed_ms=_elapsed(start),
        )
        table = Table(title=f"{name} complement of {format_module(algebra, x)}")
        table.add_column("Summand", style="cyan")
        table.add_column("Projective", style="green")
        for y in summands:
            table.add_row(format_module(algebra, y), "yes" if algebra.is_projective(y) else "no")
        _emit(fmt, report, items, table)
    except Exception as e:
        _handle_error(e, name)


@cli.command("bongartz")
@algebra_options
@click.option("--module", "-m", "module", required=True, help="Module M(t,l)")
def bongartz_command(algebra: NakayamaAlgebra, fmt: Optional[str], module: str):
    """Bongartz complement of an indecomposable."""
    _complement_command("bongartz", bongartz, algebra, fmt, module)


@cli.command("cobongartz")
@algebra_options
@click.option("--module", "-m", "module", required=True, help="Module M(t,l)")
def cobongartz_command(algebra: NakayamaAlgebra, fmt: Optional[str], module: str):
    """Co-Bongartz complement of an indecomposable."""
    _complement_command("cobongartz", cobongartz, algebra, fmt, module)


@cli.command()
@algebra_options
@click.option("--reducer", "-r", default="[]", help="tau-rigid module, e.g. [M(3,3)]")
def jasso(algebra: NakayamaAlgebra, fmt: Optional[str], reducer: str):
    """Members and abstract presentation of the perpendicular category J(M)."""
    start = time.perf_counter()
    try:
        ctx = build_context(algebra, parse_sequence(algebra, reducer))
        items = []
        lines = []
        table = Table(title=f"{describe(ctx)} = mod {ctx.abstract}")
        table.add_column("Component", style="cyan")
        table.add_column("Member", style="green")
        table.add_column("Abstract", style="magenta")
        table.add_column("Rel. projective", style="yellow")
        projectives = set(rel_projectives(ctx))
        for comp in ctx.comps:
            members = []
            for y in comp.members:
                a = ctx.to_abstract[y]
                members.append({"module": format_module(algebra, y), "abstract": str(a)})
                table.add_row(
                    str(comp.component),
                    format_module(algebra, y),
                    str(a),
                    "yes" if y in projectives else "",
                )
                lines.append(
                    f"{comp.index}\t{comp.component}\t{format_module(algebra, y)}\t{a}"
                )
            items.append(
                {"component": comp.index, "kind": str(comp.component), "members": members}
            )
        report = Report(
            algebra=str(algebra),
            command="jasso",
            count=len(ctx.members),
            items=items,
            elapsed_ms=_elapsed(start),
        )
        _emit(fmt, report, lines, table)
    except Exception as e:
        _handle_error(e, "jasso")


@cli.command("psi")
@algebra_options
@click.option("--module", "-m", "module", required=True, help="TF-ordered module [..]")
def psi_command(algebra: NakayamaAlgebra, fmt: Optional[str], module: str):
    """tau-exceptional sequence of a TF-ordered tau-rigid module."""
    start = time.perf_counter()
    try:
        m = parse_sequence(algebra, module)
        if not is_tau_rigid(algebra, m) or not is_tf_ordered(algebra, m):
            raise UsageError(f"{module} is not a TF-ordered tau-rigid module")
        text = format_sequence(algebra, psi(whole_category(algebra), m))
        report = Report(
            algebra=str(algebra), command="psi", items=[text], elapsed_ms=_elapsed(start)
        )
        _emit(fmt, report, [text])
    except Exception as e:
        _handle_error(e, "psi")


@cli.command("psi-inv")
@algebra_options
@click.option("--seq", "-s", "seq", required=True, help="tau-exceptional sequence [..]")
def psi_inv_command(algebra: NakayamaAlgebra, fmt: Optional[str], seq: str):
    """TF-ordered module of a tau-exceptional sequence."""
    start = time.perf_counter()
    try:
        text = format_sequence(
            algebra, psi_inv(whole_category(algebra), parse_sequence(algebra, seq))
        )
        report = Report(
            algebra=str(algebra), command="psi-inv", items=[text], elapsed_ms=_elapsed(start)
        )
        _emit(fmt, report, [text])
    except Exception as e:
        _handle_error(e, "psi-inv")


@cli.command("enumerate")
@algebra_options
@click.option("--count", "mode", flag_value="count", default=True, help="Only count (default)")
@click.option("--list", "mode", flag_value="list", help="List every complete sequence")
@click.option(
    "--max-seqs", type=click.IntRange(min=0), default=None, help="Cap on sequences (0 = none)"
)
@click.option("--jobs", "-j", type=click.IntRange(min=1), default=None, help="Worker processes")
def enumerate_command(
    algebra: NakayamaAlgebra,
    fmt: Optional[str],
    mode: str,
    max_seqs: Optional[int],
    jobs: Optional[int],
):
    """Enumerate complete tau-exceptional sequences."""
    start = time.perf_counter()
    try:
        max_seqs = config.engine.max_seqs if max_seqs is None else max_seqs
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=err_console,
            transient=True,
        ) as progress:
            task = progress.add_task(f"Enumerating over {algebra}...", total=None)
            seqs = enumerate_complete(
                algebra, jobs=jobs or config.engine.jobs, max_seqs=max_seqs
            )
            progress.update(task, description=f"Enumerated {len(seqs)} sequences ✓")
        items = [format_sequence(algebra, s) for s in seqs] if mode == "list" else None
        report = Report(
            algebra=str(algebra),
            command="enumerate",
            count=len(seqs),
            total_sequences=count_complete(algebra) if max_seqs else None,
            max_seqs=max_seqs or None,
            items=items,
            elapsed_ms=_elapsed(start),
        )
        lines = items if items is not None else [str(len(seqs))]
        table = None
        if mode == "count":
            rows = [("Count", len(seqs))]
            if max_seqs:
                rows += [("Cap", max_seqs), ("Uncapped total", report.total_sequences)]
            table = _metric_table(f"Complete sequences over {algebra}", rows)
        _emit(fmt, report, lines, table)
    except Exception as e:
        _handle_error(e, "enumerate")


@cli.command()
@algebra_options
@click.option("--word", "-w", required=True, help="Generators, e.g. \"r1 r2 r1'\"")
@click.option("--seq", "-s", "seq", required=True, help="Complete tau-exceptional sequence")
def mutate(algebra: NakayamaAlgebra, fmt: Optional[str], word: str, seq: str):
    """Apply a mutation word (right to left) to a sequence."""
    start = time.perf_counter()
    try:
        w = MutationWord.parse(word)
        text = format_sequence(algebra, apply_word(algebra, w, parse_sequence(algebra, seq)))
        report = Report(
            algebra=str(algebra), command="mutate", items=[text], elapsed_ms=_elapsed(start)
        )
        _emit(fmt, report, [text])
    except Exception as e:
        _handle_error(e, "mutate")


@cli.command()
@algebra_options
@click.option("--seq", "-s", "seq", required=True, help="Sequence with one hole, e.g. [_,M(1,2)]")
def complete(algebra: NakayamaAlgebra, fmt: Optional[str], seq: str):
    """All completions of a complete sequence with one entry left open."""
    start = time.perf_counter()
    try:
        found = completions(algebra, parse_partial_sequence(algebra, seq))
        items = [format_sequence(algebra, s) for s in found]
        report = Report(
            algebra=str(algebra),
            command="complete",
            count=len(items),
            items=items,
            elapsed_ms=_elapsed(start),
        )
        if not items:
            err_console.print("[yellow]No complete sequence fits the given entries.[/yellow]")
        _emit(fmt, report, items)
    except Exception as e:
        _handle_error(e, "complete")


def _record_run(
    store: IRunRepository, result: BraidReport, jobs: int, max_seqs: int, elapsed_ms: float
) -> int:
    run = VerificationRun(
        algebra=str(result.algebra),
        relations=list(result.relations),
        ok=result.ok,
        checked_sequences=result.checked_sequences,
        counterexamples=len(result.counterexamples),
        jobs=jobs,
        max_seqs=max_seqs,
        elapsed_ms=elapsed_ms,
        created_at=datetime.now(timezone.utc),
    )
    return store.save_run(run)


@cli.command("verify-braid")
@algebra_options
@click.option(
    "--relations",
    type=click.Choice(["b1", "b2", "both"]),
    default="both",
    help="Relation families to check",
)
@click.option("--all", "exhaustive", is_flag=True, help="Collect every counterexample")
@click.option("--jobs", "-j", type=click.IntRange(min=1), default=None, help="Worker processes")
@click.option(
    "--max-seqs", type=click.IntRange(min=0), default=None, help="Cap on sequences (0 = none)"
)
@click.option(
    "--record/--no-record", default=None, help="Store the run in the ledger (default: config)"
)
def verify_braid_command(
    algebra: NakayamaAlgebra,
    fmt: Optional[str],
    relations: str,
    exhaustive: bool,
    jobs: Optional[int],
    max_seqs: Optional[int],
    record: Optional[bool],
):
    """Check the braid relations on every complete sequence."""
    start = time.perf_counter()
    try:
        jobs = jobs or config.engine.jobs
        max_seqs = config.engine.max_seqs if max_seqs is None else max_seqs
        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=err_console,
            transient=True,
        ) as progress:
            task = progress.add_task(f"Checking braid relations over {algebra}...", total=None)
            result = verify_braid(
                algebra, relations, exhaustive=exhaustive, jobs=jobs, max_seqs=max_seqs
            )
            progress.update(task, description=f"Checked {result.checked_sequences} sequences ✓")
        elapsed = _elapsed(start)
        report = braid_report(result, elapsed, exhaustive)
        if config.database.record_runs if record is None else record:
            run_id = _record_run(RunStore(config.database.path), result, jobs, max_seqs, elapsed)
            logger.info("Recorded verification run %d", run_id)

        lines = [
            f"ok\t{result.ok}",
            f"checked_sequences\t{result.checked_sequences}",
            f"total_sequences\t{result.total_sequences}",
        ]
        if result.max_seqs:
            lines.append(f"max_seqs\t{result.max_seqs}")
        lines += [f"relation\t{r}" for r in result.relations]
        for w in report.counterexamples or ([report.witness] if report.witness else []):
            lines.append(f"counterexample\t{w.relation}\t{w.sequence}\t{w.left}\t{w.right}")
        if result.ok:
            body = (
                f"[green]All {len(result.relations)} relations hold on "
                f"{result.checked_sequences} complete sequences.[/green]"
            )
            if result.checked_sequences < result.total_sequences:
                body += (
                    f"\n[yellow]Capped at {result.max_seqs} of "
                    f"{result.total_sequences} sequences.[/yellow]"
                )
        else:
            w = report.witness
            body = (
                f"[red]{w.relation} fails on {w.sequence}[/red]\n"
                f"left:  {w.left}\nright: {w.right}"
            )
        panel = Panel(
            body,
            title=f"Braid relations over {algebra}",
            subtitle=", ".join(result.relations) or "no relations apply",
            border_style="green" if result.ok else "red",
        )
        _emit(fmt, report, lines, panel)
        if not result.ok:
            sys.exit(1)
    except Exception as e:
        _handle_error(e, "verify-braid")


@cli.command()
@algebra_options
@click.option(
    "--generators",
    type=click.Choice(["left", "both"]),
    default="left",
    help="Left mutations only, or left and right",
)
@click.option("--jobs", "-j", type=click.IntRange(min=1), default=None, help="Worker processes")
def orbit(algebra: NakayamaAlgebra, fmt: Optional[str], generators: str, jobs: Optional[int]):
    """Orbits of complete sequences under the mutation action."""
    start = time.perf_counter()
    try:
        found = orbits(algebra, generators, jobs=jobs or config.engine.jobs)
        report = orbit_report(algebra, found, _elapsed(start))
        table = Table(title=f"Orbits over {algebra} ({generators} generators)")
        table.add_column("Representative", style="cyan")
        table.add_column("Size", style="green")
        lines = []
        for entry in report.orbits or []:
            table.add_row(entry.representative, str(entry.size))
            lines.append(f"{entry.size}\t{entry.representative}")
        _emit(fmt, report, lines, table)
    except Exception as e:
        _handle_error(e, "orbit")


@cli.command("ar-dot")
@click.option("--algebra", "-a", type=ALGEBRA, required=True, help="Connected algebra literal")
@click.option("--highlight", default=None, help="Reducer whose J(M) is highlighted, e.g. [M(3,3)]")
def ar_dot(algebra: NakayamaAlgebra, highlight: Optional[str]):
    """Print the AR-quiver as a DOT digraph."""
    try:
        reducer = parse_sequence(algebra, highlight) if highlight else None
        click.echo(emit_ar_dot(algebra, reducer), nl=False)
    except Exception as e:
        _handle_error(e, "ar-dot")


@cli.command()
@click.option("--limit", "-l", type=int, default=10, help="Number of runs to show")
def history(limit: int):
    """Show recently recorded verification runs."""
    try:
        store = RunStore(config.database.path)
        runs = store.get_recent_runs(limit)
        if not runs:
            console.print("[yellow]No verification runs recorded yet.[/yellow]")
            return
        table = Table(title=f"Recent runs ({store.get_total_run_count()} total)")
        table.add_column("When", style="cyan")
        table.add_column("Algebra", style="green")
        table.add_column("Relations")
        table.add_column("Verdict")
        table.add_column("Sequences", justify="right")
        table.add_column("ms", justify="right")
        for run in runs:
            table.add_row(
                run.created_at.strftime("%Y-%m-%d %H:%M:%S"),
                run.algebra,
                str(len(run.relations)),
                "[green]ok[/green]" if run.ok else f"[red]{run.counterexamples} failed[/red]",
                str(run.checked_sequences),
                f"{run.elapsed_ms:.0f}",
            )
        console.print(table)
    except Exception as e:
        _handle_error(e, "history")


def main():
    """Main entry point for the CLI application."""
    try:
        cli()
    except KeyboardInterrupt:
        err_console.print("\n[yellow]Operation cancelled by user.[/yellow]")
        sys.exit(0)
    except Exception as e:
        err_console.print(f"[red]Unexpected error: {e}[/red]")
        logger.exception("Unexpected error in main")
        sys.exit(1)


if __name__ == "__main__":
    main()
