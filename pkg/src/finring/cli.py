import csv
import io
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

import click
import click_log
import numpy as np

from finring import __version__
from finring.classify import VERDICT_NAMES, UnknownPredicate, Verdict, canonical_predicate
from finring.exprlang import ExpressionError, EvaluationError, Evaluator
from finring.groups import FiniteGroup, element_orders, group_prime
from finring.radicals import RingProfile
from finring.rings import FiniteRing
from finring.storage import ClassificationCache, dumps, load_ring, save_group, save_ring
from finring.theorems import (
    AuditContext,
    CatalogConfig,
    ClaimStatus,
    Report,
    UnknownClaim,
    build_catalog,
    get_claim,
    run_suite,
)
from finring.util import FinringError, Limits


logger = logging.getLogger(__name__)

EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2
EXIT_CONSTRUCTION = 3


class CommandFailed(click.ClickException):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class CliContext(object):
    def __init__(self, limits: Limits, cache: Optional[ClassificationCache]) -> None:
        self.limits = limits
        self.cache = cache
        self.evaluator = Evaluator(limits)

    def audit_context(self, config: Optional[CatalogConfig] = None) -> AuditContext:
        catalog = build_catalog(config, self.limits, self.evaluator) if config else None
        return AuditContext(self.limits, catalog, self.cache, self.evaluator)


def __verbosity_count_to_log_level(count: int) -> int:
    if count <= 0:
        return logging.ERROR
    elif count == 1:
        return logging.WARN
    elif count == 2:
        return logging.INFO
    else:
        return logging.DEBUG


@contextmanager
def _exit_codes() -> Iterator[None]:
    """Maps engine errors onto the documented exit codes."""
    try:
        yield
    except UnknownClaim as ex:
        raise CommandFailed(str(ex), EXIT_USAGE)
    except UnknownPredicate as ex:
        raise CommandFailed(str(ex), EXIT_USAGE)
    except EvaluationError as ex:
        raise CommandFailed(str(ex), EXIT_CONSTRUCTION)
    except ExpressionError as ex:
        raise CommandFailed(str(ex), EXIT_USAGE)
    except (FinringError, OSError) as ex:
        raise CommandFailed(str(ex), EXIT_CONSTRUCTION)


@click.group()
@click.option(
    "--max-order",
    envvar="FINRING_MAX_ORDER",
    default=4096,
    show_default=True,
    type=click.IntRange(min=1),
    help="Size cap: no ring or group larger than this is ever built.",
)
@click.option(
    "--expensive-order",
    envvar="FINRING_EXPENSIVE_ORDER",
    default=1024,
    show_default=True,
    type=click.IntRange(min=1),
    help="Above this order the exchange, pi-regular and unit-regular scans report skipped(size).",
)
@click.option(
    "--skip-expensive",
    default=False,
    is_flag=True,
    help="Skip the exchange, pi-regular and unit-regular scans at every order.",
)
@click.option(
    "--cache-dir",
    envvar="FINRING_CACHE_DIR",
    type=click.Path(file_okay=False),
    help="Where classification records are cached; defaults to a directory in the user's application data.",
)
@click.option(
    "--no-cache",
    default=False,
    is_flag=True,
    help="Neither read nor write the classification cache.",
)
@click.option("-v", "--verbose", count=True, help="Set the verbosity level.")
@click.version_option(__version__)
@click.pass_context
def main(
    ctx: click.Context,
    max_order: int,
    expensive_order: int,
    skip_expensive: bool,
    cache_dir: Optional[str],
    no_cache: bool,
    verbose: int,
) -> None:
    """Builds finite rings from expressions, classifies them, and audits claims about W√JU rings
    over a catalog of small rings."""
    logger = click_log.basic_config()
    logger.setLevel(__verbosity_count_to_log_level(verbose))
    limits = Limits(
        size_cap=max_order, expensive_order=expensive_order, skip_expensive=skip_expensive
    )
    cache = None
    if not no_cache:
        directory = Path(cache_dir) if cache_dir else Path(click.get_app_dir("finring")) / "cache"
        cache = ClassificationCache(directory)
    ctx.obj = CliContext(limits, cache)


def _read_seed_catalog(path: Optional[str]) -> Tuple[str, ...]:
    """One expression per line; blank lines and lines starting with # are ignored."""
    if not path:
        return ()
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return tuple(line.strip() for line in lines if line.strip() and not line.strip().startswith("#"))


def _write(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
    else:
        click.echo(text)


@main.command()
@click.argument("expression")
@click.option("--json", "as_json", default=False, is_flag=True, help="Print JSON instead of text.")
@click.pass_obj
def describe(my_ctx: CliContext, expression: str, as_json: bool) -> None:
    """Prints the order, characteristic and distinguished subsets of the ring EXPRESSION names.

    The subsets themselves are listed for rings of order up to 64; only their sizes above that.
    Group expressions print the group's order and element orders.
    """
    with _exit_codes():
        built = my_ctx.evaluator.evaluate(expression)
        if isinstance(built, FiniteGroup):
            summary = _group_summary(built)
        else:
            summary = _ring_summary(my_ctx.audit_context().profile(built), my_ctx.limits)
    if as_json:
        click.echo(dumps(summary))
    else:
        __pretty_print_summary(summary)


def _group_summary(group: FiniteGroup) -> Dict[str, object]:
    return {
        "expression": group.label,
        "order": group.order,
        "identity": group.identity,
        "element_orders": element_orders(group),
        "p_group_prime": group_prime(group),
    }


def _ring_summary(profile: RingProfile, limits: Limits) -> Dict[str, object]:
    ring = profile.ring
    units = profile.units
    central_idempotents = profile.idempotents & profile.center
    sets = {
        "units": units,
        "jacobson": profile.jacobson,
        "sqrt_jacobson": profile.sqrt_jacobson,
        "idempotents": profile.idempotents,
        "nilpotents": profile.nilpotents,
        "center": profile.center,
        "prime_radical": profile.prime_radical,
    }
    summary: Dict[str, object] = {
        "expression": ring.label,
        "hash": ring.digest,
        "order": ring.order,
        "characteristic": profile.characteristic,
        "commutative": profile.commutative,
        "field": ring.order > 1 and profile.commutative and int(units.sum()) == ring.order - 1,
        "central_idempotents": int(central_idempotents.sum()),
    }
    summary["sizes"] = {name: int(mask.sum()) for name, mask in sets.items()}
    if ring.order <= limits.local_order:
        summary["sets"] = {name: np.flatnonzero(mask).tolist() for name, mask in sets.items()}
    return summary


def __pretty_print_summary(summary: Dict[str, object]) -> None:
    click.echo(click.style(str(summary["expression"]), fg="cyan", bold=True))
    for key, value in summary.items():
        if key in ("expression", "sizes", "sets"):
            continue
        click.echo(f"  {key}: {value}")
    sizes = summary.get("sizes", {})
    sets = summary.get("sets", {})
    assert isinstance(sizes, dict) and isinstance(sets, dict)
    for name, size in sizes.items():
        members = f" {sets[name]}" if name in sets else ""
        click.echo(f"  |{name}| = {click.style(str(size), fg='yellow')}{members}")


@main.command()
@click.argument("expression")
@click.option(
    "-p",
    "--predicate",
    "predicates",
    multiple=True,
    help="Only report this predicate; may be repeated.  Aliases such as weakly_semi_boolean are accepted.",
)
@click.option("--json", "as_json", default=False, is_flag=True, help="Print JSON instead of text.")
@click.pass_obj
def classify(
    my_ctx: CliContext, expression: str, predicates: Tuple[str, ...], as_json: bool
) -> None:
    """Evaluates every ring class predicate on the ring EXPRESSION names."""
    with _exit_codes():
        names = [canonical_predicate(p) for p in predicates] or list(VERDICT_NAMES)
        ring = my_ctx.evaluator.ring(expression)
        record = my_ctx.audit_context().record(ring)
    if as_json:
        encoded = record.encode_json()
        if predicates:
            encoded = {key: encoded[key] for key in ["hash"] + names + ["characteristic"]}
        click.echo(dumps(encoded))
        return
    click.echo(f"{click.style(ring.label, fg='cyan', bold=True)} (characteristic {record.characteristic})")
    for name in names:
        click.echo(f"  {name}: {__styled_verdict(record.verdicts[name])}")


def __styled_verdict(verdict: Verdict) -> str:
    if verdict is None:
        return click.style("skipped(size)", fg="yellow")
    return click.style("yes", fg="green") if verdict else click.style("no", fg="red")


@main.command()
@click.option(
    "--claims",
    default="all",
    show_default=True,
    help="Comma separated claim ids, or all.",
)
@click.option(
    "--expr",
    "expressions",
    multiple=True,
    help="Check the claims on this ring instead of the catalog; may be repeated.",
)
@click.option(
    "--seed-catalog",
    type=click.Path(exists=True, dir_okay=False),
    help="File of extra expressions, one per line, added to the catalog.",
)
@click.option("--json", "as_json", default=False, is_flag=True, help="Print the JSON report.")
@click.option(
    "--output",
    type=click.Path(dir_okay=False, writable=True),
    help="Write the JSON report to this file.",
)
@click.pass_obj
def verify(
    my_ctx: CliContext,
    claims: str,
    expressions: Tuple[str, ...],
    seed_catalog: Optional[str],
    as_json: bool,
    output: Optional[str],
) -> None:
    """Audits claims over the catalog and exits with status 1 when any claim fails.

    A failure is a candidate counterexample: the report names the ring, the witnessing elements and
    a command that re-checks just that claim on just that ring.
    """
    with _exit_codes():
        claim_ids = None if claims.strip().lower() == "all" else [c.strip() for c in claims.split(",") if c.strip()]
        for claim_id in claim_ids or []:
            get_claim(claim_id)
        if expressions:
            for expression in expressions:
                my_ctx.evaluator.ring(expression)
            config = CatalogConfig.of_expressions(expressions)
        else:
            config = CatalogConfig(extra_expressions=_read_seed_catalog(seed_catalog))
        context = my_ctx.audit_context(config)
        report = run_suite(context, claim_ids)
        if output:
            _write(dumps(report), output)
    if as_json:
        click.echo(dumps(report))
    else:
        __pretty_print_report(report)
    if not report.passed:
        sys.exit(EXIT_CLAIM_FAILED)


def __pretty_print_report(report: Report) -> None:
    click.echo(f"{click.style(str(report.catalog_size), fg='cyan')} rings in the catalog")
    for summary in report.summaries:
        counts = summary.counts
        status = (
            click.style("FAIL", fg="red", bold=True)
            if summary.failures
            else click.style("ok", fg="green")
        )
        click.echo(
            f"{summary.claim_id:<12} {status:<4} "
            f"pass {counts[ClaimStatus.PASS]}, fail {counts[ClaimStatus.FAIL]}, "
            f"skipped {counts[ClaimStatus.SKIPPED]}, not applicable {counts[ClaimStatus.NOT_APPLICABLE]}"
        )
        for outcome in summary.outcomes:
            if outcome.failed and outcome.witness is not None:
                witness = outcome.witness
                click.echo(
                    f"\t{click.style(outcome.expression, fg='magenta')} {list(witness.elements)} {witness.note}"
                )
                click.echo(f"\t  re-check: {witness.recheck(summary.claim_id)}")


@main.command()
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
    help="Table format.",
)
@click.option(
    "--seed-catalog",
    type=click.Path(exists=True, dir_okay=False),
    help="File of extra expressions, one per line, added to the catalog.",
)
@click.option(
    "--output",
    type=click.Path(dir_okay=False, writable=True),
    help="Write the table to this file instead of standard output.",
)
@click.pass_obj
def census(my_ctx: CliContext, fmt: str, seed_catalog: Optional[str], output: Optional[str]) -> None:
    """Classifies every catalog ring: one row per ring with its expression, order, characteristic and
    every verdict, verdicts in alphabetical order."""
    with _exit_codes():
        context = my_ctx.audit_context(CatalogConfig(extra_expressions=_read_seed_catalog(seed_catalog)))
        rows = census_rows(context)
    _write(census_csv(rows) if fmt == "csv" else dumps(rows), output)


CENSUS_COLUMNS = ["expression", "order", "characteristic"] + sorted(VERDICT_NAMES)


def census_rows(context: AuditContext) -> List[Dict[str, object]]:
    rows = []
    for entry in context.catalog:
        record = context.record(entry.ring)
        encoded = record.encode_json()
        row: Dict[str, object] = {
            "expression": entry.expression,
            "order": entry.ring.order,
            "characteristic": record.characteristic,
        }
        row.update((name, encoded[name]) for name in sorted(VERDICT_NAMES))
        rows.append(row)
    return rows


def census_csv(rows: List[Dict[str, object]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CENSUS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: str(v).lower() if isinstance(v, bool) else v for k, v in row.items()})
    return buffer.getvalue().rstrip("\n")


@main.command()
@click.argument("expression")
@click.argument("path", type=click.Path(dir_okay=False, writable=True))
@click.pass_obj
def save(my_ctx: CliContext, expression: str, path: str) -> None:
    """Writes the ring or group EXPRESSION names to PATH as JSON."""
    with _exit_codes():
        built = my_ctx.evaluator.evaluate(expression)
        if isinstance(built, FiniteRing):
            save_ring(built, path)
        else:
            save_group(built, path)
    click.echo(f"wrote {click.style(built.label, fg='cyan')} ({built.order} elements) to {path}")


@main.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--json", "as_json", default=False, is_flag=True, help="Print JSON instead of text.")
@click.pass_obj
def load(my_ctx: CliContext, path: str, as_json: bool) -> None:
    """Reads a ring file, re-checks the ring axioms and describes the ring."""
    with _exit_codes():
        ring = load_ring(path, my_ctx.limits)
        summary = _ring_summary(my_ctx.audit_context().profile(ring), my_ctx.limits)
    if as_json:
        click.echo(dumps(summary))
    else:
        __pretty_print_summary(summary)
