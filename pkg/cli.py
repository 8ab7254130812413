import json
import logging
import sys
from typing import List, Optional

import click
from dotenv import load_dotenv

from config.settings import get_settings
from dao.mld_dao import MLDDAO
from models.run_config import RunConfig
from schemas.diagram import OpsRequest
from services.export_service import ExportService
from services.report_service import ReportService
from utils.errors import CheckFailure

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COMPUTATION = 1
EXIT_USAGE = 2
EXIT_CHECK = 3


def _read(ctx: click.Context, path: str) -> str:
    config: RunConfig = ctx.obj["config"].with_input(path)
    ctx.obj["config"] = config
    if config.from_stdin:
        return click.get_text_stream("stdin").read()
    return MLDDAO().read_text(path)


def _emit(ctx: click.Context, response, text: str) -> None:
    if ctx.obj["config"].output_format == "json":
        click.echo(response.model_dump_json(indent=2))
    else:
        click.echo(text)


@click.group()
@click.option("--format", "output_format", type=click.Choice(["text", "json"]), default=None,
              help="Output format (defaults to the configured one)")
@click.option("--log-level", default=None, help="Logging level for stderr")
@click.pass_context
def cli(ctx: click.Context, output_format: Optional[str], log_level: Optional[str]):
    """String-link torsion, Kauffman states and homology tables."""
    settings = get_settings()
    logging.basicConfig(level=(log_level or settings.log_level).upper(), stream=sys.stderr)
    ctx.ensure_object(dict)
    ctx.obj["config"] = RunConfig.from_settings(
        settings, subcommand=ctx.invoked_subcommand, output_format=output_format
    )
    ctx.obj["service"] = ReportService()


@cli.command()
@click.argument("path")
@click.option("--fox", is_flag=True, help="Also compare against the Fox-calculus determinant")
@click.pass_context
def torsion(ctx: click.Context, path: str, fox: bool):
    """Print the state-sum torsion polynomial."""
    service: ReportService = ctx.obj["service"]
    response = service.torsion(service.load(_read(ctx, path)), with_fox=fox)
    text = response.text
    if fox:
        text += f"\nfox unit: {response.fox_unit or 'none'}"
    _emit(ctx, response, text)
    return EXIT_OK


@cli.command()
@click.argument("path")
@click.option("--dump-faces", is_flag=True, help="Print the face complex as JSON")
@click.pass_context
def states(ctx: click.Context, path: str, dump_faces: bool):
    """List Kauffman states with their filtration and grading."""
    service: ReportService = ctx.obj["service"]
    response = service.states(service.load(_read(ctx, path)), dump_faces=dump_faces)
    lines = [f"{s.index}\t{s.assignment}\tF2={tuple(s.F2)}\tG={s.G}" for s in response.states]
    lines.append(f"clock-connected: {'yes' if response.clock_connected else 'no'}")
    if response.case_counts:
        lines.append("cases: " + ", ".join(f"{k}={v}" for k, v in sorted(response.case_counts.items())))
    if dump_faces and response.faces is not None:
        lines.append(json.dumps(response.faces.model_dump(), indent=2))
    _emit(ctx, response, "\n".join(lines))
    return EXIT_OK


@cli.command()
@click.argument("path")
@click.pass_context
def homology(ctx: click.Context, path: str):
    """Print the homology (or chain-rank) table."""
    service: ReportService = ctx.obj["service"]
    response = service.homology(service.load(_read(ctx, path)))
    _emit(ctx, response, response.text)
    return EXIT_OK


@cli.command()
@click.argument("path")
@click.pass_context
def fox(ctx: click.Context, path: str):
    """Torsion from the Wirtinger presentation by Fox calculus."""
    service: ReportService = ctx.obj["service"]
    response = service.fox(service.load(_read(ctx, path)))
    _emit(ctx, response, f"{response.text}\nunit: {response.unit or 'none'}")
    return EXIT_OK


@cli.command()
@click.argument("path")
@click.option("--crossing", type=int, required=True, help="1-based crossing index")
@click.option("--allow-mixed", is_flag=True, help="Allow a crossing between different strands")
@click.pass_context
def skein(ctx: click.Context, path: str, crossing: int, allow_mixed: bool):
    """Compare the torsions of the skein triple at one crossing."""
    service: ReportService = ctx.obj["service"]
    response = service.skein(service.load(_read(ctx, path)), crossing, allow_mixed)
    text = "\n".join([
        f"plus:  {response.plus}",
        f"minus: {response.minus}",
        f"zero:  {response.zero}",
        f"factor: {response.factor or 'none'}" + (f" unit {response.unit}" if response.unit else ""),
    ])
    _emit(ctx, response, text)
    return EXIT_OK


@cli.command()
@click.option("--amalgamate", "op", flag_value="amalgamate", help="Place two diagrams side by side")
@click.option("--compose", "op", flag_value="compose", help="Stack the first diagram on the second")
@click.option("--satellite", "op", flag_value="satellite", help="Cable one strand")
@click.option("--mirror", "op", flag_value="mirror", help="Switch every crossing")
@click.option("--strand", type=int, default=None, help="Strand to cable")
@click.option("--width", type=int, default=2, show_default=True, help="Cable width")
@click.argument("paths", nargs=-1, required=True)
@click.pass_context
def ops(ctx: click.Context, op: Optional[str], strand: Optional[int], width: int, paths: List[str]):
    """Apply a structural operation and print the resulting MLD."""
    if op is None:
        raise click.UsageError("choose one of --amalgamate, --compose, --satellite, --mirror")
    needed = 2 if op in ("amalgamate", "compose") else 1
    if len(paths) != needed:
        raise click.UsageError(f"--{op} takes {needed} diagram file(s)")
    service: ReportService = ctx.obj["service"]
    request = OpsRequest(
        mld=_read(ctx, paths[0]),
        other_mld=_read(ctx, paths[1]) if needed == 2 else None,
        strand=strand,
        width=width,
    )
    response = service.ops(op, request)
    _emit(ctx, response, response.mld.rstrip("\n"))
    return EXIT_OK


@cli.command()
@click.option("--max-crossings", type=int, default=None, help="Crossing limit for random diagrams")
@click.option("--seed", type=int, default=None, help="Seed for the random suites")
@click.pass_context
def check(ctx: click.Context, max_crossings: Optional[int], seed: Optional[int]):
    """Run the invariant and oracle suites."""
    service: ReportService = ctx.obj["service"]
    config: RunConfig = ctx.obj["config"].with_limits(seed=seed, max_crossings=max_crossings)
    ctx.obj["config"] = config
    response = service.check(config.max_crossings, config.seed)
    lines = [f"seed {response.seed}, max crossings {response.max_crossings}"]
    for suite in response.suites:
        lines.append(f"{suite.name}: {suite.passed} passed, {suite.failed} failed")
        lines.extend(f"  {failure}" for failure in suite.failures)
    if response.case_counts:
        lines.append("clock cases: " + ", ".join(f"{k}={v}" for k, v in sorted(response.case_counts.items())))
    if response.non_integral:
        lines.append(f"non-integral filtrations: {', '.join(response.non_integral)}")
    lines.append("OK" if response.ok else "FAILED")
    _emit(ctx, response, "\n".join(lines))
    return EXIT_OK if response.ok else EXIT_CHECK


@cli.command()
@click.argument("path")
@click.option("--output", "output_path", required=True, help="Target .xlsx file")
@click.pass_context
def export(ctx: click.Context, path: str, output_path: str):
    """Write states, homology and a summary to an Excel workbook."""
    service: ReportService = ctx.obj["service"]
    diagram = service.load(_read(ctx, path))
    payload = ExportService(service.torsion_service).export_report_to_excel(diagram)
    with open(output_path, "wb") as handle:
        handle.write(payload)
    logger.info(f"✅ Report written to {output_path}")
    return EXIT_OK


def run(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    try:
        result = cli.main(args=argv, prog_name="stringlink", standalone_mode=False)
    except click.UsageError as e:
        click.echo(f"usage error: {e.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as e:
        click.echo(f"error: {e.format_message()}", err=True)
        return EXIT_USAGE
    except CheckFailure as e:
        click.echo(f"check failed: {e}", err=True)
        return EXIT_CHECK
    except Exception as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_COMPUTATION
    return result if isinstance(result, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
