# src/crossnest/cli.py
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Sequence

import click
from pydantic import BaseModel, ValidationError

from .cache import CountCache
from .errors import CrossnestError
from .logging import setup_logging
from .settings import get_settings
from .tools import register as register_tools
from .utils.render import dump_json, utc_now

log = logging.getLogger("crossnest.cli")

@dataclass
class AppState:
    cache: CountCache
    timestamps: bool = False

    def emit(
        self,
        fmt: str,
        doc: BaseModel | dict[str, Any],
        text: str,
        csv: str | None = None,
    ) -> None:
        if fmt == "json":
            click.echo(dump_json(doc, timestamp=self.timestamps))
            return
        if fmt == "csv":
            if csv is None:
                raise click.UsageError("csv output is only available for tables")
            body = csv.rstrip("\n")
        else:
            body = text
        if self.timestamps:
            click.echo(f"# generated {utc_now()}")
        click.echo(body)


def _validation_message(e: ValidationError) -> str:
    parts = []
    for err in e.errors():
        where = ".".join(str(x) for x in err.get("loc", ())) or "input"
        parts.append(f"{where}: {err.get('msg')}")
    return "; ".join(parts)


class _DomainGroup(click.Group):
    """Turns domain errors into exit 1 and parameter validation errors into exit 2."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except CrossnestError as e:
            log.debug("cli.domain_error", extra={"error": type(e).__name__})
            raise click.ClickException(str(e)) from e
        except ValidationError as e:
            raise click.UsageError(_validation_message(e), ctx) from e


@click.group(cls=_DomainGroup)
@click.option("--log-level", default=None, help="Overrides LOG_LEVEL (DEBUG, INFO, WARNING...).")
@click.option("--no-cache", is_flag=True, help="Neither read nor write the count cache.")
@click.option("--timestamps", is_flag=True, help="Stamp output with the generation time.")
@click.version_option(package_name="crossnest")
@click.pass_context
def cli(ctx: click.Context, log_level: str | None, no_cache: bool, timestamps: bool) -> None:
    """Crossings and nestings of set partitions: bijections, statistics, tables and counts."""
    setup_logging(log_level)
    cfg = get_settings()
    cache = CountCache.from_settings(cfg, enabled=not no_cache)
    ctx.obj = AppState(cache=cache, timestamps=timestamps)


register_tools(cli)


def run(argv: Sequence[str] | None = None) -> int:
    """Dispatch ``argv`` and return the exit code instead of exiting."""
    try:
        rv = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="crossnest",
            standalone_mode=False,
        )
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return rv if isinstance(rv, int) else 0
