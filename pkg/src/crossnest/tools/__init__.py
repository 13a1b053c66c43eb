# src/crossnest/tools/__init__.py
import click

from .algebra import register_algebra
from .bijection import register_bijection
from .paths import register_paths
from .stats import register_stats
from .table import register_table
from .verify import register_verify
from .walks import register_walks


def register(cli: click.Group) -> None:
    register_bijection(cli)
    register_stats(cli)
    register_table(cli)
    register_walks(cli)
    register_algebra(cli)
    register_paths(cli)
    register_verify(cli)
