# src/crossnest/logging.py
from __future__ import annotations

import logging
import logging.config
import os
import sys
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, TextIO

import orjson
import yaml

_DEFAULT_FMT = "%(asctime)s | %(levelname)s | %(name)s: %(message)s"

_STD_ATTRS = {
    "name", "msg", "args", "levelname", "levelno", "pathname", "filename", "module", "exc_info",
    "exc_text", "stack_info", "lineno", "funcName", "created", "msecs", "relativeCreated",
    "thread", "threadName", "processName", "process", "message", "asctime", "taskName",
}


class ExtraJSONFormatter(logging.Formatter):
    """
    Format: "YYYY-mm-dd HH:MM:SS | LEVEL | logger: message | {json of extras}"
    """

    def __init__(self) -> None:
        super().__init__(_DEFAULT_FMT)

    def formatTime(self, record: logging.LogRecord, datefmt: str | None = None) -> str:
        # UTC for consistency across shards
        dt = datetime.fromtimestamp(record.created, tz=timezone.utc)
        return dt.strftime("%Y-%m-%d %H:%M:%S")

    def format(self, record: logging.LogRecord) -> str:
        base = super().format(record)
        extras = {k: v for k, v in record.__dict__.items() if k not in _STD_ATTRS}
        if not extras:
            return base
        try:
            j = orjson.dumps(extras, default=str, option=orjson.OPT_SORT_KEYS).decode()
        except TypeError:
            j = '{"_format_error":"<unserializable extras>"}'
        return f"{base} | {j}"


class StderrHandler(logging.StreamHandler):  # type: ignore[type-arg]
    """Stream handler that looks up ``sys.stderr`` on every emit, so redirected streams work."""

    def __init__(self) -> None:
        super().__init__(stream=sys.stderr)

    @property  # type: ignore[override]
    def stream(self) -> TextIO:
        return sys.stderr

    @stream.setter
    def stream(self, _value: Any) -> None:
        pass


def _config_path() -> Path:
    return Path(__file__).resolve().parent / "config" / "logging.yaml"


def setup_logging(level: str | None = None) -> None:
    """
    Load config/logging.yaml; fall back to basicConfig.
    LOG_LEVEL env (or ``level``) overrides root, package and console handler levels.
    """
    lvl = (level or os.getenv("LOG_LEVEL", "INFO")).upper()
    root = logging.getLogger()
    if getattr(root, "_crossnest_logging_configured", False):
        root.setLevel(lvl)
        logging.getLogger("crossnest").setLevel(lvl)
        for h in root.handlers:
            h.setLevel(lvl)
        return

    cfg = _config_path()
    configured = False
    if cfg.exists():
        with cfg.open("r", encoding="utf-8") as f:
            cfg_dict = yaml.safe_load(f) or {}
        try:
            cfg_dict.setdefault("root", {})["level"] = lvl
            cfg_dict.setdefault("loggers", {}).setdefault("crossnest", {})["level"] = lvl
            handlers = cfg_dict.get("handlers", {})
            if "console" in handlers:
                handlers["console"]["level"] = lvl
            logging.config.dictConfig(cfg_dict)
            configured = True
        except (ValueError, TypeError, AttributeError, ImportError):
            configured = False

    if not configured:
        logging.basicConfig(level=lvl, format=_DEFAULT_FMT, stream=sys.stderr)
    setattr(root, "_crossnest_logging_configured", True)
