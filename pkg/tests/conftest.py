from __future__ import annotations

from pathlib import Path
from typing import Iterator

import pytest

from crossnest.settings import get_settings


@pytest.fixture(autouse=True)
def _isolated_settings(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[None]:
    """Every test gets its own cache file and freshly read settings."""
    monkeypatch.setenv("CROSSNEST_CACHE_PATH", str(tmp_path / "counts.json"))
    monkeypatch.delenv("LOG_LEVEL", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def cache_path(tmp_path: Path) -> Path:
    return tmp_path / "counts.json"
