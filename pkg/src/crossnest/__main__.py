# src/crossnest/__main__.py
from __future__ import annotations

import sys

from .cli import run


def main() -> None:
    """
    Entry point for the ``crossnest`` script and ``python -m crossnest``.

    Examples:
      crossnest bijection phi --input 1457-26-3
      crossnest table --object partitions --n 6 --format csv
      CROSSNEST_CACHE_PATH=/tmp/counts.json crossnest gkj --k 2 --j 3 --m 7
      LOG_LEVEL=DEBUG crossnest verify --suite all --quick
    """
    sys.exit(run())


if __name__ == "__main__":
    main()
