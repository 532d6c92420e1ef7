"""Entry point for ``python -m lospa``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())
