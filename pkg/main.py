"""Run the worked-example reproduction report, or forward arguments to the CLI."""

import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:] or ["repro"]))
