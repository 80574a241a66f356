#!/usr/bin/env python3
"""Run the pft command-line tool from a source checkout."""

from pathlib import Path
import sys

# Ensure src/ is on path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from pft_analysis.cli import main


if __name__ == "__main__":
    sys.exit(main())
