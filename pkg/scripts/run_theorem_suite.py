#!/usr/bin/env python3
"""Run the full theorem catalog over the default family and print the
verdict table (same as `closure-lab verify --theorems all`)."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from closure_lab.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify", "--theorems", "all", "--family", "default", *sys.argv[1:]]))
