#!/usr/bin/env python3
"""
lochmf command line.

Commands:
  eval      - Evaluate F, F' or f at a point
  grid      - Sample F and its wall components on a grid (CSV)
  periods   - Periods of f_{k,D} and the rationality congruence
  hecke     - Both sides of a Hecke relation
  verify    - Run the verification harness of a profile
"""

import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from cli.main import main

if __name__ == "__main__":
    sys.exit(main())
