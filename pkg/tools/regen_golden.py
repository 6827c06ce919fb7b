"""Regenerate the committed golden corpus summary.

Run from the repository root after any corpus change:
    python3 tools/regen_golden.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from rbx.corpus import verify_corpus

GOLDEN = ROOT / "src" / "rbx" / "corpus_data" / "golden_summary.txt"


def main():
    summary = verify_corpus()
    GOLDEN.write_text("\n".join(summary.lines()) + "\n")
    print("wrote", GOLDEN)
    print(summary.lines()[-1])


if __name__ == "__main__":
    main()
