"""Regenerate the bijection golden files under tests/golden/.

Each line of ``bijection_n<N>.jsonl`` is one configuration (in enumeration
order) together with the canonical code it maps to.

    python3 scripts/regen_golden.py
"""

import json
import pathlib

from supercatalan.bijection import enumerate_configs, forward
from supercatalan.codec import format_code

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"
MAX_N = 6


def golden_lines(n):
    lines = []
    for k in range((n - 2) // 2 + 1):
        for cfg in enumerate_configs(n, k):
            row = {"config": json.loads(cfg.to_json()), "code": format_code(forward(cfg))}
            lines.append(json.dumps(row, sort_keys=True))
    return lines


def main():
    GOLDEN.mkdir(exist_ok=True)
    for n in range(2, MAX_N + 1):
        path = GOLDEN / f"bijection_n{n}.jsonl"
        path.write_text("\n".join(golden_lines(n)) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
