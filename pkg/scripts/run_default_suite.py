#!/usr/bin/env python3
"""Run the packaged default verification suite and write the JSON report.

Usage: python scripts/run_default_suite.py [output.json]

Exit code 0 if every non-conjecture case passed, 1 otherwise.
"""

import json
import sys
import time

from q3series.cli import default_suite_config
from q3series.verifier import run_suite


def main() -> int:
    out_path = sys.argv[1] if len(sys.argv) > 1 else "suite_report.json"
    cfg = default_suite_config()
    t0 = time.monotonic()
    suite = run_suite(cfg)
    elapsed = time.monotonic() - t0
    payload = suite.to_dict()
    payload["elapsed_seconds"] = round(elapsed, 1)
    with open(out_path, "w") as fh:
        json.dump(payload, fh, indent=1, sort_keys=True)
    counts = payload["counts"]
    print(f"{len(suite.reports)} cases in {elapsed:.0f}s: "
          f"{counts['PASS']} pass, {counts['FAIL']} documented failures, "
          f"{counts['SKIPPED']} skipped -> {out_path}")
    print(f"overall: {suite.status}")
    return 0 if suite.status == "PASS" else 1


if __name__ == "__main__":
    sys.exit(main())
