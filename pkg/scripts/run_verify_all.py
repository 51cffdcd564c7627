"""Run the complete check registry and save the manifest.

Usage:
    python scripts/run_verify_all.py --threads 4 --out manifest.json
"""

import argparse
import sys

from joubert2 import checks
from joubert2.report import EMITTERS


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=None,
                    help="largest element count any single scan may touch")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--out", default=None,
                    help="output path (default: stdout)")
    ap.add_argument("--format", choices=sorted(EMITTERS), default="json")
    args = ap.parse_args()

    manifest = checks.run_all(budget=args.budget, threads=args.threads)
    text = EMITTERS[args.format](manifest)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        t = manifest.tally
        print(f"{args.out}: verdict {manifest.verdict}, "
              f"{t['pass']} passed, {t['fail']} failed, {t['skip']} skipped")
    else:
        sys.stdout.write(text)
    if manifest.verdict == "fail":
        return 1
    if any(c.outcome == "skip" for c in manifest.checks):
        return 3
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
