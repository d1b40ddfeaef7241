"""Write verification reports for the stated and the corrected case tables side by side.

    python3 scripts/sweep_report.py --max-vertices 5 --max-n 3 --outdir reports
"""

import argparse
from dataclasses import replace
from pathlib import Path

from srpowers.harness import VerifyConfig, run_verify


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--outdir", default="reports")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    base = VerifyConfig(args.max_vertices, args.max_n, with_isolated=True,
                        workers=args.workers, dedupe=True)
    for name, cfg in (("stated", base), ("corrected", replace(base, corrected=True))):
        report = run_verify(cfg)
        path = out / f"verify_{name}.csv"
        path.write_text(report.render("csv"))
        print(f"{name}: {report.cases} cases, {report.mismatches} mismatches "
              f"in {report.wall_time:.1f}s -> {path}")
        for key, count in report.mismatch_branches().items():
            print(f"  {key}: {count}")


if __name__ == "__main__":
    main()
