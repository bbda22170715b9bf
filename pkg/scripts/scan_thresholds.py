#!/usr/bin/env python3
"""Empirical obstruction threshold N*(m) against the 16m line.

    python3 scripts/scan_thresholds.py --m 1 2 3 4 --limit 1000
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from typing import List

from finsurg import obstruct


@dataclass
class ThresholdConfig:
    ms: List[int] = field(default_factory=lambda: [1, 2, 3])
    limit: int = 1000
    workers: int = 1


def run(cfg: ThresholdConfig):
    rows = []
    for m in cfg.ms:
        start = time.perf_counter()
        _, summary = obstruct.scan(m, -cfg.limit, cfg.limit, workers=cfg.workers)
        rows.append(
            {
                "m": m,
                "N*": summary.threshold,
                "16m": summary.claimed_threshold,
                "within_16m": summary.within_claim,
                "N*/m^2": round(summary.threshold / m**2, 2),
                "realized": summary.realized,
                "undetermined": len(summary.undetermined),
                "seconds": round(time.perf_counter() - start, 1),
            }
        )
        if summary.threshold >= cfg.limit:
            rows[-1]["note"] = "threshold reaches the scan limit; raise --limit"
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--limit", type=int, default=1000)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = ThresholdConfig(args.m, args.limit, args.workers)
    rows = run(cfg)
    if args.json:
        print(json.dumps({"config": asdict(cfg), "rows": rows}, indent=2))
        return
    for r in rows:
        flag = "within" if r["within_16m"] else "EXCEEDS"
        print(f"m={r['m']:<3} N*={r['N*']:<6} 16m={r['16m']:<5} {flag:<8} N*/m^2={r['N*/m^2']:<7} "
              f"realized={r['realized']} undetermined={r['undetermined']} ({r['seconds']}s)")


if __name__ == "__main__":
    main()
