#!/usr/bin/env python3
"""Least n with some |d(Y_n)| >= target, for a range of m and targets."""
import argparse
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from finsurg import obstruct
from finsurg.numtheory import parse_rational, render


@dataclass
class WitnessConfig:
    ms: List[int] = field(default_factory=lambda: [1, 2, 3])
    targets: List[Fraction] = field(default_factory=lambda: [Fraction(t) for t in (1, 5, 10, 20)])
    cap: int = 10_000


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--target", nargs="+", default=["1", "5", "10", "20"])
    ap.add_argument("--cap", type=int, default=10_000)
    args = ap.parse_args()
    cfg = WitnessConfig(args.m, [parse_rational(t) for t in args.target], args.cap)
    for m in cfg.ms:
        for target in cfg.targets:
            n, vec, d = obstruct.unboundedness_witness(m, target, cfg.cap)
            print(f"m={m} target={render(target):>5}  n={n:<5} vector={vec} d={render(d)}")


if __name__ == "__main__":
    main()
