"""Compare the closed-form annihilation test on Q_0S^0 with direct sweeps,
over growing domains, and report any disagreement.

    python scripts/crosscheck_criterion.py --max-dim 128 --max-length 6
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from loopcalc.sieve import criterion_crosscheck


@dataclass
class CrosscheckConfig:
    max_dim: int = 72
    max_length: int = 4
    step: int = 12


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-dim", type=int, default=CrosscheckConfig.max_dim)
    p.add_argument("--max-length", type=int, default=CrosscheckConfig.max_length)
    p.add_argument("--step", type=int, default=CrosscheckConfig.step)
    a = p.parse_args()
    cfg = CrosscheckConfig(a.max_dim, a.max_length, a.step)
    status = 0
    for top in range(cfg.step, cfg.max_dim + 1, cfg.step):
        start = time.perf_counter()
        agree, witnesses = criterion_crosscheck(top, cfg.max_length)
        print(f"dim <= {top:3d}, length <= {cfg.max_length}: {agree} agree, {len(witnesses)} disagree"
              f"  ({time.perf_counter() - start:.2f}s)")
        for I, i, closed, direct in witnesses[:10]:
            print(f"    Q^{I} z{i}: criterion {closed}, sweep {direct}")
        status |= bool(witnesses)
    raise SystemExit(status)


if __name__ == "__main__":
    main()
