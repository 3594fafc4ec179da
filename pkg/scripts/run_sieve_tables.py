"""Tabulate spherical-class candidates for a list of spaces.

    python scripts/run_sieve_tables.py --spaces L2S10:34 QS7:14 --out results/sieve

Each entry is SPACE or SPACE:MAX_DIM.  The basis of Q0S0 grows quickly, so
keep its range modest.
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from loopcalc.algebra import parse_space
from loopcalc.sieve import sieve_report


@dataclass
class SieveConfig:
    spaces: list[str] = field(default_factory=lambda: ["L2S10:34", "L3S11:74", "QS7:14", "QS8:17", "Q0S0:16"])
    min_dim: int = 1
    max_dim: int = 40
    out: str | None = None


def run(cfg: SieveConfig) -> list[dict]:
    rows = []
    for entry in cfg.spaces:
        name, _, top = entry.partition(":")
        top = int(top) if top else cfg.max_dim
        start = time.perf_counter()
        rep = sieve_report(parse_space(name), top, min_dim=cfg.min_dim)
        secs = time.perf_counter() - start
        rows.append(
            {
                "space": name,
                "dims": [cfg.min_dim, top],
                "candidates": {r.dim: [str(c) for c in r.candidates] for r in rep.dims if r.candidates},
                "square_candidates": [str(c) for c in rep.all_square_candidates()],
                "criterion_agree": rep.criterion_agree,
                "criterion_disagree": len(rep.criterion_disagree),
                "seconds": round(secs, 3),
            }
        )
        squares = ", ".join(rows[-1]["square_candidates"]) or "none"
        print(f"{name:>6} <= {top:3d}  squares: {squares:30s} {secs:.2f}s", flush=True)
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--spaces", nargs="+", default=SieveConfig().spaces)
    p.add_argument("--min-dim", type=int, default=SieveConfig.min_dim)
    p.add_argument("--max-dim", type=int, default=SieveConfig.max_dim)
    p.add_argument("--out")
    a = p.parse_args()
    cfg = SieveConfig(a.spaces, a.min_dim, a.max_dim, a.out)
    rows = run(cfg)
    if cfg.out:
        out = Path(cfg.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "sieve.json").write_text(json.dumps({"config": asdict(cfg), "rows": rows}, indent=1) + "\n")


if __name__ == "__main__":
    main()
