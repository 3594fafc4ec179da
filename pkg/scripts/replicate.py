"""Run the replication catalog and write per-case results as JSON lines.

    python scripts/replicate.py --out results/replication.jsonl
"""
from __future__ import annotations

import argparse
import json
from dataclasses import dataclass, field
from pathlib import Path

from loopcalc.replication import run_replication


@dataclass
class ReplicationConfig:
    cases: list[str] = field(default_factory=list)
    out: str | None = None


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--case", action="append", default=[])
    p.add_argument("--out")
    a = p.parse_args()
    cfg = ReplicationConfig(a.case, a.out)
    results = run_replication(cfg.cases or None)
    lines = [json.dumps(r.as_dict()) for r in results]
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.case_id:28s} {r.n_checks:4d} checks  {r.seconds:.3f}s")
    if cfg.out:
        Path(cfg.out).parent.mkdir(parents=True, exist_ok=True)
        Path(cfg.out).write_text("\n".join(lines) + "\n")
    raise SystemExit(0 if all(r.passed for r in results) else 1)


if __name__ == "__main__":
    main()
