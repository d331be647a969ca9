"""Closed-form versus diagram sweep over a list of families.

    python3 scripts/sweep.py                    # default families, 12 points
    python3 scripts/sweep.py --budget 8 --json sweep.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass, field

from ncpqg import crosscheck as cc
from ncpqg.cli import FamilyConfig


@dataclass
class SweepConfig:
    families: list[FamilyConfig] = field(default_factory=lambda: [
        *(FamilyConfig(family="oplusplus", ell=ell) for ell in range(4)),
        FamilyConfig(family="wreath", group="Z2"),
        FamilyConfig(family="wreath", group="Z2", lam="g1"),
        FamilyConfig(family="wreath", group="Z4"),
        FamilyConfig(family="wreath", group="Z4", lam="g2"),
        FamilyConfig(family="wreath", group="V4", lam="c"),
    ])
    budget: int = 12
    max_word_len: int = 3
    samples: int = 200
    seed: int = 0


def sweep_one(cfg: FamilyConfig, sweep: SweepConfig) -> dict:
    family = cfg.build()
    start = time.perf_counter()

    def short(lab):
        return not hasattr(lab, "letters") or len(lab.letters) <= sweep.max_word_len

    cells = cc.fusion_cells(family, sweep.budget, short if cfg.family == "wreath" else None)
    labels = sorted({c.left for c in cells}, key=family.sort_key)
    frob = cc.frobenius_failures(family, labels)
    clo = cc.closure_check(family.category, family.colours, sweep.samples, sweep.seed,
                           max_points=min(sweep.budget, 8), pairs=cfg.family == "oplusplus")
    bad = [c for c in cells if not c.agree]
    return {"config": asdict(cfg), "cells": len(cells), "disagreements": len(bad),
            "frobenius_failures": len(frob), "closure_failures": len(clo.failures),
            "seconds": round(time.perf_counter() - start, 2)}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=12)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--json", dest="out", default=None)
    args = ap.parse_args()
    sweep = SweepConfig(budget=args.budget, samples=args.samples)
    rows = []
    for cfg in sweep.families:
        row = sweep_one(cfg, sweep)
        rows.append(row)
        name = f"{cfg.family} ell={cfg.ell}" if cfg.family == "oplusplus" else \
            f"wreath {cfg.group}/{cfg.lam or 'e'}"
        print(f"{name:22s} cells={row['cells']:5d} disagree={row['disagreements']} "
              f"frobenius={row['frobenius_failures']} closure={row['closure_failures']} "
              f"({row['seconds']}s)")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True)
    ok = all(r["disagreements"] == r["frobenius_failures"] == r["closure_failures"] == 0
             for r in rows)
    return 0 if ok else 4


if __name__ == "__main__":
    raise SystemExit(main())
