"""Dimension table for a family at several values of N.

    python3 scripts/dim_table.py --family oplusplus --ell 2 --N 4 5 6
    python3 scripts/dim_table.py --family wreath --group Z1 --N 4 5 6 7
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field

from ncpqg.cli import FamilyConfig, one_dim_pins
from ncpqg.fusion import dimension_solve


@dataclass
class TableConfig:
    family: FamilyConfig = field(default_factory=FamilyConfig)
    Ns: tuple[int, ...] = (4, 5, 6)
    maxlen: int = 3


def table(cfg: TableConfig) -> tuple[list, dict]:
    fam = cfg.family.build()
    pins = one_dim_pins(fam, cfg.maxlen)
    cols = {}
    for n in cfg.Ns:
        sol = dimension_solve(fam, n, cfg.maxlen, require=[], known=pins)
        cols[n] = sol.values
    labels = sorted(set().union(*cols.values()), key=fam.sort_key)
    rows = [[fam.format(lab)] + [cols[n].get(lab, "?") for n in cfg.Ns] for lab in labels]
    return rows, cols


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=["oplusplus", "wreath"], default="oplusplus")
    ap.add_argument("--ell", type=int, default=0)
    ap.add_argument("--group", default="Z2")
    ap.add_argument("--lambda", dest="lam", default=None)
    ap.add_argument("--gens", default=None)
    ap.add_argument("--N", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--maxlen", type=int, default=3)
    args = ap.parse_args()
    fc = FamilyConfig(args.family, args.ell, args.group, args.lam, args.gens)
    fc.validate(need_n=False)
    if min(args.N) < 4:
        ap.error("N must be at least 4")
    cfg = TableConfig(fc, tuple(args.N), args.maxlen)
    rows, _ = table(cfg)
    header = ["label"] + [f"N={n}" for n in cfg.Ns]
    widths = [max(len(str(r[i])) for r in rows + [header]) for i in range(len(header))]
    for r in [header] + rows:
        print("  ".join(str(x).rjust(w) if i else str(x).ljust(w) for i, (x, w) in enumerate(zip(r, widths))))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
