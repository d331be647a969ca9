"""Command-line front end: ``ncpqg {fusion,irreps,check,crosscheck,dims}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from collections import Counter
from dataclasses import dataclass, field

from . import crosscheck as cc
from .diagrams import DiagramError, from_json as partition_from_json, to_json as partition_to_json
from .fusion import (BudgetExceeded, LabelParseError, NotMember, Underdetermined,
                     dimension_solve, discover_labels, point_budget, tensor_decompose)
from .groups import (DIHEDRAL_LETTERS, GeneratingSet, Group, GroupError, closure, dihedral_eval,
                     klein_four)
from .oplusplus import OPlusPlus
from .wreath import WreathFamily, Word

EXIT_OK, EXIT_CONFIG, EXIT_BUDGET, EXIT_DISAGREE = 0, 2, 3, 4


class ConfigError(ValueError):
    pass


# ------------------------------------------------------------ config

def _load_json(text: str):
    """Inline JSON, or the contents of a file."""
    s = text.strip()
    if s.startswith("{") or s.startswith("["):
        return json.loads(s)
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            return json.load(fh)
    raise ConfigError(f"{text!r} is neither JSON nor a readable file")


def parse_group(text: str) -> Group:
    s = text.strip()
    low = s.lower()
    if low in ("z", "zinf", "z0"):
        return Group.cyclic(0)
    if low in ("trivial", "1", "e"):
        return Group.cyclic(1)
    if low in ("v4", "klein", "z2xz2", "z2*z2"):
        return klein_four()
    m = re.fullmatch(r"[zZ](\d+)", s)
    if m:
        order = int(m.group(1))
        if order == 0:
            return Group.cyclic(0)
        return Group.cyclic(order)
    return Group.from_json(_load_json(s))


def parse_lambda(group: Group, text: str | None):
    if text is None:
        return closure(group, [])
    s = text.strip()
    if s.lower() in ("all", "gamma", "full"):
        if not group.is_finite:
            return closure(group, [1])
        return closure(group, group.elements())
    if s.startswith("{") or s.startswith("["):
        data = json.loads(s)
        gens = data.get("generators", []) if isinstance(data, dict) else data
        return closure(group, [group.parse(str(g)) for g in gens])
    if s in ("", "e", "{e}"):
        return closure(group, [])
    return closure(group, [group.parse(x) for x in s.split(",") if x.strip()])


def parse_gens(group: Group, text: str | None) -> GeneratingSet:
    """``name:element`` pairs separated by commas, or a JSON generating set.

    In the short form the inverse of each colour is the colour carrying the
    inverse element.
    """
    if text is None:
        return GeneratingSet.default(group)
    s = text.strip()
    if s.startswith("{") or os.path.exists(s):
        return GeneratingSet.from_json(group, _load_json(s))
    values = {}
    for item in s.split(","):
        name, sep, elem = item.partition(":")
        if not sep or not name.strip():
            raise ConfigError(f"bad colour entry {item!r}; expected name:element")
        values[name.strip()] = group.parse(elem)
    by_value: dict[int, list[str]] = {}
    for name, g in values.items():
        by_value.setdefault(g, []).append(name)
    colours = {}
    for name, g in values.items():
        candidates = by_value.get(group.inv(g), [])
        if group.inv(g) == g:
            inv = name
        elif len(candidates) == 1:
            inv = candidates[0]
        else:
            raise ConfigError(f"cannot determine the inverse colour of {name!r}")
        colours[name] = (inv, g)
    return GeneratingSet.build(group, colours)


@dataclass
class FamilyConfig:
    family: str = "oplusplus"
    ell: int = 0
    group: str = "Z2"
    lam: str | None = None
    gens: str | None = None
    N: int | None = None
    maxlen: int | None = None
    budget: int | None = None
    extra: dict = field(default_factory=dict)

    def validate(self, need_n: bool = False) -> None:
        if self.family not in ("oplusplus", "wreath"):
            raise ConfigError(f"unknown family {self.family!r}")
        if self.ell < 0:
            raise ConfigError("ell must be >= 0")
        if self.N is not None and self.N < 4:
            raise ConfigError("N must be at least 4")
        if need_n and self.N is None:
            raise ConfigError("this command needs --N")
        if self.maxlen is not None and self.maxlen < 0:
            raise ConfigError("maxlen must be >= 0")
        if self.budget is not None and self.budget < 0:
            raise ConfigError("budget must be >= 0")

    def build(self):
        if self.family == "oplusplus":
            return OPlusPlus(self.ell)
        group = parse_group(self.group)
        return WreathFamily(parse_gens(group, self.gens), parse_lambda(group, self.lam))


# ------------------------------------------------------------ helpers

def parse_label(family, text: str):
    if text.strip() == "1":
        return family.trivial
    return family.parse(text)


def sorted_multiset(family, counter: Counter) -> list[str]:
    out = []
    for lab in sorted(counter, key=family.sort_key):
        out += [family.format(lab)] * counter[lab]
    return out


def label_points(family, label) -> int:
    return 2 * family.representative(label).m


def _fusion_cell(family, a, b, method: str, budget: int) -> dict:
    cell = {"left": family.format(a), "right": family.format(b), "method": method}
    if method in ("closed", "both"):
        cell["closed"] = sorted_multiset(family, family.fusion(a, b))
    if method in ("diagram", "both"):
        p, q = family.representative(a), family.representative(b)
        points = 2 * (p.m + q.m)
        if points > budget:
            raise BudgetExceeded(f"{points} points exceed the budget of {budget}")
        terms = tensor_decompose(p, q, family.category)
        labels = Counter(family.label(t.partition, check=False) for t in terms)
        cell["diagram"] = sorted_multiset(family, labels)
        cell["terms"] = [{"kind": t.kind, "k": t.k, "partition": partition_to_json(t.partition),
                          "label": family.format(family.label(t.partition, check=False))}
                         for t in terms]
    if method == "both":
        cell["agree"] = cell["closed"] == cell["diagram"]
    return cell


# ------------------------------------------------------------ commands

def cmd_fusion(cfg: FamilyConfig, left: str, right: str, method: str = "closed") -> dict:
    family = cfg.build()
    a, b = parse_label(family, left), parse_label(family, right)
    cell = _fusion_cell(family, a, b, method, point_budget(cfg.budget))
    return {"family": family.describe(), "cell": cell}


def cmd_irreps(cfg: FamilyConfig) -> dict:
    family = cfg.build()
    maxlen = 2 if cfg.maxlen is None else cfg.maxlen
    reps = discover_labels(family, maxlen, cfg.budget)
    labels = sorted(reps, key=family.sort_key)
    dims = {}
    if cfg.N is not None:
        dims = dimension_solve(family, cfg.N, maxlen, require=[], budget=cfg.budget,
                               known=one_dim_pins(family, maxlen, cfg.budget)).values
    rows = []
    for lab in labels:
        p = reps[lab]
        row = {"label": family.format(lab), "word": list(p.upper)}
        if cfg.N is not None:
            row["dimension"] = dims.get(lab)
        rows.append(row)
    return {"family": family.describe(), "maxlen": maxlen, "N": cfg.N, "irreps": rows}


def _violation_witness(family, p) -> dict:
    if isinstance(family, OPlusPlus):
        if all(c in DIHEDRAL_LETTERS for c in p.upper + p.lower):
            g = dihedral_eval(p.upper) * dihedral_eval(p.lower).inverse()
            return {"dihedral": [g.t, g.eps]}
        return {}
    gens, grp = family.gens, family.group
    try:
        return {"phi_upper": grp.name(gens.phi(p.upper)), "phi_lower": grp.name(gens.phi(p.lower))}
    except KeyError:
        return {}


def cmd_check(cfg: FamilyConfig, source: str) -> dict:
    family = cfg.build()
    if source == "-":
        data = json.load(sys.stdin)
    else:
        data = _load_json(source)
    p = partition_from_json(data)
    reason = family.category.violation(p)
    out = {"family": family.describe(), "partition": partition_to_json(p),
           "member": reason is None, "violation": reason}
    if reason is not None:
        out["witness"] = _violation_witness(family, p)
    return out


def _keep(family, maxlen):
    if maxlen is None:
        return None
    if isinstance(family, OPlusPlus):
        return lambda lab: lab.n <= maxlen
    return lambda lab: not isinstance(lab, Word) or len(lab.letters) <= maxlen


def cmd_crosscheck(cfg: FamilyConfig, samples: int = 100, seed: int = 0) -> dict:
    family = cfg.build()
    budget = point_budget(cfg.budget)
    report = {"family": family.describe(), "budget": budget, "cells": [], "frobenius": [],
              "associativity": [], "closure": {"samples": 0, "checks": 0, "failures": []},
              "agree": True}
    if budget == 0:
        return report
    keep = _keep(family, cfg.maxlen)
    cells = cc.fusion_cells(family, budget, keep)
    report["cells"] = [{"left": family.format(c.left), "right": family.format(c.right),
                        "closed": sorted_multiset(family, c.closed),
                        "diagram": sorted_multiset(family, c.diagram), "agree": c.agree}
                       for c in cells]
    labels = sorted({c.left for c in cells}, key=family.sort_key)
    report["frobenius"] = [{"left": family.format(a), "right": family.format(b), "multiplicity": m}
                           for a, b, m in cc.frobenius_failures(family, labels)]
    small = [lab for lab in labels if label_points(family, lab) <= max(budget // 3, 2)]
    report["associativity"] = [[family.format(x) for x in t]
                               for t in cc.associativity_failures(family, small)]
    pairs = isinstance(family, OPlusPlus)
    clo = cc.closure_check(family.category, family.colours, samples, seed,
                           max_points=min(budget, 8), pairs=pairs)
    report["closure"] = {"samples": clo.samples, "checks": clo.checks,
                         "failures": [{"operation": name, "input": partition_to_json(p),
                                       "result": partition_to_json(r)}
                                      for name, p, _, r in clo.failures]}
    report["agree"] = (all(c["agree"] for c in report["cells"]) and not report["frobenius"]
                       and not report["associativity"] and not clo.failures)
    return report


def one_dim_pins(family, maxlen: int, budget: int | None = None) -> dict:
    """``d = 1`` for every one-dimensional label met on words up to ``maxlen``."""
    return {lab: 1 for lab in discover_labels(family, maxlen, budget)
            if family.is_one_dimensional(lab)}


def cmd_dims(cfg: FamilyConfig, labels: list[str] | None = None, pin: bool = True) -> dict:
    family = cfg.build()
    maxlen = 3 if cfg.maxlen is None else cfg.maxlen
    wanted = [parse_label(family, x) for x in labels or []]
    known = one_dim_pins(family, maxlen, cfg.budget) if pin else {}
    sol = dimension_solve(family, cfg.N, maxlen, require=wanted, budget=cfg.budget, known=known)
    rows = [{"label": family.format(lab), "dimension": sol.values[lab]}
            for lab in sorted(sol.values, key=family.sort_key)]
    return {"family": family.describe(), "N": cfg.N, "maxlen": maxlen, "dimensions": rows,
            "undetermined": [family.format(x) for x in sorted(sol.undetermined, key=family.sort_key)],
            "pinned": [family.format(x) for x in sorted(known, key=family.sort_key)]}


# ------------------------------------------------------------ output

def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _fusion_line(left, right, labels) -> str:
    return f"{left} ⊗ {right} → " + ";".join(labels)


def render(command: str, result: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    rows: list[list] = []
    if command in ("fusion", "crosscheck"):
        cells = [result["cell"]] if command == "fusion" else result["cells"]
        for c in cells:
            key = "closed" if "closed" in c else "diagram"
            row = [_fusion_line(c["left"], c["right"], c[key])]
            if "agree" in c:
                row.append("agree" if c["agree"] else "DISAGREE")
            rows.append(row)
        if command == "crosscheck":
            rows.append([f"frobenius failures: {len(result['frobenius'])}"])
            rows.append([f"associativity failures: {len(result['associativity'])}"])
            clo = result["closure"]
            rows.append([f"closure: {clo['samples']} samples, {clo['checks']} checks, "
                         f"{len(clo['failures'])} failures"])
    elif command == "irreps":
        for r in result["irreps"]:
            rows.append([r["label"], "" if r.get("dimension") is None else r["dimension"]]
                        if result["N"] is not None else [r["label"]])
    elif command == "dims":
        rows = [[r["label"], r["dimension"]] for r in result["dimensions"]]
        rows += [[lab, "undetermined"] for lab in result["undetermined"]]
    elif command == "check":
        rows.append(["member" if result["member"] else "not a member", result["violation"] or ""])
    if fmt == "csv":
        return _csv(rows)
    width = max((len(str(r[0])) for r in rows), default=0)
    lines = [" ".join([str(r[0]).ljust(width)] + [str(x) for x in r[1:]]).rstrip() for r in rows]
    return "\n".join(lines) + ("\n" if lines else "")


# ------------------------------------------------------------ entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=["oplusplus", "wreath"], default="oplusplus")
    common.add_argument("--ell", type=int, default=0, help="modulus for oplusplus")
    common.add_argument("--group", default="Z2", help="Zn, Z, V4, inline JSON or a JSON file")
    common.add_argument("--lambda", dest="lam", default=None,
                        help="comma-separated generators of Lambda, 'all', or JSON")
    common.add_argument("--gens", default=None, help="name:element,... or a JSON generating set")
    common.add_argument("--N", type=int, default=None)
    common.add_argument("--maxlen", type=int, default=None)
    common.add_argument("--budget-points", dest="budget", type=int, default=None)
    common.add_argument("--format", choices=["json", "csv", "table"], default="json")
    common.add_argument("--out", default=None)

    parser = argparse.ArgumentParser(prog="ncpqg", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    f = sub.add_parser("fusion", parents=[common], help="decompose a tensor product")
    f.add_argument("left")
    f.add_argument("right")
    f.add_argument("--method", choices=["closed", "diagram", "both"], default="closed")
    sub.add_parser("irreps", parents=[common], help="list irreducible labels")
    c = sub.add_parser("check", parents=[common], help="test category membership")
    c.add_argument("partition", help="partition JSON file, inline JSON or '-'")
    x = sub.add_parser("crosscheck", parents=[common], help="closed forms against diagrams")
    x.add_argument("--samples", type=int, default=100)
    x.add_argument("--seed", type=int, default=0)
    d = sub.add_parser("dims", parents=[common], help="dimension table")
    d.add_argument("labels", nargs="*")
    d.add_argument("--no-pin", dest="pin", action="store_false",
                   help="do not fix one-dimensional labels to dimension 1")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = FamilyConfig(args.family, args.ell, args.group, args.lam, args.gens, args.N,
                       args.maxlen, args.budget)
    try:
        cfg.validate(need_n=args.command == "dims")
        if args.command == "fusion":
            result = cmd_fusion(cfg, args.left, args.right, args.method)
        elif args.command == "irreps":
            result = cmd_irreps(cfg)
        elif args.command == "check":
            result = cmd_check(cfg, args.partition)
        elif args.command == "crosscheck":
            result = cmd_crosscheck(cfg, args.samples, args.seed)
        else:
            result = cmd_dims(cfg, args.labels, args.pin)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except Underdetermined as exc:
        family = cfg.build()
        names = ", ".join(family.format(lab) for lab in exc.labels)
        print(f"error: dimensions not determined for {names}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConfigError, GroupError, LabelParseError, DiagramError, NotMember,
            json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    text = render(args.command, result, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "crosscheck" and not result["agree"]:
        return EXIT_DISAGREE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
