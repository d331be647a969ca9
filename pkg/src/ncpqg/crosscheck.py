"""Closed-form versus diagram comparisons, Frobenius checks and closure sampling."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .categories import Category
from .diagrams import (Corner, Partition, compose, involute, rotate, tensor)
from .fusion import decompose_labels, discover_labels, point_budget


@dataclass
class Cell:
    left: object
    right: object
    closed: Counter
    diagram: Counter

    @property
    def agree(self) -> bool:
        return self.closed == self.diagram


def label_table(family, max_word_len: int, budget: int | None = None,
                keep: Callable[[object], bool] | None = None) -> dict:
    """Label -> shortest projective representative, for words up to ``max_word_len``."""
    reps = discover_labels(family, max_word_len, budget)
    if keep is not None:
        reps = {lab: p for lab, p in reps.items() if keep(lab)}
    return dict(sorted(reps.items(), key=lambda kv: family.sort_key(kv[0])))


def fusion_cells(family, budget: int | None = None, keep=None) -> list[Cell]:
    """Compare closed and diagram fusion on every label pair fitting in ``budget`` points."""
    budget = point_budget(budget)
    half = budget // 2
    reps = label_table(family, max(half - 1, 0), budget, keep) if budget else {}
    cells = []
    for a, p in reps.items():
        for b, q in reps.items():
            if p.m + q.m > half:
                continue
            cells.append(Cell(a, b, family.fusion(a, b), decompose_labels(p, q, family)))
    return cells


def frobenius_failures(family, labels) -> list[tuple]:
    """Pairs where the trivial label's multiplicity in ``a (x) b`` is wrong."""
    triv = family.trivial
    bad = []
    for a in labels:
        abar = family.conjugate(a)
        for b in labels:
            mult = family.fusion(a, b)[triv]
            if mult != (1 if b == abar else 0):
                bad.append((a, b, mult))
    return bad


def fuse_counter(family, left: Counter, right: Counter) -> Counter:
    out = Counter()
    for a, x in left.items():
        for b, y in right.items():
            for c, z in family.fusion(a, b).items():
                out[c] += x * y * z
    return out


def associativity_failures(family, labels) -> list[tuple]:
    bad = []
    for a in labels:
        for b in labels:
            ab = family.fusion(a, b)
            for c in labels:
                lhs = fuse_counter(family, ab, Counter({c: 1}))
                rhs = fuse_counter(family, Counter({a: 1}), family.fusion(b, c))
                if lhs != rhs:
                    bad.append((a, b, c))
    return bad


# ------------------------------------------------------------ sampling

def random_nc_blocks(total: int, rng: random.Random, pairs: bool = False) -> list[tuple[int, ...]]:
    """A random noncrossing partition of ``range(total)`` (perfect matching if ``pairs``)."""

    def rec(pts):
        if not pts:
            return []
        head, rest = pts[0], pts[1:]
        if pairs:
            j = rng.randrange(0, len(rest), 2)
            return [(head, rest[j])] + rec(rest[:j]) + rec(rest[j + 1:])
        chosen = [i for i in range(len(rest)) if rng.random() < 0.35]
        block = (head,) + tuple(rest[i] for i in chosen)
        out = [block]
        prev = 0
        for i in chosen + [len(rest)]:
            out += rec(rest[prev:i])
            prev = i + 1
        return out

    return rec(list(range(total)))


def random_member(category: Category, colours, rng: random.Random, max_points: int = 8,
                  upper: tuple | None = None, pairs: bool = False, tries: int = 20000) -> Partition | None:
    """Rejection-sample a member, optionally with a prescribed upper row."""
    colours = sorted(colours)
    for _ in range(tries):
        if upper is None:
            total = rng.randrange(0, max_points + 1)
            if pairs and total % 2:
                total -= 1
            m = rng.randrange(0, total + 1)
            up = tuple(rng.choice(colours) for _ in range(m))
        else:
            up = upper
            m = len(up)
            n = rng.randrange(0, max(max_points - m, 0) + 1)
            if pairs and (m + n) % 2:
                n = n + 1 if n == 0 else n - 1
            total = m + n
        low = tuple(rng.choice(colours) for _ in range(total - m))
        p = Partition(up, low, tuple(random_nc_blocks(total, rng, pairs)))
        if category.member(p):
            return p
    return None


@dataclass
class ClosureReport:
    samples: int = 0
    checks: int = 0
    failures: list = field(default_factory=list)


def closure_check(category: Category, colours, samples: int, seed: int = 0,
                  max_points: int = 8, pairs: bool = False) -> ClosureReport:
    """Sample member pairs and check tensor, composition, involution and rotations stay inside."""
    rng = random.Random(seed)
    rep = ClosureReport()
    inv = category.inverse
    while rep.samples < samples:
        p = random_member(category, colours, rng, max_points, pairs=pairs)
        q = random_member(category, colours, rng, max_points, pairs=pairs)
        if p is None or q is None:
            break
        below = random_member(category, colours, rng, max_points, upper=p.lower, pairs=pairs)
        rep.samples += 1
        derived = [("tensor", tensor(p, q)), ("involute", involute(p))]
        if below is not None:
            derived.append(("compose", compose(below, p).partition))
        for corner in Corner:
            try:
                derived.append((f"rotate {corner.value}", rotate(p, corner, inv)))
            except ValueError:
                pass
        for name, r in derived:
            rep.checks += 1
            if not category.member(r):
                rep.failures.append((name, p, q, r))
    return rep
