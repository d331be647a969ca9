"""Brute-force diagrammatic representation theory.

Projective partitions label irreducibles, equivalence of projectives is
unitary equivalence, and tensor products split into a plain tensor term and
the ``square``/``boxvert`` contractions that stay in the category.  Everything
here works directly on diagrams; the closed forms in :mod:`ncpqg.oplusplus`
and :mod:`ncpqg.wreath` are checked against it.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Hashable, Iterator, Protocol, Sequence

import sympy

from .categories import Category
from .diagrams import (Partition, Word, boxvert_contract, compose, involute, is_projective,
                       square_contract, tensor, through_block_count)

DEFAULT_BUDGET = 12


class BudgetExceeded(RuntimeError):
    pass


class Underdetermined(RuntimeError):
    def __init__(self, message: str, labels=()):
        super().__init__(message)
        self.labels = list(labels)


class NotMember(ValueError):
    pass


class LabelParseError(ValueError):
    pass


def point_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get("NCPQG_BUDGET", DEFAULT_BUDGET))


class Family(Protocol):
    """What the engine needs from a quantum-group family."""

    category: Category

    @property
    def colours(self) -> Sequence[str]: ...

    def label(self, p: Partition, check: bool = True) -> Hashable: ...


@dataclass(frozen=True)
class ProjectiveClass:
    representative: Partition
    word: Word


@dataclass(frozen=True)
class FusionTerm:
    kind: str           # "tensor", "square" or "boxvert"
    k: int
    partition: Partition = field(compare=False)


@dataclass(frozen=True)
class OneDimGroup:
    order: int                 # 0 for an infinite cyclic group
    generator: object
    witnesses: tuple           # (description, expected, observed)

    @property
    def certified(self) -> bool:
        return all(exp == obs for _, exp, obs in self.witnesses)


# ------------------------------------------------------ enumeration

@lru_cache(maxsize=None)
def noncrossing_partitions(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All noncrossing set partitions of ``range(n)``, blocks sorted."""

    def rec(pts: tuple[int, ...]) -> Iterator[list[tuple[int, ...]]]:
        if not pts:
            yield []
            return

        def extend(block: tuple[int, ...], start: int):
            for tail in rec(pts[start:]):
                yield [block] + tail
            for j in range(start, len(pts)):
                for gap in rec(pts[start:j]):
                    for more in extend(block + (pts[j],), j + 1):
                        yield gap + more

        yield from extend((pts[0],), 1)

    return tuple(tuple(sorted(p)) for p in rec(tuple(range(n))))


def _projective_shapes(m: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Block structures of the noncrossing projectives on ``m`` upper points.

    Such a partition is an upper-row noncrossing partition, mirrored to the
    lower row, where some blocks that no other block spans are joined with
    their mirror image to become through-blocks.
    """
    last = 2 * m - 1
    for upper in noncrossing_partitions(m):
        visible = [b for b in upper
                   if not any(c[0] < b[0] and c[-1] > b[-1] for c in upper if c is not b)]
        hidden = [b for b in upper if b not in visible]
        base = [b for b in hidden] + [tuple(last - x for x in b) for b in hidden]
        for mask in range(1 << len(visible)):
            blocks = list(base)
            for i, b in enumerate(visible):
                mirror = tuple(last - x for x in b)
                if mask >> i & 1:
                    blocks.append(b + mirror)
                else:
                    blocks.append(b)
                    blocks.append(mirror)
            yield tuple(blocks)


def enumerate_projectives(word: Sequence[str], category: Category,
                          budget: int | None = None, method: str = "shapes") -> list[Partition]:
    """Noncrossing projective members of ``category`` on ``(word, word)``.

    ``method="boundary"`` filters every noncrossing partition of the
    ``2|w|`` boundary points instead of building projectives directly.
    """
    word = tuple(word)
    if 2 * len(word) > point_budget(budget):
        raise BudgetExceeded(f"{2 * len(word)} points exceed the budget of {point_budget(budget)}")
    if method == "shapes":
        candidates = (Partition(word, word, b) for b in _projective_shapes(len(word)))
        found = [p for p in candidates if category.member(p)]
    elif method == "boundary":
        found = []
        for blocks in noncrossing_partitions(2 * len(word)):
            p = Partition(word, word, blocks)
            if is_projective(p) and category.member(p):
                found.append(p)
    else:
        raise ValueError(f"unknown method {method!r}")
    return sorted(set(found), key=lambda p: p.blocks)


def words(colours: Sequence[str], max_len: int, min_len: int = 0) -> Iterator[Word]:
    """Words over ``colours`` in shortlex order."""
    colours = sorted(colours)
    for n in range(min_len, max_len + 1):
        yield from product(colours, repeat=n)


# ------------------------------------------------------ decomposition

def tensor_decompose(p: Partition, q: Partition, category: Category) -> list[FusionTerm]:
    terms = [FusionTerm("tensor", 0, tensor(p, q))]
    for k in range(1, min(through_block_count(p), through_block_count(q)) + 1):
        terms.append(FusionTerm("square", k, square_contract(p, q, k)))
        terms.append(FusionTerm("boxvert", k, boxvert_contract(p, q, k)))
    return [t for t in terms if category.member(t.partition)]


def decompose_labels(p: Partition, q: Partition, family: Family) -> Counter:
    return Counter(family.label(t.partition, check=False)
                   for t in tensor_decompose(p, q, family.category))


# ------------------------------------------------------ equivalence

def candidate_implementer(p: Partition, q: Partition) -> Partition | None:
    """The natural partition that could realize ``p ~ q``, or ``None`` if ``t`` differs.

    Its upper row carries the upper-only blocks of ``p``, its lower row the
    upper-only blocks of ``q``, and the i-th through-blocks of both are
    joined through the middle.
    """
    pt, qt = p.through_blocks(), q.through_blocks()
    if len(pt) != len(qt):
        return None
    m, n = p.m, q.m
    total = m + n

    def down(x):  # upper point x of q -> lower point of r
        return total - 1 - x

    blocks = list(p.upper_only_blocks())
    blocks += [tuple(down(x) for x in b) for b in q.upper_only_blocks()]
    for a, b in zip(pt, qt):
        blocks.append(tuple(x for x in a if x < m) + tuple(down(x) for x in b if x < n))
    return Partition(p.upper, q.upper, tuple(blocks))


def implements(r: Partition, p: Partition, q: Partition, category: Category) -> bool:
    """``r*r = p`` and ``rr* = q`` with ``r`` in the category."""
    if r.upper != p.upper or r.lower != q.upper:
        return False
    rs = involute(r)
    return (compose(rs, r).partition == p and compose(r, rs).partition == q
            and category.member(r))


def implementers(p: Partition, q: Partition, category: Category,
                 budget: int | None = None) -> list[Partition]:
    total = p.m + q.m
    if total > point_budget(budget):
        raise BudgetExceeded(f"{total} points exceed the budget of {point_budget(budget)}")
    out = []
    for blocks in noncrossing_partitions(total):
        r = Partition(p.upper, q.upper, blocks)
        if implements(r, p, q, category):
            out.append(r)
    return out


def equivalent(p: Partition, q: Partition, category: Category, mode: str = "candidate",
               budget: int | None = None) -> bool:
    if through_block_count(p) != through_block_count(q):
        return False
    if mode == "candidate":
        r = candidate_implementer(p, q)
        return r is not None and implements(r, p, q, category)
    if mode == "exhaustive":
        return bool(implementers(p, q, category, budget))
    raise ValueError(f"unknown mode {mode!r}")


# ------------------------------------------------------ dimensions

@dataclass
class DimensionSolution:
    values: dict
    undetermined: list
    equations: list      # (word, Counter of labels, N^|w|)

    def __getitem__(self, label):
        if label not in self.values:
            raise Underdetermined(f"dimension of {label} is not determined", [label])
        return self.values[label]


def dimension_solve(family: Family, N: int, max_word_len: int, require=None,
                    budget: int | None = None, known=None, shift: bool = True) -> DimensionSolution:
    """Solve ``N^|w| = sum over Proj(w) of d(label)`` for all words up to ``max_word_len``.

    ``known`` maps labels to values fixed in advance (one-dimensional labels
    are the usual case).  With ``shift``, each known label ``g`` also gives
    ``d(g (x) a) = d(g) d(a)`` for every label ``a`` met, with ``g (x) a``
    decomposed on diagrams; word totals alone cannot tell ``theta X`` from
    ``theta X^3``.  Labels still not pinned down are listed in
    ``undetermined``; ``require`` (default: every label seen) raises
    :class:`Underdetermined` if any of them is among those.
    """
    if N < 4:
        raise ValueError("N must be at least 4")
    cap = point_budget(budget)
    equations = []
    reps: dict = {}
    for w in words(family.colours, max_word_len):
        counts = Counter()
        for p in enumerate_projectives(w, family.category, budget):
            lab = family.label(p, check=False)
            counts[lab] += 1
            reps.setdefault(lab, p)
        equations.append((w, counts, N ** len(w)))
    known = dict(known or {})
    relations = [(Counter({lab: 1}), val) for lab, val in known.items()]
    relations += [(counts, rhs) for _, counts, rhs in equations]
    if shift:
        for g, val in known.items():
            pg = reps.get(g) or family.representative(g)
            for a, pa in list(reps.items()):
                if a == g or 2 * (pg.m + pa.m) > cap:
                    continue
                row = Counter(decompose_labels(pg, pa, family))
                row[a] -= val
                relations.append((row, 0))
    unknowns: dict = {}
    for counts, _ in relations:
        for lab in counts:
            unknowns.setdefault(lab, len(unknowns))
    labels = list(unknowns)
    rows = []
    for counts, rhs in relations:
        row = [0] * (len(labels) + 1)
        for lab, c in counts.items():
            row[unknowns[lab]] += c
        row[-1] = rhs
        rows.append(row)
    values = {}
    if rows:
        reduced, pivots = sympy.Matrix(rows).rref()
        if len(labels) in pivots:
            raise ValueError("dimension equations are inconsistent")
        for i, col in enumerate(pivots):
            r = reduced.row(i)
            if all(r[j] == 0 for j in range(len(labels)) if j != col):
                val = r[-1]
                if not val.is_integer:
                    raise ValueError(f"non-integral dimension {val} for {labels[col]}")
                values[labels[col]] = int(val)
    seen = [lab for lab in labels if lab in reps or lab in known]
    undetermined = [lab for lab in seen if lab not in values]
    values = {lab: v for lab, v in values.items() if lab in reps or lab in known}
    needed = seen if require is None else list(require)
    missing = [lab for lab in needed if lab not in values]
    if missing:
        raise Underdetermined(f"dimensions not determined for {missing}", missing)
    return DimensionSolution(values, undetermined, equations)


# ------------------------------------------------------ label discovery

def discover_labels(family: Family, max_word_len: int, budget: int | None = None) -> dict:
    """First projective (in shortlex word order) realizing each label."""
    reps: dict = {}
    for w in words(family.colours, max_word_len):
        for p in enumerate_projectives(w, family.category, budget):
            reps.setdefault(family.label(p, check=False), p)
    return reps
