"""Membership predicates for the categories of partitions used as ground truth.

``member(p)`` is a pure function on :class:`~ncpqg.diagrams.Partition`;
``violation(p)`` returns ``None`` for members and a short human-readable
reason otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple

from .diagrams import Partition, is_noncrossing
from .groups import (DIHEDRAL_LETTERS, GeneratingSet, Group, Subgroup, dihedral_eval,
                     in_gamma_ell, subgroup_from_json)


class AlphabetMismatch(ValueError):
    pass


class FullArc(NamedTuple):
    start: int          # boundary position where the arc begins
    length: int
    blocks: frozenset[int]   # indices into ``p.blocks``


def full_subpartitions(p: Partition) -> list[FullArc]:
    """Unions of blocks filling a contiguous cyclic arc of the boundary.

    Each distinct block set is listed once; the whole partition is reported
    as the arc starting at position 0.
    """
    total = p.size
    owner = [0] * total
    for i, b in enumerate(p.blocks):
        for x in b:
            owner[x] = i
    sizes = [len(b) for b in p.blocks]
    arcs: list[FullArc] = []
    seen: set[frozenset[int]] = set()
    for start in range(total):
        count: dict[int, int] = {}
        open_blocks = 0
        for length in range(1, total + 1):
            b = owner[(start + length - 1) % total]
            c = count.get(b, 0) + 1
            count[b] = c
            if c == 1:
                open_blocks += 1
            if c == sizes[b]:
                open_blocks -= 1
            if open_blocks == 0:
                key = frozenset(count)
                if key not in seen:
                    seen.add(key)
                    arcs.append(FullArc(start, length, key))
    return arcs


def arc_words(p: Partition, arc: FullArc) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Upper and lower colourings of an arc, both read left to right."""
    pos = sorted((arc.start + i) % p.size for i in range(arc.length))
    up = tuple(p.upper[x] for x in pos if x < p.m)
    low = tuple(p.colour_at(x) for x in sorted((x for x in pos if x >= p.m), reverse=True))
    return up, low


class Category:
    inverse: Mapping[str, str] | None = None

    def violation(self, p: Partition) -> str | None:
        raise NotImplementedError

    def member(self, p: Partition) -> bool:
        return self.violation(p) is None

    def __contains__(self, p: Partition) -> bool:
        return self.member(p)


@dataclass(frozen=True)
class OPlusPair(Category):
    """Noncrossing pair partitions in a single colour."""

    colour: str = "x"

    def violation(self, p):
        for c in p.upper + p.lower:
            if c != self.colour:
                raise AlphabetMismatch(f"colour {c!r} is not {self.colour!r}")
        if any(len(b) != 2 for b in p.blocks):
            return "block of size other than 2"
        if not is_noncrossing(p):
            return "crossing"
        return None


@dataclass(frozen=True)
class DEll(Category):
    """Noncrossing pair partitions on ``{x, y}`` with ``phi(w) phi(w')^-1`` in ``<(xy)^ell>``."""

    ell: int

    def violation(self, p):
        for c in p.upper + p.lower:
            if c not in DIHEDRAL_LETTERS:
                raise AlphabetMismatch(f"colour {c!r} is not x or y")
        for blk in p.point_blocks():
            if len(blk) != 2:
                return "block " + "{" + ",".join(f"{r}{i}" for r, i in blk) + "} is not a pair"
        if not is_noncrossing(p):
            return "crossing"
        g = dihedral_eval(p.upper) * dihedral_eval(p.lower).inverse()
        if not in_gamma_ell(g, self.ell):
            return f"phi(w) phi(w')^-1 = ({g.t},{g.eps}) is not in Gamma_{self.ell}"
        return None

    def to_json(self):
        return {"kind": "dell", "ell": self.ell}


def _values(gens: GeneratingSet, p: Partition) -> list[int]:
    """Group value per boundary position; lower colours are inverted."""
    vals, grp = gens.values, gens.group
    out = []
    for pos in range(p.size):
        c = p.colour_at(pos)
        try:
            v = vals[c]
        except KeyError:
            raise AlphabetMismatch(f"colour {c!r} is not in the generating set") from None
        out.append(v if pos < p.m else grp.inv(v))
    return out


@dataclass(frozen=True)
class CGammaS(Category):
    """Noncrossing partitions where every block has ``phi(upper part) = phi(lower part)``."""

    gens: GeneratingSet

    @property
    def inverse(self):
        return self.gens.inverse

    def violation(self, p):
        _values(self.gens, p)
        if not is_noncrossing(p):
            return "crossing"
        phi = self.gens.phi
        for b, blk in zip(p.blocks, p.point_blocks()):
            up = [p.colour_at(x) for x in b if x < p.m]
            low = [p.colour_at(x) for x in sorted((x for x in b if x >= p.m), reverse=True)]
            if phi(up) != phi(low):
                return "block " + "{" + ",".join(f"{r}{i}" for r, i in blk) + "} is unbalanced"
        return None


@dataclass(frozen=True)
class DGammaLambdaS(Category):
    """Noncrossing partitions with ``phi(w) = phi(w')`` and every full arc valued in ``Lambda``.

    An arc is valued by multiplying, in boundary order from its first point,
    the upper colours and the inverses of the lower colours.  For an arc at
    the left corner this is ``phi(v')^-1 phi(v)``.
    """

    gens: GeneratingSet
    lam: Subgroup

    @property
    def inverse(self):
        return self.gens.inverse

    @property
    def group(self) -> Group:
        return self.gens.group

    def violation(self, p):
        vals = _values(self.gens, p)
        if not is_noncrossing(p):
            return "crossing"
        grp = self.gens.group
        if grp.prod(vals) != grp.identity:
            return (f"phi(w) = {grp.name(self.gens.phi(p.upper))} differs from "
                    f"phi(w') = {grp.name(self.gens.phi(p.lower))}")
        total = p.size
        owner = [0] * total
        for i, b in enumerate(p.blocks):
            for x in b:
                owner[x] = i
        sizes = [len(b) for b in p.blocks]
        lam = self.lam
        for start in range(total):
            count: dict[int, int] = {}
            open_blocks = 0
            g = grp.identity
            for length in range(1, total):
                pos = (start + length - 1) % total
                g = grp.mul(g, vals[pos])
                b = owner[pos]
                c = count.get(b, 0) + 1
                count[b] = c
                if c == 1:
                    open_blocks += 1
                if c == sizes[b]:
                    open_blocks -= 1
                if open_blocks == 0 and not lam.contains(g):
                    v, v2 = arc_words(p, FullArc(start, length, frozenset(count)))
                    return (f"full arc with upper colouring {list(v)} and lower colouring "
                            f"{list(v2)} has value {grp.name(g)} outside Lambda")
        return None

    def to_json(self):
        return {"kind": "wreath", "group": self.gens.group.to_json(),
                "lambda": self.lam.to_json(), "gens": self.gens.to_json()}


def category_from_json(data: Mapping) -> Category:
    kind = data.get("kind")
    if kind == "dell":
        return DEll(int(data["ell"]))
    if kind == "wreath":
        grp = Group.from_json(data["group"])
        gens = GeneratingSet.from_json(grp, data["gens"]) if data.get("gens") \
            else GeneratingSet.default(grp)
        return DGammaLambdaS(gens, subgroup_from_json(grp, data.get("lambda")))
    raise ValueError(f"unknown category kind {kind!r}")
