"""Group oracles: Z2*Z2 arithmetic, finite/cyclic groups, subgroups, colour evaluation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping, Sequence


class GroupError(ValueError):
    pass


class UnknownLetter(GroupError):
    pass


class MixedGroups(GroupError):
    pass


# ------------------------------------------------------------ Z2 * Z2

@dataclass(frozen=True, order=True)
class Dihedral:
    """The element ``z^t x^eps`` of Z2*Z2, where ``z = xy``."""

    t: int
    eps: int

    def __mul__(self, other: "Dihedral") -> "Dihedral":
        sign = -1 if self.eps else 1
        return Dihedral(self.t + sign * other.t, self.eps ^ other.eps)

    def inverse(self) -> "Dihedral":
        if self.eps:
            return self  # reflections are involutions
        return Dihedral(-self.t, 0)


DIHEDRAL_ONE = Dihedral(0, 0)
DIHEDRAL_LETTERS = {"x": Dihedral(0, 1), "y": Dihedral(-1, 1)}


def dihedral_eval(word: Iterable[str]) -> Dihedral:
    g = DIHEDRAL_ONE
    for c in word:
        try:
            g = g * DIHEDRAL_LETTERS[c]
        except KeyError:
            raise UnknownLetter(f"letter {c!r} is not in {{x, y}}") from None
    return g


def in_gamma_ell(g: Dihedral, ell: int) -> bool:
    """Membership in the subgroup generated by ``(xy)^ell``."""
    if ell < 0:
        raise ValueError("ell must be >= 0")
    if g.eps:
        return False
    return g.t == 0 if ell == 0 else g.t % ell == 0


# ------------------------------------------------------------ groups

@dataclass(frozen=True)
class Group:
    """A cyclic group (``order == 0`` means Z) or a finite group given by its table.

    Elements are plain integers: residues for cyclic groups, row indices of
    the multiplication table otherwise.
    """

    kind: str
    order: int
    names: tuple[str, ...] = ()
    table: tuple[tuple[int, ...], ...] = ()
    _identity: int = field(default=0, repr=False, compare=False)
    _inverses: tuple[int, ...] = field(default=(), repr=False, compare=False)

    @classmethod
    def cyclic(cls, order: int) -> "Group":
        if order < 0:
            raise GroupError("order must be >= 0")
        return cls("cyclic", order)

    @classmethod
    def from_table(cls, names: Sequence[str], table: Sequence[Sequence[int | str]]) -> "Group":
        names = tuple(str(x) for x in names)
        size = len(names)
        if size == 0 or len(set(names)) != size:
            raise GroupError("table group needs distinct element names")
        index = {nm: i for i, nm in enumerate(names)}
        rows = []
        for row in table:
            if len(row) != size:
                raise GroupError("product table is not square")
            rows.append(tuple(index[x] if isinstance(x, str) else int(x) for x in row))
        if len(rows) != size:
            raise GroupError("product table is not square")
        full = set(range(size))
        for i in range(size):
            if set(rows[i]) != full or {rows[j][i] for j in range(size)} != full:
                raise GroupError("product table is not a Latin square")
        ids = [e for e in range(size) if all(rows[e][a] == a == rows[a][e] for a in range(size))]
        if len(ids) != 1:
            raise GroupError("product table has no identity")
        e = ids[0]
        for a, b, c in product(range(size), repeat=3):
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise GroupError(f"product is not associative at ({names[a]}, {names[b]}, {names[c]})")
        inverses = tuple(next(b for b in range(size) if rows[a][b] == e) for a in range(size))
        return cls("table", size, names, tuple(rows), e, inverses)

    @property
    def identity(self) -> int:
        return self._identity if self.kind == "table" else 0

    @property
    def is_finite(self) -> bool:
        return self.order > 0

    def mul(self, a: int, b: int) -> int:
        if self.kind == "table":
            return self.table[a][b]
        return (a + b) % self.order if self.order else a + b

    def inv(self, a: int) -> int:
        if self.kind == "table":
            return self._inverses[a]
        return (-a) % self.order if self.order else -a

    def prod(self, elements: Iterable[int]) -> int:
        g = self.identity
        for a in elements:
            g = self.mul(g, a)
        return g

    def elements(self) -> list[int]:
        if not self.is_finite:
            raise GroupError("infinite group has no element list")
        return list(range(self.order))

    def sort_key(self, a: int) -> tuple:
        return (abs(a), a < 0) if self.kind == "cyclic" and not self.order else (a,)

    def name(self, a: int) -> str:
        if self.kind == "table":
            return self.names[a]
        if a == 0:
            return "e"
        return f"g{a}"

    def parse(self, text: str) -> int:
        text = text.strip()
        if self.kind == "table":
            try:
                return self.names.index(text)
            except ValueError:
                raise GroupError(f"unknown element {text!r}") from None
        if text in ("e", "1", "g0"):
            return 0
        if text == "g":
            return self.mul(0, 1)
        if text.startswith("g"):
            try:
                a = int(text[1:])
            except ValueError:
                raise GroupError(f"unknown element {text!r}") from None
            if self.order and not 0 <= a < self.order:
                raise GroupError(f"element {text!r} is outside Z{self.order}")
            return a
        raise GroupError(f"unknown element {text!r}")

    def to_json(self) -> dict:
        if self.kind == "cyclic":
            return {"kind": "cyclic", "order": self.order}
        return {"kind": "table", "elements": list(self.names),
                "product": [list(r) for r in self.table]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Group":
        kind = data.get("kind")
        if kind == "cyclic":
            return cls.cyclic(int(data["order"]))
        if kind == "table":
            return cls.from_table(data["elements"], data["product"])
        raise GroupError(f"unknown group kind {kind!r}")


def klein_four() -> Group:
    """Z2 x Z2 as a table group on ``e, a, b, c`` with ``ab = c``."""
    names = ["e", "a", "b", "c"]
    table = [[i ^ j for j in range(4)] for i in range(4)]
    return Group.from_table(names, table)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup given by generators; finite groups store the closure, Z stores ``dZ``."""

    group: Group
    generators: tuple[int, ...]
    elements: frozenset[int] | None
    modulus: int | None = None

    def contains(self, g: int) -> bool:
        if self.elements is not None:
            return g in self.elements
        if self.modulus == 0:
            return g == 0
        return g % self.modulus == 0

    def __contains__(self, g: int) -> bool:
        return self.contains(g)

    @property
    def order(self) -> int:
        """Number of elements, 0 for an infinite subgroup."""
        if self.elements is not None:
            return len(self.elements)
        return 1 if self.modulus == 0 else 0

    def sorted_elements(self) -> list[int]:
        if self.elements is None:
            if self.modulus == 0:
                return [0]
            raise GroupError("infinite subgroup has no element list")
        return sorted(self.elements, key=self.group.sort_key)

    def coset_rep(self, g: int) -> int:
        """Smallest element of the left coset ``g Lambda``."""
        if self.elements is None:
            return g if self.modulus == 0 else g % self.modulus
        grp = self.group
        return min((grp.mul(g, h) for h in self.elements), key=grp.sort_key)

    def check_group(self, group: Group) -> None:
        if group != self.group:
            raise MixedGroups("subgroup belongs to a different group")

    def to_json(self) -> dict:
        return {"generators": [self.group.name(g) for g in self.generators]}


def closure(group: Group, generators: Iterable[int]) -> Subgroup:
    gens = tuple(generators)
    if not group.is_finite:
        d = 0
        for g in gens:
            d = math.gcd(d, g)
        return Subgroup(group, gens, None, d)
    seen = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                for b in (group.mul(a, g), group.mul(a, group.inv(g))):
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
        frontier = nxt
    return Subgroup(group, gens, frozenset(seen))


def in_subgroup(g: int, lam: Subgroup) -> bool:
    return lam.contains(g)


def subgroup_from_json(group: Group, data: Mapping | Sequence | None) -> Subgroup:
    if data is None:
        return closure(group, [])
    gens = data.get("generators", []) if isinstance(data, Mapping) else data
    return closure(group, [group.parse(str(g)) for g in gens])


# ------------------------------------------------------- generating sets

@dataclass(frozen=True)
class GeneratingSet:
    """Colours together with their inverse colour and their value in the group."""

    group: Group
    assign: tuple[tuple[str, int], ...]
    inverses: tuple[tuple[str, str], ...]

    @classmethod
    def build(cls, group: Group, colours: Mapping[str, tuple[str, int]]) -> "GeneratingSet":
        """``colours`` maps a colour name to ``(inverse colour name, group element)``."""
        gs = cls(group,
                 tuple(sorted((c, g) for c, (_, g) in colours.items())),
                 tuple(sorted((c, inv) for c, (inv, _) in colours.items())))
        gs.validate()
        return gs

    @property
    def values(self) -> dict[str, int]:
        return dict(self.assign)

    @property
    def inverse(self) -> dict[str, str]:
        return dict(self.inverses)

    @property
    def colours(self) -> list[str]:
        return [c for c, _ in self.assign]

    def validate(self) -> None:
        vals, inv = self.values, self.inverse
        for c, d in inv.items():
            if d not in vals:
                raise GroupError(f"inverse colour {d!r} of {c!r} is not a colour")
            if inv[d] != c:
                raise GroupError(f"colour inversion is not involutive at {c!r}")
            if vals[d] != self.group.inv(vals[c]):
                raise GroupError(f"colour {d!r} does not evaluate to the inverse of {c!r}")
        generated = closure(self.group, vals.values())
        whole = generated.modulus == 1 if not self.group.is_finite else \
            len(generated.elements) == self.group.order
        if not whole:
            raise GroupError("colours do not generate the group")

    def phi(self, word: Iterable[str]) -> int:
        vals = self.values
        g = self.group.identity
        for c in word:
            try:
                g = self.group.mul(g, vals[c])
            except KeyError:
                raise UnknownLetter(f"colour {c!r} is not in the generating set") from None
        return g

    def geodesic_words(self, targets: Iterable[int], nonempty: bool = False,
                       max_len: int = 64) -> dict[int, tuple[str, ...]]:
        """Shortlex-least words evaluating to each target (breadth-first on the Cayley graph)."""
        wanted = set(targets)
        found: dict[int, tuple[str, ...]] = {}
        if not nonempty and self.group.identity in wanted:
            found[self.group.identity] = ()
        colours = sorted(self.colours)
        vals = self.values
        layer: dict[int, tuple[str, ...]] = {self.group.identity: ()}
        seen = {self.group.identity} if not nonempty else set()
        length = 0
        while wanted - found.keys() and length < max_len:
            length += 1
            nxt: dict[int, tuple[str, ...]] = {}
            for g, w in sorted(layer.items(), key=lambda kv: kv[1]):
                for c in colours:
                    h = self.group.mul(g, vals[c])
                    if h in nxt or h in seen:
                        continue
                    nxt[h] = w + (c,)
            for h, w in nxt.items():
                seen.add(h)
                if h in wanted and h not in found:
                    found[h] = w
            layer = nxt
        missing = wanted - found.keys()
        if missing:
            raise GroupError(f"no word found for {sorted(missing)}")
        return found

    def to_json(self) -> dict:
        vals, inv = self.values, self.inverse
        return {"colours": [{"name": c, "inverse": inv[c], "maps_to": self.group.name(vals[c])}
                            for c in self.colours]}

    @classmethod
    def from_json(cls, group: Group, data: Mapping) -> "GeneratingSet":
        colours = {}
        for entry in data["colours"]:
            colours[str(entry["name"])] = (str(entry.get("inverse", entry["name"])),
                                          group.parse(str(entry["maps_to"])))
        return cls.build(group, colours)

    @classmethod
    def default(cls, group: Group) -> "GeneratingSet":
        """All non-identity elements (just ``g1``, ``g-1`` for Z), each named after itself."""
        if group.order == 1:
            return cls.build(group, {"a": ("a", 0)})
        if not group.is_finite:
            elems = [1, -1]
        else:
            elems = [g for g in group.elements() if g != group.identity]
        return cls.build(group, {group.name(g): (group.name(group.inv(g)), g) for g in elems})


def rep_words(gens: GeneratingSet, lam: Subgroup,
              given: Mapping[int, Sequence[str]] | None = None) -> dict[int, tuple[str, ...]]:
    """Representative words ``w_lambda`` for the elements of a finite ``lam``."""
    elems = lam.sorted_elements()
    words = gens.geodesic_words(elems)
    for g, w in (given or {}).items():
        w = tuple(w)
        if gens.phi(w) != g:
            raise GroupError(f"representative word {w} does not evaluate to {gens.group.name(g)}")
        words[g] = w
    return words
