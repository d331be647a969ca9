"""The H_N^{++}(Gamma, Lambda) family: word labels and their fusion rules.

One-dimensional irreducibles are labelled by elements of ``Lambda``; the
others by nonempty words over ``Gamma`` modulo sliding ``Lambda`` between
adjacent letters.  A word is kept in normal form: every letter but the last
is the least element of its left coset ``g Lambda``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from .categories import DGammaLambdaS
from .diagrams import Partition, beta, empty, is_projective, pi, tensor, tensor_all
from .fusion import LabelParseError, NotMember, OneDimGroup, equivalent
from .groups import GeneratingSet, Group, GroupError, Subgroup, closure, rep_words


class EmptyOperand(ValueError):
    pass


@dataclass(frozen=True)
class OneDim:
    element: int


@dataclass(frozen=True)
class Word:
    letters: tuple[int, ...]


WLabel = Union[OneDim, Word]


def normalize(letters: Sequence[int], lam: Subgroup) -> Word:
    if not letters:
        raise ValueError("a word label needs at least one letter")
    grp = lam.group
    out = list(letters)
    for i in range(len(out) - 1):
        rep = lam.coset_rep(out[i])
        residue = grp.mul(grp.inv(rep), out[i])
        out[i] = rep
        out[i + 1] = grp.mul(residue, out[i + 1])
    return Word(tuple(out))


def bullet(a: Sequence[int], b: Sequence[int], c: int, lam: Subgroup) -> WLabel:
    grp = lam.group
    a, b = list(a), list(b)
    if not a and not b:
        return OneDim(c)
    if a:
        a[-1] = grp.mul(a[-1], c)
    else:
        b[0] = grp.mul(c, b[0])
    return normalize(a + b, lam)


def star(a: Sequence[int], b: Sequence[int], c: int, lam: Subgroup) -> WLabel:
    if not a or not b:
        raise EmptyOperand("star needs both words nonempty")
    grp = lam.group
    mid = grp.mul(grp.mul(a[-1], c), b[0])
    return normalize(list(a[:-1]) + [mid] + list(b[1:]), lam)


def contraction_value(w: Sequence[int], w2: Sequence[int], k: int, lam: Subgroup,
                      cumulative: bool = True) -> int | None:
    """``phi(z z')`` for the cut of size ``k``, or ``None`` if the cut is not allowed.

    With ``cumulative`` every inner cut ``j <= k`` must also land in ``Lambda``.
    """
    grp = lam.group
    n = len(w)
    g = grp.identity
    for j in range(1, k + 1):
        g = grp.mul(grp.mul(w[n - j], g), w2[j - 1])
        if cumulative and not lam.contains(g):
            return None
    if not lam.contains(g):
        return None
    return g


def closed_fusion(u: WLabel, v: WLabel, lam: Subgroup, cumulative: bool = True) -> Counter:
    grp = lam.group
    if isinstance(u, OneDim) and isinstance(v, OneDim):
        return Counter({OneDim(grp.mul(u.element, v.element)): 1})
    if isinstance(u, OneDim):
        first = grp.mul(u.element, v.letters[0])
        return Counter({normalize((first,) + v.letters[1:], lam): 1})
    if isinstance(v, OneDim):
        last = grp.mul(u.letters[-1], v.element)
        return Counter({normalize(u.letters[:-1] + (last,), lam): 1})
    w, w2 = u.letters, v.letters
    out = Counter()
    for k in range(min(len(w), len(w2)) + 1):
        c = contraction_value(w, w2, k, lam, cumulative)
        if c is None:
            continue
        a, b = w[:len(w) - k], w2[k:]
        out[bullet(a, b, c, lam)] += 1
        if a and b:
            out[star(a, b, c, lam)] += 1
    return out


def conjugate(u: WLabel, group: Group, lam: Subgroup) -> WLabel:
    if isinstance(u, OneDim):
        return OneDim(group.inv(u.element))
    return normalize([group.inv(g) for g in reversed(u.letters)], lam)


def label_of_projective(p: Partition, category: DGammaLambdaS, check: bool = True) -> WLabel:
    if check:
        if not is_projective(p):
            raise NotMember("not a projective partition")
        reason = category.violation(p)
        if reason:
            raise NotMember(reason)
    phi = category.gens.phi
    through = p.through_blocks()
    if not through:
        return OneDim(phi(p.upper))
    starts = [b[0] for b in through]
    starts[0] = 0
    bounds = starts + [p.m]
    letters = [phi(p.upper[bounds[i]:bounds[i + 1]]) for i in range(len(through))]
    return normalize(letters, category.lam)


class WreathFamily:
    """Family object for the free wreath product of a pair ``(Gamma, Lambda)``."""

    name = "wreath"

    def __init__(self, gens: GeneratingSet, lam: Subgroup,
                 given_words: Mapping[int, Sequence[str]] | None = None):
        lam.check_group(gens.group)
        self.gens = gens
        self.group = gens.group
        self.lam = lam
        self.category = DGammaLambdaS(gens, lam)
        self._one_dim_words = rep_words(gens, lam, given_words) if lam.order else None
        self._letter_words: dict[int, tuple[str, ...]] = {}

    @classmethod
    def build(cls, group: Group, lam_generators: Iterable[int] = (),
              gens: GeneratingSet | None = None) -> "WreathFamily":
        return cls(gens or GeneratingSet.default(group), closure(group, lam_generators))

    @property
    def colours(self):
        return tuple(self.gens.colours)

    @property
    def trivial(self) -> WLabel:
        return OneDim(self.group.identity)

    def label(self, p: Partition, check: bool = True) -> WLabel:
        return label_of_projective(p, self.category, check)

    def fusion(self, u: WLabel, v: WLabel) -> Counter:
        return closed_fusion(u, v, self.lam)

    def is_one_dimensional(self, u: WLabel) -> bool:
        return isinstance(u, OneDim)

    def conjugate(self, u: WLabel) -> WLabel:
        return conjugate(u, self.group, self.lam)

    def normal(self, u: WLabel) -> WLabel:
        return u if isinstance(u, OneDim) else normalize(u.letters, self.lam)

    def one_dim_word(self, g: int) -> tuple[str, ...]:
        """The representative word ``w_lambda``."""
        if self._one_dim_words is None or g not in self._one_dim_words:
            return self.gens.geodesic_words([g])[g]
        return self._one_dim_words[g]

    def letter_word(self, g: int) -> tuple[str, ...]:
        """Shortest nonempty word evaluating to ``g``."""
        if g not in self._letter_words:
            self._letter_words[g] = self.gens.geodesic_words([g], nonempty=True)[g]
        return self._letter_words[g]

    def one_dim_rep(self, g: int) -> Partition:
        w = self.one_dim_word(g)
        return beta(w, w) if w else empty()

    def representative(self, u: WLabel) -> Partition:
        if isinstance(u, OneDim):
            if not self.lam.contains(u.element):
                raise NotMember(f"{self.group.name(u.element)} is not in Lambda")
            return self.one_dim_rep(u.element)
        return tensor_all(pi(self.letter_word(g), self.letter_word(g)) for g in u.letters)

    def parse(self, text: str) -> WLabel:
        s = text.strip()
        try:
            if s.startswith("1d:"):
                g = self.group.parse(s[3:])
                if not self.lam.contains(g):
                    raise LabelParseError(f"{s[3:]} is not in Lambda")
                return OneDim(g)
            parts = [x for x in s.split(".")]
            if not s or any(not x for x in parts):
                raise LabelParseError(f"cannot parse label {text!r}")
            return normalize([self.group.parse(x) for x in parts], self.lam)
        except GroupError as exc:
            raise LabelParseError(str(exc)) from exc

    def format(self, u: WLabel) -> str:
        if isinstance(u, OneDim):
            return "1d:" + self.group.name(u.element)
        return ".".join(self.group.name(g) for g in u.letters)

    def sort_key(self, u: WLabel):
        if isinstance(u, OneDim):
            return (0, 0, self.group.sort_key(u.element))
        return (1, len(u.letters), tuple(self.group.sort_key(g) for g in u.letters))

    def word_labels(self, max_len: int) -> list[Word]:
        """All normal-form word labels up to ``max_len`` letters (finite ``Gamma``)."""
        from itertools import product
        out = set()
        elems = self.group.elements()
        for n in range(1, max_len + 1):
            for letters in product(elems, repeat=n):
                out.add(normalize(letters, self.lam))
        return sorted(out, key=self.sort_key)

    def describe(self) -> dict:
        return {"family": self.name, "group": self.group.to_json(),
                "lambda": self.lam.to_json(), "gens": self.gens.to_json()}


def one_dim_group(family: WreathFamily) -> tuple[OneDimGroup, dict]:
    """``Lambda`` with diagram witnesses and its multiplication table via one-dimensional fusion.

    Witnesses: distinct ``beta(w_l, w_l)`` are inequivalent, and the tensor
    product of two of them is equivalent to the representative of the product.
    """
    lam, grp, cat = family.lam, family.group, family.category
    elems = lam.sorted_elements()
    witnesses = []
    reps = {g: family.one_dim_rep(g) for g in elems}
    for g in elems:
        for h in elems:
            if g < h:
                witnesses.append((f"beta_{grp.name(g)} ~ beta_{grp.name(h)}", False,
                                  equivalent(reps[g], reps[h], cat)))
    table = {}
    for g in elems:
        for h in elems:
            closed = closed_fusion(OneDim(g), OneDim(h), lam)
            (res,) = closed
            table[(g, h)] = res.element
            prod_rep = tensor(reps[g], reps[h])
            witnesses.append((f"{grp.name(g)}*{grp.name(h)} closed vs diagram label", True,
                              family.label(prod_rep) == res))
            witnesses.append((f"beta_{grp.name(g)} (x) beta_{grp.name(h)} ~ beta_{grp.name(res.element)}",
                              True, equivalent(prod_rep, reps[res.element], cat)))
    order = lam.order
    return OneDimGroup(order, None, tuple(witnesses)), table
