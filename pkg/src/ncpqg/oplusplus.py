"""The O_N^{++}(ell) family: labels ``theta^k X^n`` and their fusion rules.

Irreducibles are labelled by the monoid generated by ``X`` and ``theta``
subject to ``theta^ell = 1`` and ``X theta = theta^-1 X``; every element has
the normal form ``theta^k X^n``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .categories import DEll
from .diagrams import Partition, beta, empty, is_projective, pi, tensor_all, through_block_count
from .fusion import LabelParseError, NotMember, OneDimGroup, equivalent
from .groups import dihedral_eval


class ModulusMismatch(ValueError):
    pass


class ParityViolation(AssertionError):
    pass


@dataclass(frozen=True, order=True)
class MLabel:
    n: int
    k: int
    ell: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.ell < 0:
            raise ValueError("ell must be >= 0")
        if self.ell:
            object.__setattr__(self, "k", self.k % self.ell)

    @property
    def is_trivial(self) -> bool:
        return self.n == 0 and self.k == 0

    def __mul__(self, other: "MLabel") -> "MLabel":
        return m_product(self, other)

    def __str__(self) -> str:
        return format_label(self)


def _same_ell(a: MLabel, b: MLabel) -> int:
    if a.ell != b.ell:
        raise ModulusMismatch(f"labels over ell={a.ell} and ell={b.ell}")
    return a.ell


def m_product(a: MLabel, b: MLabel) -> MLabel:
    ell = _same_ell(a, b)
    sign = -1 if a.n % 2 else 1
    return MLabel(a.n + b.n, a.k + sign * b.k, ell)


def m_conjugate(a: MLabel) -> MLabel:
    sign = 1 if a.n % 2 else -1
    return MLabel(a.n, sign * a.k, a.ell)


def _theta_x_theta(k: int, m: int, c: int, ell: int) -> MLabel:
    """Normal form of ``theta^k X^m theta^c``."""
    return MLabel(m, k + (-1) ** m * c, ell)


def closed_fusion(a: MLabel, b: MLabel) -> Counter:
    ell = _same_ell(a, b)
    # b = theta^kb X^n' = X^n' theta^kk
    kk = (-1) ** b.n * b.k
    out = Counter()
    for i in range(min(a.n, b.n) + 1):
        out[_theta_x_theta(a.k, a.n + b.n - 2 * i, kk, ell)] += 1
    return out


def printed_fusion(a: MLabel, b: MLabel) -> Counter:
    """The fusion formula read verbatim: an extra ``theta^(k+k')`` next to the sum.

    Kept only to document how it differs from the diagrams; see
    :func:`closed_fusion` for the rule that matches them.
    """
    out = closed_fusion(a, b)
    out[MLabel(0, a.k + (-1) ** b.n * b.k, a.ell)] += 1
    return out


def label_of_projective(p: Partition, ell: int, check: bool = True) -> MLabel:
    if check:
        if not is_projective(p):
            raise NotMember("not a projective partition")
        reason = DEll(ell).violation(p)
        if reason:
            raise NotMember(reason)
    n = through_block_count(p)
    g = dihedral_eval(p.upper)
    if g.eps != n % 2:
        raise ParityViolation(f"phi(w) = ({g.t},{g.eps}) with {n} through-blocks")
    return MLabel(n, g.t, ell)


def representative(label: MLabel) -> Partition:
    """A short projective with this label.

    ``pi(y,y)`` is ``theta^-1 X``, so a product of ``n`` factors ``pi(c,c)``
    already reaches ``theta^k X^n`` for small ``|k|``; the rest of ``k`` is
    supplied by ``D*D`` (or ``D_yx* D_yx``) caps in front.
    """
    k, n = label.k, label.n
    if label.ell and k > label.ell // 2:
        k -= label.ell
    # factor i (1-based) equal to pi(y,y) contributes (-1)^i to k
    letters = ["x"] * n
    slots = range(1, n, 2) if k >= 0 else range(0, n, 2)
    used = 0
    for i in slots:
        if used == abs(k):
            break
        letters[i] = "y"
        used += 1
    rest = abs(k) - used
    cap = beta("xy", "xy") if k >= 0 else beta("yx", "yx")
    parts = [cap] * rest + [pi(c, c) for c in letters]
    return tensor_all(parts) if parts else empty()


_LABEL_RE = re.compile(r"^\s*(?:t(?:\^(-?\d+))?)?\s*(?:X(?:\^(\d+))?)?\s*$")


def parse_label(text: str, ell: int) -> MLabel:
    s = text.strip()
    if s == "1":
        return MLabel(0, 0, ell)
    match = _LABEL_RE.match(s)
    if not s or not match:
        raise LabelParseError(f"cannot parse label {text!r}")
    has_t = "t" in s
    has_x = "X" in s
    k = int(match.group(1)) if match.group(1) is not None else (1 if has_t else 0)
    n = int(match.group(2)) if match.group(2) is not None else (1 if has_x else 0)
    return MLabel(n, k, ell)


def format_label(a: MLabel) -> str:
    if a.is_trivial:
        return "1"
    return f"t^{a.k} X^{a.n}"


def one_dim_group(ell: int, bound: int = 4) -> OneDimGroup:
    """Cyclic group generated by ``theta``, certified on diagrams.

    ``theta^j ~ 1`` is checked for ``j = 1 .. max(ell, bound)``; it must hold
    exactly when ``ell`` divides ``j``.
    """
    cat = DEll(ell)
    top = max(ell, bound) if ell else bound
    witnesses = []
    for j in range(1, top + 1):
        p = tensor_all([beta("xy", "xy")] * j)
        observed = equivalent(p, empty(), cat)
        expected = ell != 0 and j % ell == 0
        witnesses.append((f"theta^{j} ~ 1", expected, observed))
    return OneDimGroup(ell, MLabel(0, 1, ell), tuple(witnesses))


class OPlusPlus:
    """Family object tying the ``D_ell`` category to ``M_ell`` labels."""

    name = "oplusplus"

    def __init__(self, ell: int):
        if ell < 0:
            raise ValueError("ell must be >= 0")
        self.ell = ell
        self.category = DEll(ell)

    @property
    def colours(self):
        return ("x", "y")

    @property
    def trivial(self) -> MLabel:
        return MLabel(0, 0, self.ell)

    def label(self, p: Partition, check: bool = True) -> MLabel:
        return label_of_projective(p, self.ell, check)

    def fusion(self, a: MLabel, b: MLabel) -> Counter:
        return closed_fusion(a, b)

    def is_one_dimensional(self, a: MLabel) -> bool:
        return a.n == 0

    def conjugate(self, a: MLabel) -> MLabel:
        return m_conjugate(a)

    def representative(self, a: MLabel) -> Partition:
        return representative(a)

    def parse(self, text: str) -> MLabel:
        return parse_label(text, self.ell)

    def format(self, a: MLabel) -> str:
        return format_label(a)

    def sort_key(self, a: MLabel):
        return (a.n, abs(a.k), a.k < 0, a.k)

    def describe(self) -> dict:
        return {"family": self.name, "ell": self.ell}
