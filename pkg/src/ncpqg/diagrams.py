"""Coloured two-row partitions and the diagram calculus on them.

A partition with ``m`` upper and ``n`` lower points stores each block as a
sorted tuple of *boundary positions*: upper point ``i`` (1-based, left to
right) sits at position ``i - 1`` and lower point ``j`` sits at position
``m + n - j``.  Reading positions ``0 .. m+n-1`` in order therefore walks the
upper row left to right and then the lower row right to left, i.e. once
around the boundary of the disk the diagram is drawn in.  With this
convention crossing is interleaving, a rotation is a relabelling of the row
split, and the involution is the reflection ``pos -> m+n-1-pos``.

Composition follows the usual stacking rule: ``compose(q, p)`` puts ``p`` on
top of ``q`` and glues the lower row of ``p`` to the upper row of ``q``, so
for ``r`` in ``P(a, b)`` the product ``compose(involute(r), r)`` lives in
``P(a, a)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence

UPPER = "u"
LOWER = "l"

Word = tuple[str, ...]


class DiagramError(ValueError):
    pass


class RowMismatch(DiagramError):
    pass


class EmptyRow(DiagramError):
    pass


class EmptyWord(DiagramError):
    pass


class NotProjective(DiagramError):
    pass


class OutOfRange(DiagramError):
    pass


class PartitionParseError(DiagramError):
    pass


class PointRef(NamedTuple):
    row: str
    index: int


@dataclass(frozen=True)
class Partition:
    upper: Word
    lower: Word
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        blocks = sorted(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", tuple(blocks))

    @classmethod
    def from_points(cls, upper: Sequence[str], lower: Sequence[str],
                    blocks: Iterable[Iterable[tuple[str, int]]]) -> "Partition":
        """Build a partition from blocks of ``(row, index)`` points, validating it."""
        upper, lower = tuple(upper), tuple(lower)
        m, n = len(upper), len(lower)
        seen: dict[int, tuple[str, int]] = {}
        out = []
        for block in blocks:
            cur = []
            for row, idx in block:
                if row not in (UPPER, LOWER) or not isinstance(idx, int):
                    raise PartitionParseError(f"malformed point {[row, idx]!r}")
                length = m if row == UPPER else n
                if not 1 <= idx <= length:
                    raise PartitionParseError(
                        f"point {[row, idx]!r} is out of range for a row of length {length}")
                pos = position(row, idx, m, n)
                if pos in seen:
                    raise PartitionParseError(f"point {[row, idx]!r} appears in two blocks")
                seen[pos] = (row, idx)
                cur.append(pos)
            if not cur:
                raise PartitionParseError("empty block")
            out.append(cur)
        for pos in range(m + n):
            if pos not in seen:
                raise PartitionParseError(f"point {list(point(pos, m, n))!r} is not in any block")
        return cls(upper, lower, tuple(tuple(b) for b in out))

    @property
    def m(self) -> int:
        return len(self.upper)

    @property
    def n(self) -> int:
        return len(self.lower)

    @property
    def size(self) -> int:
        return len(self.upper) + len(self.lower)

    def colour_at(self, pos: int) -> str:
        if pos < self.m:
            return self.upper[pos]
        return self.lower[self.m + self.n - 1 - pos]

    def is_upper(self, pos: int) -> bool:
        return pos < self.m

    def point_blocks(self) -> list[list[PointRef]]:
        return [[point(x, self.m, self.n) for x in b] for b in self.blocks]

    def through_blocks(self) -> list[tuple[int, ...]]:
        """Blocks meeting both rows, ordered by their leftmost upper point."""
        m = self.m
        return [b for b in self.blocks if b[0] < m <= b[-1]]

    def upper_only_blocks(self) -> list[tuple[int, ...]]:
        return [b for b in self.blocks if b[-1] < self.m]

    def lower_only_blocks(self) -> list[tuple[int, ...]]:
        return [b for b in self.blocks if b[0] >= self.m]

    def __str__(self) -> str:
        return render(self)


class CompositionResult(NamedTuple):
    partition: Partition
    loops: int


class Corner(enum.Enum):
    """Source corner of a one-point rotation."""

    UPPER_LEFT = "upper_left"      # upper-left point moves to the lower-left
    LOWER_LEFT = "lower_left"      # lower-left point moves to the upper-left
    UPPER_RIGHT = "upper_right"    # upper-right point moves to the lower-right
    LOWER_RIGHT = "lower_right"    # lower-right point moves to the upper-right


def position(row: str, idx: int, m: int, n: int) -> int:
    return idx - 1 if row == UPPER else m + n - idx


def point(pos: int, m: int, n: int) -> PointRef:
    if pos < m:
        return PointRef(UPPER, pos + 1)
    return PointRef(LOWER, m + n - pos)


def as_word(w: Iterable[str]) -> Word:
    return tuple(w)


# ---------------------------------------------------------------- builders

def empty() -> Partition:
    return Partition((), (), ())


def pi(w: Sequence[str], w2: Sequence[str]) -> Partition:
    """The one-block partition on ``(w, w2)``."""
    w, w2 = as_word(w), as_word(w2)
    if not w and not w2:
        raise EmptyWord("pi needs at least one point")
    return Partition(w, w2, (tuple(range(len(w) + len(w2))),))


def beta(w: Sequence[str], w2: Sequence[str]) -> Partition:
    """Two blocks: all upper points together, all lower points together."""
    w, w2 = as_word(w), as_word(w2)
    if not w or not w2:
        raise EmptyWord("beta needs both rows nonempty")
    m, n = len(w), len(w2)
    return Partition(w, w2, (tuple(range(m)), tuple(range(m, m + n))))


def identity(w: Sequence[str]) -> Partition:
    w = as_word(w)
    m = len(w)
    return Partition(w, w, tuple((i, 2 * m - 1 - i) for i in range(m)))


def d_xy(x: str = "x", y: str = "y") -> Partition:
    """The two-point cap coloured ``x y``, stored with both points in the upper row."""
    return Partition((x, y), (), ((0, 1),))


def h_square(k: int, colours: Sequence[str]) -> Partition:
    """Nested caps: in each row the i-th point is paired with the (2k-i+1)-th."""
    colours = as_word(colours)
    if k < 1 or len(colours) != 2 * k:
        raise OutOfRange(f"h_square({k}) needs {2 * k} colours, got {len(colours)}")
    m = 2 * k
    blocks = []
    for i in range(k):
        blocks.append((i, m - 1 - i))
        blocks.append((m + i, 2 * m - 1 - i))
    return Partition(colours, colours, tuple(blocks))


def h_boxvert(k: int, colours: Sequence[str]) -> Partition:
    """``h_square(k)`` with its outermost upper and lower caps merged into one block."""
    p = h_square(k, colours)
    m = 2 * k
    outer = (0, m - 1, m, 2 * m - 1)
    rest = [b for b in p.blocks if b[0] not in (0, m)]
    return Partition(p.upper, p.lower, tuple(rest) + (outer,))


# -------------------------------------------------------------- operations

def tensor(p: Partition, q: Partition) -> Partition:
    m1, n1, m2, n2 = p.m, p.n, q.m, q.n
    total = m1 + n1 + m2 + n2

    def shift(pos, mi, ni, off_u, off_l):
        if pos < mi:
            return pos + off_u
        return total - (mi + ni - pos + off_l)

    blocks = [tuple(shift(x, m1, n1, 0, 0) for x in b) for b in p.blocks]
    blocks += [tuple(shift(x, m2, n2, m1, n1) for x in b) for b in q.blocks]
    return Partition(p.upper + q.upper, p.lower + q.lower, tuple(blocks))


def tensor_all(parts: Iterable[Partition]) -> Partition:
    out = empty()
    for part in parts:
        out = tensor(out, part)
    return out


def compose(q: Partition, p: Partition) -> CompositionResult:
    """Stack ``p`` on top of ``q`` (the product written ``qp``)."""
    if p.lower != q.upper:
        raise RowMismatch(f"cannot glue lower row {list(p.lower)} onto upper row {list(q.upper)}")
    tp = p.size
    parent = list(range(tp + q.size))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for b in p.blocks:
        for x in b[1:]:
            union(b[0], x)
    for b in q.blocks:
        for x in b[1:]:
            union(tp + b[0], tp + x)
    mp, mid = p.m, p.n
    for j in range(1, mid + 1):
        union(mp + mid - j, tp + j - 1)

    nq = q.n
    groups: dict[int, list[int]] = {}
    for i in range(mp):
        groups.setdefault(find(i), []).append(i)
    for j in range(1, nq + 1):
        groups.setdefault(find(tp + q.m + nq - j), []).append(mp + nq - j)
    roots = {find(a) for a in range(tp + q.size)}
    loops = len(roots) - len(groups)
    return CompositionResult(Partition(p.upper, q.lower, tuple(groups.values())), loops)


def involute(p: Partition) -> Partition:
    last = p.size - 1
    return Partition(p.lower, p.upper, tuple(tuple(last - x for x in b) for b in p.blocks))


def rotate(p: Partition, corner: Corner | str,
           inverse: Mapping[str, str] | None = None) -> Partition:
    """Move one corner point to the other row, inverting its colour."""
    corner = Corner(corner)
    inv = (lambda c: c) if inverse is None else (lambda c: inverse[c])
    total = p.size
    if corner in (Corner.UPPER_LEFT, Corner.UPPER_RIGHT) and not p.upper:
        raise EmptyRow("upper row is empty")
    if corner in (Corner.LOWER_LEFT, Corner.LOWER_RIGHT) and not p.lower:
        raise EmptyRow("lower row is empty")
    if corner is Corner.UPPER_LEFT:
        upper, lower = p.upper[1:], (inv(p.upper[0]),) + p.lower
        blocks = tuple(tuple((x - 1) % total for x in b) for b in p.blocks)
    elif corner is Corner.LOWER_LEFT:
        upper, lower = (inv(p.lower[0]),) + p.upper, p.lower[1:]
        blocks = tuple(tuple((x + 1) % total for x in b) for b in p.blocks)
    elif corner is Corner.UPPER_RIGHT:
        upper, lower = p.upper[:-1], p.lower + (inv(p.upper[-1]),)
        blocks = p.blocks
    else:
        upper, lower = p.upper + (inv(p.lower[-1]),), p.lower[:-1]
        blocks = p.blocks
    return Partition(upper, lower, blocks)


UNROTATE = {
    Corner.UPPER_LEFT: Corner.LOWER_LEFT,
    Corner.LOWER_LEFT: Corner.UPPER_LEFT,
    Corner.UPPER_RIGHT: Corner.LOWER_RIGHT,
    Corner.LOWER_RIGHT: Corner.UPPER_RIGHT,
}


def is_noncrossing(p: Partition) -> bool:
    owner = [0] * p.size
    for i, b in enumerate(p.blocks):
        for x in b:
            owner[x] = i
    last = {b: blk[-1] for b, blk in enumerate(p.blocks)}
    first = {b: blk[0] for b, blk in enumerate(p.blocks)}
    stack: list[int] = []
    for pos in range(p.size):
        b = owner[pos]
        if pos == first[b]:
            if pos != last[b]:
                stack.append(b)
        else:
            if not stack or stack[-1] != b:
                return False
            if pos == last[b]:
                stack.pop()
    return True


def through_block_count(p: Partition) -> int:
    return len(p.through_blocks())


def is_projective(p: Partition) -> bool:
    if p.upper != p.lower:
        return False
    if involute(p) != p:
        return False
    return compose(p, p).partition == p


def dominates(q: Partition, p: Partition) -> bool:
    """True iff ``p`` is dominated by ``q``, i.e. ``qp = p``."""
    if not (is_projective(p) and is_projective(q)):
        raise NotProjective("domination is defined on projective partitions")
    if p.upper != q.upper:
        raise RowMismatch("domination compares partitions on the same word")
    return compose(q, p).partition == p


def mid_colour(word: Sequence[str]) -> str:
    if len(word) == 1:
        return word[0]
    return "[" + ",".join(word) + "]"


def upper_half(p: Partition) -> tuple[Partition, tuple[Word, ...]]:
    """Split a projective ``p`` as ``p = half* half``.

    Each through-block keeps its upper legs and gets a single new lower
    point; the returned words list, per through-block, the colours of its
    upper legs.  Lower points of the half are coloured with
    :func:`mid_colour` of these words.
    """
    if not is_projective(p):
        raise NotProjective("upper_half needs a projective partition")
    m = p.m
    through = p.through_blocks()
    t = len(through)
    words = tuple(tuple(p.upper[x] for x in b if x < m) for b in through)
    blocks = [b for b in p.upper_only_blocks()]
    for i, b in enumerate(through):
        # lower point i+1 of the half sits at position m + t - (i + 1)
        blocks.append(tuple(x for x in b if x < m) + (m + t - i - 1,))
    half = Partition(p.upper, tuple(mid_colour(w) for w in words), tuple(blocks))
    return half, words


def _surgery(p: Partition, q: Partition, k: int, merge_outer: bool) -> Partition:
    for r in (p, q):
        if not is_projective(r):
            raise NotProjective("contraction needs projective partitions")
        if not is_noncrossing(r):
            raise DiagramError("contraction needs noncrossing partitions")
    tp, tq = through_block_count(p), through_block_count(q)
    if not 1 <= k <= min(tp, tq):
        raise OutOfRange(f"k={k} outside 1..{min(tp, tq)}")
    s = tensor(p, q)
    m = s.m
    through = s.through_blocks()
    ps, qs = through[:tp], through[tp:]
    touched = set()
    new_blocks = []
    for i in range(1, k + 1):
        a, b = ps[tp - i], qs[i - 1]
        touched.update((a, b))
        if merge_outer and i == k:
            new_blocks.append(a + b)
        else:
            new_blocks.append(tuple(x for x in a + b if x < m))
            new_blocks.append(tuple(x for x in a + b if x >= m))
    blocks = [b for b in s.blocks if b not in touched] + new_blocks
    return Partition(s.upper, s.lower, tuple(blocks))


def square_contract(p: Partition, q: Partition, k: int) -> Partition:
    """Cap off the ``k`` innermost pairs of through-blocks of ``p (x) q``."""
    return _surgery(p, q, k, merge_outer=False)


def boxvert_contract(p: Partition, q: Partition, k: int) -> Partition:
    """Cap off ``k - 1`` innermost pairs and fuse the ``k``-th pair into one through-block."""
    return _surgery(p, q, k, merge_outer=True)


# --------------------------------------------------------------- rendering

def render(p: Partition) -> str:
    """Plain-text dump, for debugging."""
    blocks = " ".join(
        "{" + ",".join(f"{r}{i}" for r, i in blk) + "}" for blk in p.point_blocks())
    return (f"upper: {' '.join(p.upper) or '-'}\n"
            f"lower: {' '.join(p.lower) or '-'}\n"
            f"blocks: {blocks or '-'}")


def to_json(p: Partition) -> dict:
    return {
        "upper": list(p.upper),
        "lower": list(p.lower),
        "blocks": [[[r, i] for r, i in blk] for blk in p.point_blocks()],
    }


def from_json(data: Mapping) -> Partition:
    try:
        upper = [str(c) for c in data["upper"]]
        lower = [str(c) for c in data["lower"]]
        blocks = [[(pt[0], pt[1]) for pt in blk] for blk in data["blocks"]]
    except (KeyError, TypeError, IndexError) as exc:
        raise PartitionParseError(f"malformed partition JSON: {exc}") from exc
    return Partition.from_points(upper, lower, blocks)
