from collections import Counter
from itertools import product

import pytest
from hypothesis import given, strategies as st

from ncpqg.diagrams import beta, empty, pi, tensor
from ncpqg.fusion import (LabelParseError, NotMember, decompose_labels, enumerate_projectives,
                          equivalent, words)
from ncpqg.groups import GeneratingSet, Group, closure, klein_four
from ncpqg.wreath import (EmptyOperand, OneDim, Word, WreathFamily, bullet, closed_fusion,
                          conjugate, contraction_value, normalize,
                          one_dim_group, star)

Z2, Z4 = Group.cyclic(2), Group.cyclic(4)


def fam(group, lam=(), gens=None):
    return WreathFamily.build(group, lam, gens)


# ------------------------------------------------------------ normal form

def test_normalize_examples():
    lam = closure(Z4, [2])
    assert normalize([3], lam) == Word((3,))
    assert normalize([3, 1], lam) == Word((1, 3))
    assert normalize([2, 2, 2], lam) == Word((0, 0, 2))
    with pytest.raises(ValueError):
        normalize([], lam)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=5), st.sampled_from([[], [2], [1]]))
def test_normalize_idempotent_and_invariant(letters, gens):
    lam = closure(Z4, gens)
    w = normalize(letters, lam)
    assert normalize(w.letters, lam) == w
    # sliding any Lambda element across a boundary leaves the class unchanged
    for i in range(len(letters) - 1):
        for h in lam.sorted_elements():
            moved = list(letters)
            moved[i] = Z4.mul(moved[i], h)
            moved[i + 1] = Z4.mul(Z4.inv(h), moved[i + 1])
            assert normalize(moved, lam) == w
    # the product of all letters is a class invariant
    assert Z4.prod(w.letters) == Z4.prod(letters)


# ------------------------------------------------------------ bullet and star

def test_bullet_star_examples():
    lam = closure(Z2, [])
    assert bullet([1], [1], 0, lam) == Word((1, 1))
    assert star([1], [1], 0, lam) == Word((0,))
    lam4 = closure(Z4, [2])
    assert bullet([], [1], 2, lam4) == Word((3,))
    assert bullet([], [], 2, lam4) == OneDim(2)
    with pytest.raises(EmptyOperand):
        star([], [1], 0, lam)


def test_contraction_value_cumulative():
    lam = closure(Z4, [])
    assert contraction_value((1, 1), (1, 1), 2, lam, cumulative=True) is None
    assert contraction_value((1, 1), (1, 1), 2, lam, cumulative=False) == 0
    assert contraction_value((1, 1), (3, 3), 2, lam) == 0


# ------------------------------------------------------------ labels of diagrams

def test_label_examples():
    f = fam(Z4, [2])
    for g in f.lam.sorted_elements():
        assert f.label(f.one_dim_rep(g)) == OneDim(g)
    for g in Z4.elements():
        w = f.letter_word(g)
        assert f.label(pi(w, w)) == normalize([g], f.lam)
    # a leading one-dimensional block is absorbed into the first letter
    b = f.one_dim_rep(2)
    w = f.letter_word(1)
    p = tensor(b, pi(w, w))
    assert f.label(p) == Word((3,))
    assert equivalent(p, f.representative(Word((3,))), f.category)
    with pytest.raises(NotMember):
        f.label(beta(("g1",), ("g1",)))


@pytest.mark.parametrize("group,lam", [(Z2, []), (Z4, []), (Z4, [2]), (klein_four(), [3])])
def test_representatives_round_trip(group, lam):
    f = fam(group, lam)
    for u in f.word_labels(3):
        assert f.label(f.representative(u)) == u
    for g in f.lam.sorted_elements():
        assert f.label(f.representative(OneDim(g))) == OneDim(g)
    with pytest.raises(NotMember):
        if f.lam.order < group.order:
            outside = next(g for g in group.elements() if not f.lam.contains(g))
            f.representative(OneDim(outside))
        else:
            raise NotMember("nothing outside Lambda")


def test_parse_and_format():
    f = fam(Z4, [2])
    assert f.parse("1d:g2") == OneDim(2)
    assert f.parse("g3.g1") == Word((1, 3))
    assert f.format(Word((1, 3))) == "g1.g3"
    for u in f.word_labels(2) + [OneDim(0), OneDim(2)]:
        assert f.parse(f.format(u)) == u
    for bad in ["", "g1..g2", "1d:g1", "h", "."]:
        with pytest.raises(LabelParseError):
            f.parse(bad)


# ------------------------------------------------------------ fusion

def test_fusion_examples():
    f = fam(Z2)
    g = Word((1,))
    assert f.fusion(g, g) == Counter({Word((1, 1)): 1, Word((0,)): 1, OneDim(0): 1})
    assert decompose_labels(f.representative(g), f.representative(g), f) == f.fusion(g, g)
    t = fam(Group.cyclic(1))
    u1 = Word((0,))
    assert sorted(len(x.letters) if isinstance(x, Word) else 0 for x in t.fusion(u1, u1)) == [0, 1, 2]
    f4 = fam(Z4, [2])
    assert f4.fusion(OneDim(2), Word((1, 0))) == Counter({Word((1, 2)): 1})
    assert f4.fusion(Word((1, 0)), OneDim(2)) == Counter({Word((1, 2)): 1})
    assert f4.fusion(OneDim(2), OneDim(2)) == Counter({OneDim(0): 1})


def test_printed_condition_admits_an_extra_term():
    """For ``(g,g) (x) (g,g)`` over ``(Z4, {e})`` only the outer cut is in Lambda."""
    f = fam(Z4)
    w = Word((1, 1))
    diagram = decompose_labels(f.representative(w), f.representative(w), f)
    assert diagram == closed_fusion(w, w, f.lam)
    printed = closed_fusion(w, w, f.lam, cumulative=False)
    assert printed - diagram == Counter({OneDim(0): 1})
    assert OneDim(0) not in diagram


@pytest.mark.parametrize("group,lam", [(Z2, []), (Z2, [1]), (Z4, []), (Z4, [2]),
                                       (klein_four(), [3]), (Group.cyclic(3), [])])
def test_fusion_matches_diagrams(group, lam):
    f = fam(group, lam)
    labs = f.word_labels(2) + [OneDim(g) for g in f.lam.sorted_elements()]
    for u, v in product(labs, repeat=2):
        p, q = f.representative(u), f.representative(v)
        if p.m + q.m > 5:
            continue
        assert decompose_labels(p, q, f) == f.fusion(u, v), (u, v)


def test_conjugate():
    f = fam(Z4, [2])
    assert f.conjugate(Word((1, 1))) == normalize([3, 3], f.lam)
    assert f.conjugate(OneDim(2)) == OneDim(2)
    assert conjugate(Word((1,)), Z4, closure(Z4, [])) == Word((3,))
    for u in f.word_labels(2):
        assert f.conjugate(f.conjugate(u)) == u


# ------------------------------------------------------------ independence of choices

def _diagram_table(f, max_len=1):
    labs = f.word_labels(max_len) + [OneDim(g) for g in f.lam.sorted_elements()]
    return {(u, v): decompose_labels(f.representative(u), f.representative(v), f)
            for u in labs for v in labs}


def test_independent_of_generating_set():
    s1 = GeneratingSet.default(Z4)
    s2 = GeneratingSet.build(Z4, {"a": ("A", 1), "A": ("a", 3)})
    s3 = GeneratingSet.build(Z4, {"a": ("A", 1), "A": ("a", 3), "b": ("b", 2)})
    lam = closure(Z4, [2])
    tables = [_diagram_table(WreathFamily(s, lam)) for s in (s1, s2, s3)]
    assert tables[0] == tables[1] == tables[2]
    # and the labels of projectives do not depend on the chosen w_lambda either
    other = WreathFamily(s2, lam, given_words={2: ("A", "A")})
    assert other.one_dim_word(2) == ("A", "A")
    assert other.label(other.one_dim_rep(2)) == OneDim(2)
    assert _diagram_table(other) == tables[0]


def test_label_well_defined_on_equivalent_projectives():
    f = fam(Z4, [2])
    projs = [p for w in words(f.colours, 3) for p in enumerate_projectives(w, f.category)]
    by_label = {}
    for p in projs:
        by_label.setdefault(f.label(p), []).append(p)
    for lab, ps in by_label.items():
        for p in ps[:4]:
            assert equivalent(ps[0], p, f.category), lab


# ------------------------------------------------------------ one-dimensional group

@pytest.mark.parametrize("group,lam,order", [(Z4, [2], 2), (Z4, [], 1), (Z2, [1], 2),
                                             (klein_four(), [3], 2), (Z4, [1], 4)])
def test_one_dim_group(group, lam, order):
    f = fam(group, lam)
    g, table = one_dim_group(f)
    assert g.certified and g.order == order
    for (a, b), c in table.items():
        assert c == group.mul(a, b)


def test_empty_is_trivial_one_dim():
    f = fam(Z2)
    assert f.one_dim_rep(0) == empty()
    assert f.trivial == OneDim(0) and f.is_one_dimensional(OneDim(0))
