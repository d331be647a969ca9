from itertools import product

import pytest
from hypothesis import given, strategies as st

from ncpqg.categories import (AlphabetMismatch, CGammaS, DEll, DGammaLambdaS, OPlusPair,
                              category_from_json, full_subpartitions)
from ncpqg.crosscheck import closure_check
from ncpqg.diagrams import (Corner, EmptyRow, Partition, beta, compose, d_xy, involute, pi, rotate,
                            tensor, tensor_all)
from ncpqg.fusion import noncrossing_partitions
from ncpqg.groups import GeneratingSet, Group, closure, klein_four
from ncpqg.wreath import WreathFamily
from tests.strategies import partitions

D = d_xy()
DSD = beta("xy", "xy")


def arc_block_sets(p):
    return {frozenset(a.blocks) for a in full_subpartitions(p)}


# ------------------------------------------------------------ full subpartitions

def test_full_subpartitions_beta():
    p = beta("ab", "ab")
    upper = p.blocks.index((0, 1))
    assert frozenset({upper}) in arc_block_sets(p)


def test_full_subpartitions_pi():
    assert arc_block_sets(pi("ab", "ab")) == {frozenset({0})}


def test_full_subpartitions_tensor_factors():
    p = tensor(pi("ab", "ab"), pi("c", "c"))
    sets = arc_block_sets(p)
    for blk in p.blocks:
        assert frozenset({p.blocks.index(blk)}) in sets
    assert frozenset(range(len(p.blocks))) in sets


def test_full_subpartitions_are_arcs():
    p = tensor_all([pi("a", "a"), beta("ab", "b"), pi("b", "")])
    for arc in full_subpartitions(p):
        pts = {(arc.start + i) % p.size for i in range(arc.length)}
        assert pts == {x for i in arc.blocks for x in p.blocks[i]}


# ------------------------------------------------------------ DEll

def test_dell_examples():
    for ell in range(5):
        assert DEll(ell).member(DSD)
    assert not DEll(2).member(D)
    assert DEll(2).member(tensor(D, D))
    assert DEll(1).member(D)
    assert not DEll(2).member(pi("xx", "xx"))
    assert "pair" in DEll(2).violation(pi("xx", "xx"))
    assert "(1,0)" in DEll(2).violation(D)
    with pytest.raises(AlphabetMismatch):
        DEll(2).member(pi("a", "a"))


def test_dell_pointwise_distinct():
    for ell in range(5):
        for ell2 in range(5):
            if ell == ell2:
                continue
            bound = 2 * max(ell, ell2) + 2
            witnesses = [tensor_all([D] * j) for j in range(1, bound // 2 + 1)]
            assert any(DEll(ell).member(p) != DEll(ell2).member(p) for p in witnesses)


def test_dell_nc_projective_pairs_in_every_dell():
    from ncpqg.fusion import enumerate_projectives
    for n in range(1, 5):
        for w in product("xy", repeat=n):
            projs = enumerate_projectives(w, _Pairs())
            for ell in range(4):
                assert all(DEll(ell).member(p) for p in projs)


class _Pairs:
    def member(self, p):
        return all(len(b) == 2 for b in p.blocks)


@given(partitions(max_points=8, noncrossing=True), st.integers(0, 4),
       st.sampled_from(list(Corner)))
def test_dell_rotation_invariant(p, ell, corner):
    try:
        r = rotate(p, corner)
    except EmptyRow:
        return
    assert DEll(ell).member(r) == DEll(ell).member(p)


def test_oplus_pair():
    assert OPlusPair().member(pi("xx", ""))
    assert not OPlusPair().member(Partition(("x",), (), ((0,),)))
    with pytest.raises(AlphabetMismatch):
        OPlusPair().member(pi("y", "y"))


# ------------------------------------------------------------ wreath categories

def _z4():
    grp = Group.cyclic(4)
    return GeneratingSet.default(grp), grp


def test_wreath_beta_generators():
    for lam_gens in ([], [2], [1]):
        fam = WreathFamily.build(Group.cyclic(4), lam_gens)
        for g in fam.lam.sorted_elements():
            assert fam.category.member(fam.one_dim_rep(g))
    fam = WreathFamily.build(Group.cyclic(4), [2])
    assert not fam.category.member(beta(("g1",), ("g1",)))


def test_wreath_phi_mismatch_reported():
    gens, grp = _z4()
    cat = DGammaLambdaS(gens, closure(grp, []))
    reason = cat.violation(pi(("g1",), ("g2",)))
    assert "differs" in reason


def test_wreath_full_arc_reported():
    gens, grp = _z4()
    cat = DGammaLambdaS(gens, closure(grp, [2]))
    p = beta(("g1", "g1"), ("g1", "g1"))
    assert cat.member(p)
    q = beta(("g1",), ("g1",))
    reason = cat.violation(q)
    assert "full arc" in reason and "g1" in reason


def _all_diagrams(colours, max_points):
    for total in range(max_points + 1):
        for blocks in noncrossing_partitions(total):
            for m in range(total + 1):
                for cols in product(colours, repeat=total):
                    yield Partition(cols[:m], cols[m:], blocks)


@pytest.mark.parametrize("grp", [Group.cyclic(3), klein_four()])
def test_cgammas_equals_trivial_lambda(grp):
    gens = GeneratingSet.default(grp)
    cols = gens.colours[:2]
    c = CGammaS(gens)
    d = DGammaLambdaS(gens, closure(grp, []))
    count = 0
    for p in _all_diagrams(cols, 6):
        assert c.member(p) == d.member(p), p
        count += c.member(p)
    assert count > 100


@given(partitions(colours=("g1", "g2"), max_points=10))
def test_cgammas_equals_trivial_lambda_sampled(p):
    grp = Group.cyclic(3)
    gens = GeneratingSet.default(grp)
    assert CGammaS(gens).member(p) == DGammaLambdaS(gens, closure(grp, [])).member(p)


def test_wreath_nested_condition():
    """An arc nested inside another must be valued in Lambda on its own."""
    gens, grp = _z4()
    cat = DGammaLambdaS(gens, closure(grp, []))
    # nested caps on g g g g: the outer arc multiplies to e, the inner one to g^2
    p = Partition(("g1",) * 4, (), ((0, 3), (1, 2)))
    assert not cat.member(p)
    assert "g2" in cat.violation(p)
    assert cat.member(Partition(("g1", "g1", "g3", "g3"), (), ((0, 3), (1, 2))))


# ------------------------------------------------------------ closure

@pytest.mark.parametrize("ell", [0, 1, 2, 3])
def test_dell_closure(ell):
    rep = closure_check(DEll(ell), "xy", 100, seed=ell, pairs=True)
    assert rep.samples == 100 and not rep.failures


@pytest.mark.parametrize("grp,lam", [(Group.cyclic(2), []), (Group.cyclic(4), [2]),
                                     (klein_four(), [3]), (Group.cyclic(3), [])])
def test_wreath_closure(grp, lam):
    fam = WreathFamily.build(grp, lam)
    rep = closure_check(fam.category, fam.colours, 100, seed=7)
    assert rep.samples == 100 and not rep.failures


def test_closure_detects_a_broken_predicate():
    class NoD(DEll):
        def violation(self, p):
            if p.m and p.n == 0 and len(p.blocks) == 1:
                return "caps forbidden"
            return super().violation(p)

    rep = closure_check(NoD(1), "xy", 200, seed=3, pairs=True)
    assert rep.failures


def test_category_json():
    assert category_from_json({"kind": "dell", "ell": 2}) == DEll(2)
    fam = WreathFamily.build(Group.cyclic(4), [2])
    cat = category_from_json(fam.category.to_json())
    assert cat.lam.elements == fam.lam.elements
    p = fam.one_dim_rep(2)
    assert cat.member(p)
    with pytest.raises(ValueError):
        category_from_json({"kind": "nope"})
    assert involute(p) == p and compose(p, p).partition == p
