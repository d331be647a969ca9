import random

import pytest
from hypothesis import given, strategies as st

from ncpqg.groups import (DIHEDRAL_ONE, Dihedral, GeneratingSet, Group, GroupError, MixedGroups,
                          UnknownLetter, closure, dihedral_eval, in_gamma_ell, in_subgroup,
                          klein_four, rep_words, subgroup_from_json)

letters = st.text(alphabet="xy", max_size=12)


def test_dihedral_eval_examples():
    assert dihedral_eval("xy") == Dihedral(1, 0)
    assert dihedral_eval("xx") == DIHEDRAL_ONE
    assert dihedral_eval("y") == Dihedral(-1, 1)
    assert dihedral_eval("") == DIHEDRAL_ONE
    with pytest.raises(UnknownLetter):
        dihedral_eval("xz")


def _free_reduce(word):
    """Cancel ``xx`` and ``yy`` until nothing is left to cancel."""
    out = []
    for c in word:
        if out and out[-1] == c:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


@given(letters)
def test_dihedral_is_faithful_on_reduced_words(w):
    # distinct reduced words in Z2*Z2 are distinct elements
    r = _free_reduce(w)
    assert dihedral_eval(w) == dihedral_eval(r)
    if r:
        assert dihedral_eval(r) != DIHEDRAL_ONE


@given(letters, letters)
def test_dihedral_homomorphism(v, w):
    assert dihedral_eval(v + w) == dihedral_eval(v) * dihedral_eval(w)


@given(letters, st.randoms(use_true_random=False))
def test_dihedral_bracketing(w, rnd):
    def ev(word):
        if len(word) <= 1:
            return dihedral_eval(word)
        cut = rnd.randrange(1, len(word))
        return ev(word[:cut]) * ev(word[cut:])

    assert ev(w) == dihedral_eval(w)


@given(st.integers(-6, 6), st.integers(0, 1))
def test_dihedral_inverse(t, e):
    g = Dihedral(t, e)
    assert g * g.inverse() == DIHEDRAL_ONE == g.inverse() * g


def test_in_gamma_ell():
    for ell in range(5):
        assert in_gamma_ell(DIHEDRAL_ONE, ell)
    assert in_gamma_ell(Dihedral(2, 0), 2)
    assert not in_gamma_ell(Dihedral(1, 0), 2)
    assert not in_gamma_ell(Dihedral(0, 1), 1)
    assert in_gamma_ell(Dihedral(5, 0), 1)
    assert not in_gamma_ell(Dihedral(3, 0), 0)


# ------------------------------------------------------------ groups

def test_table_group_validation():
    k = klein_four()
    assert k.order == 4 and k.mul(k.parse("a"), k.parse("b")) == k.parse("c")
    with pytest.raises(GroupError):
        Group.from_table(["e", "a"], [[0, 1], [1, 1]])        # not a Latin square
    with pytest.raises(GroupError):
        Group.from_table(["e", "a"], [[0, 1]])
    # Latin square with identity but not associative
    bad = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(GroupError):
        Group.from_table("eabcd", bad)


@pytest.mark.parametrize("grp", [Group.cyclic(1), Group.cyclic(4), Group.cyclic(6), klein_four()])
def test_group_axioms(grp):
    els = grp.elements()
    e = grp.identity
    for a in els:
        assert grp.mul(a, e) == a == grp.mul(e, a)
        assert grp.mul(a, grp.inv(a)) == e
        assert grp.parse(grp.name(a)) == a
        for b in els:
            for c in els:
                assert grp.mul(grp.mul(a, b), c) == grp.mul(a, grp.mul(b, c))


def test_group_json_round_trip():
    for grp in (Group.cyclic(0), Group.cyclic(5), klein_four()):
        assert Group.from_json(grp.to_json()) == grp


def test_infinite_cyclic():
    z = Group.cyclic(0)
    assert not z.is_finite
    assert z.mul(3, -5) == -2 and z.inv(4) == -4
    lam = closure(z, [4, 6])
    assert lam.modulus == 2 and lam.contains(-8) and not lam.contains(3)
    assert lam.coset_rep(7) == 1


def test_subgroups():
    z4 = Group.cyclic(4)
    lam = closure(z4, [2])
    assert lam.elements == frozenset({0, 2})
    assert in_subgroup(0, lam) and not in_subgroup(1, lam)
    assert lam.coset_rep(3) == 1 and lam.coset_rep(2) == 0
    assert subgroup_from_json(z4, {"generators": ["g2"]}) == lam
    assert closure(z4, [1]).order == 4
    with pytest.raises(MixedGroups):
        lam.check_group(Group.cyclic(2))


def test_generating_set_phi_and_words():
    z4 = Group.cyclic(4)
    s = GeneratingSet.build(z4, {"a": ("A", 1), "A": ("a", 3)})
    assert s.phi("") == 0 and s.phi("aa") == 2 and s.phi("aA") == 0
    words = rep_words(s, closure(z4, [2]))
    assert words[0] == () and s.phi(words[2]) == 2 and len(words[2]) == 2
    with pytest.raises(UnknownLetter):
        s.phi("b")
    assert GeneratingSet.from_json(z4, s.to_json()) == s


def test_generating_set_validation():
    z4 = Group.cyclic(4)
    with pytest.raises(GroupError):
        GeneratingSet.build(z4, {"a": ("a", 1)})                 # inverse colour has the wrong value
    with pytest.raises(GroupError):
        GeneratingSet.build(z4, {"b": ("b", 2)})                 # does not generate
    with pytest.raises(GroupError):
        rep_words(GeneratingSet.default(z4), closure(z4, [2]), {2: ("g1",)})


def test_default_generating_sets():
    assert GeneratingSet.default(Group.cyclic(1)).colours == ["a"]
    assert sorted(GeneratingSet.default(Group.cyclic(0)).colours) == ["g-1", "g1"]
    s = GeneratingSet.default(klein_four())
    assert sorted(s.colours) == ["a", "b", "c"]
    assert all(s.inverse[c] == c for c in s.colours)


@given(st.lists(st.sampled_from(["a", "A", "b"]), max_size=10))
def test_rep_word_consistency(word):
    grp = Group.cyclic(6)
    s = GeneratingSet.build(grp, {"a": ("A", 1), "A": ("a", 5), "b": ("b", 3)})
    g = s.phi(word)
    (w,) = s.geodesic_words([g]).values()
    assert s.phi(w) == g and len(w) <= len(word)


def test_geodesic_words_shortlex():
    rng = random.Random(0)
    grp = Group.cyclic(5)
    s = GeneratingSet.default(grp)
    words = s.geodesic_words(grp.elements())
    for g, w in words.items():
        assert s.phi(w) == g
        for _ in range(50):
            n = rng.randrange(0, len(w) + 1)
            other = tuple(rng.choice(s.colours) for _ in range(n))
            if s.phi(other) == g:
                assert (len(w), w) <= (len(other), other)
