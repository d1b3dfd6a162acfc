import itertools

import pytest
from hypothesis import given, settings

from collapsing.characterize import (BRANCHES, L_REPRESENTATIVE, MENU_3P, WrongFamily, _SOLVERS, characterize,
                                     prop_1p, prop_2p, prop_3p, prop_4p, prop_13, prop_23, prop_ij_never)
from collapsing.core import Automaton, LetterClass, classify_automaton, deficiency, dual_automaton, dual_word
from collapsing.msa import Verdict, shortest_compressing_word
from collapsing.words import L_TEXT, expand, language_l, regex_matches
from strategies import automata

NC, IMPROPER, PROPER = Verdict.NOT_COMPRESSIBLE, Verdict.IMPROPER, Verdict.PROPER


def oracle(A):
    return shortest_compressing_word(A, 3).verdict


def compresses(A, w):
    return deficiency(A, w) >= 3


def test_type1_with_permutation():
    a = [2, 2, 2, 3]
    fv = prop_1p(Automaton.from_maps(a, [1, 2, 3, 0]))
    assert fv.verdict is PROPER and fv.word_menu == ("abba",)
    assert prop_1p(Automaton.from_maps(a, [1, 2, 0, 3])).verdict is NC
    assert prop_1p(Automaton.from_maps(a, [3, 1, 2, 0])).verdict is IMPROPER


def test_dual_menu_is_dualised():
    A = dual_automaton(Automaton.from_maps([2, 2, 2, 3], [1, 2, 3, 0]))
    fv = characterize(A)
    assert fv.verdict is PROPER and fv.family.swapped and fv.word_menu == ("baab",)
    assert compresses(A, "baab")


def test_type2_with_permutation():
    a = [1, 1, 3, 3, 4]
    assert prop_2p(Automaton.from_maps(a, [0, 1, 2, 3, 4])).verdict is NC
    A = Automaton.from_maps(a, [1, 4, 2, 3, 0])
    fv = prop_2p(A)
    assert fv.verdict is PROPER is oracle(A)
    assert any(compresses(A, w) for w in fv.word_menu)


def test_type3_with_permutation():
    a = [1, 1, 2, 3, 4]
    assert prop_3p(Automaton.from_maps(a, [0, 2, 1, 3, 4])).verdict is NC       # 1b = 1
    assert prop_3p(Automaton.from_maps(a, [1, 0, 2, 3, 4])).verdict is NC       # b = (1 2)
    A = Automaton.from_maps(a, [2, 3, 4, 1, 0])                                  # b a 5-cycle through 1
    fv = prop_3p(A)
    assert fv.verdict is PROPER and fv.word_menu == MENU_3P
    assert any(compresses(A, expand(w)) for w in ("ab2ab2a", "ab2abab2a", "ab2a2b2a"))


def test_type4_with_permutation():
    a = [3, 3, 0, 1]
    assert prop_4p(Automaton.from_maps(a, [1, 0, 2, 3])).verdict is NC          # b = (1 2)(3)
    A = Automaton.from_maps(a, [0, 1, 3, 2])
    assert prop_4p(A).verdict is oracle(A)


def test_wrong_family_rejected():
    with pytest.raises(WrongFamily):
        prop_1p(Automaton.from_maps([1, 1, 2, 3], [1, 2, 3, 0]))
    with pytest.raises(WrongFamily):
        prop_ij_never(Automaton.from_maps([2, 2, 2, 3], [1, 2, 3, 0]))


def test_never_proper_family_example():
    # a = [1,2][3,4]\1,3 and b = [4,3]\1 with 1b = 4
    A = Automaton.from_maps([1, 1, 3, 3], [3, 1, 2, 2])
    assert classify_automaton(A).family == ("2", "4")
    assert prop_ij_never(A).verdict is NC is oracle(A)


def test_13_and_23_examples():
    # x outside {1,2,3}: ba compresses
    A = Automaton.from_maps([2, 2, 2, 3], [0, 1, 2, 0])
    assert classify_automaton(A).family == ("1", "3")
    assert prop_13(A).verdict is IMPROPER is oracle(A)
    # x = 1 and 3b = 3
    A = Automaton.from_maps([1, 1, 3, 3], [1, 1, 2, 3])
    assert classify_automaton(A).family == ("2", "3")
    assert prop_23(A).verdict is NC is oracle(A)


def test_heavy_and_permutation_pairs():
    assert characterize(Automaton.from_maps([0, 0, 0, 0], [1, 2, 3, 0])).verdict is IMPROPER
    assert characterize(Automaton.from_maps([1, 2, 3, 0], [1, 0, 2, 3])).verdict is NC


def all_automata(n):
    maps = list(itertools.product(range(n), repeat=n))
    for a, b in itertools.product(maps, repeat=2):
        yield Automaton.from_maps(a, b)


def test_language_branch_example():
    found = 0
    for A in all_automata(4):
        fv = characterize(A)
        if fv.matched_branch == "34.proper.c2b.L":
            found += 1
            assert fv.language in (L_TEXT, dual_word(L_TEXT)) and not fv.word_menu
            rep = L_REPRESENTATIVE if fv.language == L_TEXT else dual_word(L_REPRESENTATIVE)
            assert compresses(A, rep)
    assert found
    assert regex_matches(language_l(), L_REPRESENTATIVE)


def test_oracle_equivalence_n4():
    fired = set()
    for A in all_automata(4):
        fv = characterize(A)
        fired.add(fv.matched_branch)
        assert fv.verdict is oracle(A), A.to_json()
        if fv.verdict is PROPER:
            assert any(compresses(A, w) for w in fv.candidate_words()), A.to_json()
        if fv.family.family in (("1", "1"), ("1", "2"), ("2", "2"), ("1", "4"), ("2", "4")):
            assert fv.verdict is not PROPER
    assert fired == {b for b, m in BRANCHES.items() if m <= 4}


@settings(max_examples=300, deadline=None)
@given(automata(min_n=5, max_n=6))
def test_oracle_equivalence_random(A):
    fv = characterize(A)
    assert fv.verdict is oracle(A)
    if fv.verdict is PROPER:
        assert any(compresses(A, w) for w in fv.candidate_words())


@settings(max_examples=300, deadline=None)
@given(automata(min_n=4, max_n=6))
def test_duality(A):
    fv, fd = characterize(A), characterize(dual_automaton(A))
    assert fv.verdict is fd.verdict
    assert fv.family.family == fd.family.family
    # same-type families have self-dual menus, so compare as sets
    assert set(fd.word_menu) == {dual_word(w) for w in fv.word_menu}


def _symmetric(c: LetterClass):
    w = c.witness
    if c.tag.value == "1":
        return LetterClass(c.tag, (w[1], w[0], w[2]))
    if c.tag.value == "2":
        return LetterClass(c.tag, (w[2], w[3], w[0], w[1]))
    return None


def test_witness_symmetry_invariance():
    checked = 0
    for A in all_automata(4):
        c = classify_automaton(A)
        if c.swapped or c.family not in _SOLVERS:
            continue
        for ca, cb in ((_symmetric(c.class_a), c.class_b), (c.class_a, _symmetric(c.class_b))):
            if ca is None or cb is None:
                continue
            original = _SOLVERS[c.family](A, c.class_a, c.class_b)[0]
            assert _SOLVERS[c.family](A, ca, cb)[0] is original, A.to_json()
            checked += 1
    assert checked > 1000
