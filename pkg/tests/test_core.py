import json

import pytest
from hypothesis import given

from collapsing.core import (Automaton, StateSet, Tag, Transformation, WordError, apply, check_word,
                             classify_automaton, classify_letter, deficiency, dual_automaton, dual_word,
                             missing_set, missing_step, orbit)
from strategies import automata, transformations, words


def test_stateset_algebra():
    s, t = StateSet.of(4, [0, 2]), StateSet.of(4, [2, 3])
    assert list(s | t) == [0, 2, 3]
    assert list(s & t) == [2]
    assert list(s - t) == [0]
    assert len(s) == 2 and 2 in s and 1 not in s
    assert s.complement() == StateSet.of(4, [1, 3])
    assert repr(s) == "{0,2}"
    with pytest.raises(ValueError):
        s | StateSet(5)
    with pytest.raises(ValueError):
        StateSet.of(3, [3])


def test_transformation_validation():
    with pytest.raises(ValueError):
        Transformation((0, 3, 1))
    t = Transformation((2, 2, 2, 3))
    assert t.deficiency == 2
    assert t.kernel_classes() == [(0, 1, 2)]
    assert not t.is_permutation()


def test_orbit_and_apply():
    t = Transformation((1, 2, 0, 3))
    assert apply(t, StateSet.of(4, [0])) == StateSet.of(4, [1])
    assert orbit(t, StateSet.of(4, [0])) == StateSet.of(4, [0, 1, 2])
    assert orbit(t, StateSet.of(4, [3])) == StateSet.of(4, [3])


def test_images_of_words():
    A = Automaton.from_maps([0, 3, 4, 2, 1], [3, 0, 0, 1, 4])
    assert A.image("") == StateSet.full(5)
    assert A.image("b") == StateSet.of(5, [0, 1, 3, 4])
    assert deficiency(A, "b") == 1
    assert missing_set(A, "b") == StateSet.of(5, [2])
    assert A.run(0, "ab") == 3


def test_bad_words():
    with pytest.raises(WordError):
        check_word("abc")
    with pytest.raises(WordError):
        Automaton.from_maps([0], [0]).image("c")


def test_json_round_trip():
    text = '{"n": 3, "a": [1, 1, 2], "b": [2, 0, 1]}'
    assert Automaton.from_json(text).to_json() == text


@pytest.mark.parametrize("text", [
    "[1, 2]", '{"n": 2, "a": [0, 1]}', '{"n": 2, "a": [0, 1], "b": [0, 2]}', '{"n": 2, "a": [0], "b": [0, 1]}',
    '{"n": 2, "a": [0, 1.5], "b": [0, 1]}', '{"n": 0, "a": [], "b": []}', "not json",
])
def test_json_rejects(text):
    with pytest.raises(ValueError):
        Automaton.from_json(text)


@pytest.mark.parametrize("images, tag, witness", [
    ((0, 1, 2, 3), Tag.PERMUTATION, ()),
    ((2, 2, 2, 3), Tag.TYPE1, (0, 1, 2)),
    ((1, 1, 3, 3), Tag.TYPE2, (0, 1, 2, 3)),
    ((1, 1, 2, 3), Tag.TYPE3, (0, 1)),
    ((3, 3, 0, 1), Tag.TYPE4, (0, 1, 2)),
    ((0, 0, 0, 0), Tag.HEAVY, ()),
    ((0, 0, 1, 2), Tag.HEAVY, ()),      # deficiency 1, missing state's image outside the pair
    ((0, 0, 0, 1), Tag.HEAVY, ()),      # triple class, a missing state outside it
    ((1, 1, 0, 0), Tag.HEAVY, ()),      # two pairs with both missing states in one pair
])
def test_classify_letter(images, tag, witness):
    c = classify_letter(Transformation(images))
    assert c.tag is tag
    if witness:
        assert c.witness == witness


def test_type4_witness_maps_z_to_x():
    t = Transformation((3, 3, 0, 1))
    x, y, z = classify_letter(t).witness
    assert t(x) == t(y) and t(z) == x and z not in t.image()


def test_classify_automaton_normalises_order():
    A = Automaton.from_maps([0, 1, 2, 3], [1, 1, 2, 3])
    c = classify_automaton(A)
    assert c.family == ("3", "p") and c.swapped and c.label == "(3,p)"
    c = classify_automaton(dual_automaton(A))
    assert c.family == ("3", "p") and not c.swapped
    heavy = classify_automaton(Automaton.from_maps([0, 0, 0, 0], [1, 1, 2, 3]))
    assert heavy.family == ("3", "heavy")


@given(automata(), words)
def test_missing_step_fold_equals_missing_set(A, w):
    fold = StateSet(A.n)
    for c in w:
        fold = missing_step(A, fold, c)
    assert fold == missing_set(A, w)


@given(automata(), words, words)
def test_deficiency_monotone_under_extension(A, u, v):
    assert deficiency(A, u + v) >= deficiency(A, u)
    assert deficiency(A, v + u) >= deficiency(A, u)


@given(automata(), words)
def test_duality(A, w):
    assert dual_automaton(A).image(dual_word(w)) == A.image(w)
    assert dual_word(dual_word(w)) == w


@given(transformations())
def test_classification_is_relabelling_invariant_in_type(t):
    n = t.n
    perm = list(range(n))[::-1]
    relabelled = Transformation(tuple(perm[t(perm.index(q))] for q in range(n)))
    assert classify_letter(relabelled).tag is classify_letter(t).tag


@given(transformations())
def test_witness_shapes(t):
    c = classify_letter(t)
    if c.tag is Tag.TYPE1:
        u, v, z = c.witness
        assert u < v and t(u) == t(v) == t(z) and {u, v} == set(t.image().complement())
    elif c.tag is Tag.TYPE2:
        x, y, z, w = c.witness
        assert x < z and t(x) == t(y) != t(z) == t(w) and {x, z} == set(t.image().complement())
    elif c.tag is Tag.TYPE3:
        x, y = c.witness
        assert t(x) == t(y) and x not in t.image()
    elif c.tag is Tag.PERMUTATION:
        assert t.deficiency == 0


def test_json_is_json():
    A = Automaton.from_maps([1, 0], [0, 0])
    assert json.loads(A.to_json()) == {"n": 2, "a": [1, 0], "b": [0, 0]}
