import itertools
import json

import numpy as np
import pytest

from collapsing import _kernels as K
from collapsing.core import Automaton, Transformation, classify_letter
from collapsing.msa import shortest_compressing_word
from collapsing.sweep import (TAGS, EnumFilter, enumerate_automata, parse_family, tag_maps,
                              verify_characterization, verify_word, verify_words)
from collapsing.words import S32, W3


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_automata(2)) == 16
    perms = EnumFilter(a=frozenset("p"), b=frozenset("p"))
    assert sum(1 for _ in enumerate_automata(4, perms)) == 576
    assert sum(1 for _ in enumerate_automata(4, EnumFilter())) == 65536
    fam = EnumFilter(families=frozenset({("3", "p")}))
    for A in itertools.islice(enumerate_automata(4, fam), 50):
        assert {classify_letter(A.a).tag.value, classify_letter(A.b).tag.value} == {"3", "p"}
    with pytest.raises(ValueError):
        next(enumerate_automata(1))


def test_enumeration_is_deterministic_and_distinct():
    first = [A.to_json() for A in enumerate_automata(3)]
    assert first == [A.to_json() for A in enumerate_automata(3)]
    assert len(set(first)) == 3 ** 6


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_vector_tags_match_classifier(n):
    maps = K.all_maps(n)
    expected = [TAGS.index(classify_letter(Transformation(tuple(m))).tag.value) for m in maps]
    assert tag_maps(maps).tolist() == expected


def test_kernel_lengths_match_msa():
    maps = K.all_maps(3)
    img = K.image_table(maps)
    idx = np.arange(len(maps))
    lengths = K.shortest_lengths(img, idx, idx, 3, 2)
    for i, j in itertools.product(range(0, 27, 2), repeat=2):
        r = shortest_compressing_word(Automaton.from_maps(maps[i], maps[j]), 2)
        assert lengths[i, j] == (r.length or 0)


@pytest.mark.parametrize("text, family", [("(3,p)", ("3", "p")), ("p,3", ("3", "p")), ("3p", ("3", "p")),
                                          ("heavy,1", ("1", "heavy")), ("(4,4)", ("4", "4"))])
def test_parse_family(text, family):
    assert parse_family(text) == family


def test_parse_family_rejects():
    with pytest.raises(ValueError):
        parse_family("(5,p)")


def test_characterization_n4():
    r = verify_characterization(4)
    assert r.ok and r.total == 65536
    assert r.unreached_branches() == []
    assert sum(r.counts.values()) == r.total
    for family in ("(1,1)", "(1,2)", "(2,2)", "(1,4)", "(2,4)"):
        assert r.counts.get(f"{family} Proper", 0) == 0
    data = json.loads(r.to_json())
    assert data["mismatch_count"] == 0 and data["ok"]


def test_reduced_matches_full_n4():
    full = verify_characterization(4)
    reduced = verify_characterization(4, reduced=True)
    assert dict(reduced.counts) == {k: v for k, v in full.counts.items()
                                    if "heavy" not in k and "(p,p)" not in k}
    assert dict(reduced.branches) == {k: v for k, v in full.branches.items() if k not in ("heavy.improper", "pp.nc")}


def test_sharded_matches_single():
    single = verify_characterization(4, ["(3,p)", "(3,4)"])
    sharded = verify_characterization(4, ["(3,p)", "(3,4)"], shards=5)
    threaded = verify_characterization(4, ["(3,p)", "(3,4)"], threads=2)
    for other in (sharded, threaded):
        assert other.counts == single.counts and other.branches == single.branches and other.total == single.total


def test_filtered_deep_run_n6():
    r = verify_characterization(6, ["(3,p)"], reduced=True)
    assert r.ok
    assert r.branches["3p.proper.12345"] > 0 and r.unreached_branches() == []


def test_word_sweeps():
    assert verify_word(S32, 4, 3).mismatch_count == 0
    r = verify_word(S32, 5, 3)
    assert r.mismatch_count > 0
    # the counterexample is one of them: compressible, but not by s32
    ce = Automaton.from_maps([0, 3, 4, 2, 1], [3, 0, 0, 1, 4])
    assert shortest_compressing_word(ce, 3).compressible and len(ce.image(S32)) == 3
    for m in r.mismatches:
        A = Automaton.from_maps(m["a"], m["b"])
        assert shortest_compressing_word(A, 3).compressible and len(A.image(S32)) > 2
    assert verify_word(W3, 5, 3).ok
    assert verify_words((S32,), 4, 3, threads=2).counts == verify_word(S32, 4, 3).counts
    with pytest.raises(ValueError):
        verify_word(S32, 4, 4)
    with pytest.raises(ValueError):
        verify_word("abc", 4, 3)
