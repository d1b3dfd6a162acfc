import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from collapsing.scs import ScsCapExceeded, build_index, scs_filter, scs_solve
from collapsing.words import W, W0, W3, language_l, language_l_dual, regex_parse

pattern_sets = st.lists(st.text(alphabet="ab", min_size=1, max_size=4), min_size=1, max_size=4)


def exhaustive_length(patterns):
    for m in itertools.count(0):
        for p in itertools.product("ab", repeat=m):
            w = "".join(p)
            if all(q in w for q in patterns):
                return m


def test_small_cases():
    sol = scs_solve(["ab", "ba"], enumerate_all=True)
    assert sol.length == 3 and sol.words == ("aba", "bab")
    assert scs_solve(["abba"]).words == ("abba",)
    assert scs_solve(["ab", "abab"]).length == 4


def test_named_pattern_sets():
    assert scs_solve(W).length == 55
    sol = scs_solve(W0, enumerate_all=True)
    assert sol.length == 53 and W3 in sol.words
    assert sol.words == tuple(sorted(sol.words))
    for w in sol.words:
        assert all(p in w for p in W0)
    filtered = scs_filter(sol, [language_l(), language_l_dual()])
    assert not filtered.empty and W3 in filtered.words


def test_filters():
    sol = scs_solve(["ab", "ba"], enumerate_all=True)
    assert scs_filter(sol, [regex_parse("a|b")]).words == sol.words
    assert scs_filter(sol, [regex_parse("aa")]).empty
    assert scs_filter(sol, [lambda w: w.startswith("b")]).words == ("bab",)
    with pytest.raises(ValueError):
        scs_filter(scs_solve(["ab"]), [])


def test_errors_and_cap():
    with pytest.raises(ValueError):
        scs_solve([])
    with pytest.raises(ValueError):
        scs_solve(["a", ""])
    with pytest.raises(ValueError):
        scs_solve(["ac"])
    with pytest.raises(ScsCapExceeded):
        scs_solve(["a", "b"], enumerate_all=True, cap=1)


@settings(max_examples=200)
@given(pattern_sets, st.text(alphabet="ab", max_size=20))
def test_index_scan_matches_naive(patterns, w):
    index = build_index(patterns)
    expected = sum(1 << i for i, p in enumerate(patterns) if p in w)
    assert index.scan(w) == expected


@settings(max_examples=100, deadline=None)
@given(pattern_sets)
def test_optimal_and_sound(patterns):
    sol = scs_solve(patterns, enumerate_all=True)
    assert sol.length == exhaustive_length(patterns)
    for w in sol.words:
        assert all(p in w for p in patterns)
    brute = sorted("".join(p) for p in itertools.product("ab", repeat=sol.length)
                   if all(q in "".join(p) for q in patterns))
    assert list(sol.words) == brute


@settings(max_examples=100, deadline=None)
@given(pattern_sets, st.text(alphabet="ab", min_size=1, max_size=4))
def test_monotone(patterns, extra):
    assert scs_solve(patterns).length <= scs_solve(patterns + [extra]).length
