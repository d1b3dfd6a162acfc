"""Closed-form verdicts for 3-compressibility of two-letter automata.

Each ``prop_*`` function handles one family of automata, named by the types
of its two letters.  States are named after the letter witnesses: for a
letter ``a`` of type 3, ``one, two = witness`` are the states written
``[1,2]\\1`` in the usual notation, and so on.  A verdict says whether the
automaton is not 3-compressible, 3-compressible by a word of length at most
3 (improper), or 3-compressible only by longer words (proper); for proper
automata it also lists short words one of which 3-compresses the automaton.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import (Automaton, AutomatonClass, LetterClass, classify_automaton, dual_automaton,
                   dual_word)
from .msa import Verdict
from .words import L_TEXT, expand

NC, IMPROPER, PROPER = Verdict.NOT_COMPRESSIBLE, Verdict.IMPROPER, Verdict.PROPER


class WrongFamily(ValueError):
    pass


def _menu(*shorthand: str) -> tuple[str, ...]:
    return tuple(expand(s) for s in shorthand)


MENU_1P = _menu("ab2a")
MENU_2P = _menu("ab2a", "ab3a")
MENU_3P = _menu("ababa", "aba2ba", "ab2ab2a", "ab2a2b2a", "ab2abab2a", "abab2aba", "ab3aba", "abab3a",
                "ab3ab3a")
MENU_4P = _menu("a2ba2", "a2b2a2", "a2b3a", "a2baba2", "ab3ab3a")
MENU_13 = _menu("ab2a")
MENU_23 = _menu("ab2a", "ab3a")
MENU_33 = _menu("abab", "ab2ab", "ab3ab", "aba2b", "aba3b", "baba", "ba2ba", "ba3ba", "bab2a", "bab3a")
MENU_34 = _menu("b2ab2", "b2a2b2", "b2a3b2", "b2abab2")
MENU_44 = _menu("b2a2", "b2ab2", "a2b2", "a2ba2")
L_REPRESENTATIVE = expand("b2a3b2")


@dataclass(frozen=True)
class FamilyVerdict:
    family: AutomatonClass
    verdict: Verdict
    word_menu: tuple[str, ...] = ()
    matched_branch: str = ""
    # regex text of a language all of whose words 3-compress the automaton
    language: Optional[str] = None

    def candidate_words(self) -> tuple[str, ...]:
        """Menu words, plus the representative word of the language when one is attached."""
        if self.language is None:
            return self.word_menu
        rep = L_REPRESENTATIVE if self.language == L_TEXT else dual_word(L_REPRESENTATIVE)
        return self.word_menu + (rep,)

    def to_dict(self) -> dict:
        return {"family": self.family.label, "swapped": self.family.swapped, "verdict": self.verdict.value,
                "word_menu": list(self.word_menu), "language": self.language,
                "matched_branch": self.matched_branch}


# Every branch identifier a predicate can report, with the least state count
# (at least 4, as 3-compression needs four states) at which it fires.
BRANCHES: dict[str, int] = {}


def _branches(min_states: int, *names: str) -> None:
    for name in names:
        BRANCHES[name] = min_states


def _orbit(images, states) -> set[int]:
    seen = set(states)
    todo = list(seen)
    while todo:
        q = images[todo.pop()]
        if q not in seen:
            seen.add(q)
            todo.append(q)
    return seen


def _cycle(images, q) -> list[int]:
    c = [q]
    while images[c[-1]] != q:
        c.append(images[c[-1]])
    return c


# --- (i, p) families -------------------------------------------------------------

_branches(4, "1p.improper", "1p.nc", "1p.proper")


def _solve_1p(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three = ca.witness
    b = A.b.images
    low = {one, two, three}
    if not {b[one], b[two]} <= low:
        return IMPROPER, "1p.improper"
    if _orbit(b, (one, two)) <= low:
        return NC, "1p.nc"
    return PROPER, "1p.proper", MENU_1P


_branches(4, "2p.improper.aba", "2p.nc.fixed", "2p.nc.cycles", "2p.nc.swap", "2p.proper.triangle")
_branches(5, "2p.proper.orbit")


def _solve_2p(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three, four = ca.witness
    b = A.b.images
    low = {one, two, three, four}
    img = {b[one], b[three]}
    if not img <= low or img in ({one, two}, {three, four}):
        return IMPROPER, "2p.improper.aba"
    if not _orbit(b, (one, three)) <= low:
        return PROPER, "2p.proper.orbit", MENU_2P
    if img == {one, three}:
        return NC, "2p.nc.fixed"
    if img in ({one, four}, {two, three}):
        if len(_orbit(b, (one,))) == 3 or len(_orbit(b, (three,))) == 3:
            return PROPER, "2p.proper.triangle", MENU_2P
        return NC, "2p.nc.cycles"
    return NC, "2p.nc.swap"


_branches(4, "3p.nc.cond1", "3p.nc.cond2a", "3p.nc.cond3", "3p.proper.123", "3p.proper.132")
_branches(4, "3p.nc.cond2b", "3p.proper.13.short")
_branches(4, "3p.nc.cond2c", "3p.nc.cond4", "3p.proper.134", "3p.proper.1234", "3p.proper.1324",
          "3p.proper.1342")
_branches(5, "3p.proper.13.long", "3p.proper.1345", "3p.proper.12345", "3p.proper.13245", "3p.proper.13425",
          "3p.proper.other5")


def _solve_3p(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two = ca.witness
    a, b = A.a.images, A.b.images
    if b[one] == one or {b[one], b[two]} == {one, two}:
        return NC, "3p.nc.cond1"
    c = _cycle(b, one)
    if len(c) == 2:
        three = c[1]
        if a[three] == three:
            return NC, "3p.nc.cond2a"
        if a[three] == two and b[two] == two and a[two] == three:
            return NC, "3p.nc.cond2b"
        two_b = b[two]
        if a[three] == two_b and two_b not in (two, three) and b[two_b] == two and a[two_b] == three:
            return NC, "3p.nc.cond2c"
        short = b[b[two]] == two
        return PROPER, "3p.proper.13.short" if short else "3p.proper.13.long", MENU_3P
    if len(c) == 3:
        if two in c:
            three = c[2] if c[1] == two else c[1]
            if {a[two], a[three]} == {two, three}:
                return NC, "3p.nc.cond3"
            return PROPER, "3p.proper.123" if c[1] == two else "3p.proper.132", MENU_3P
        return PROPER, "3p.proper.134", MENU_3P
    if len(c) == 4:
        if c[2] == two:
            three, four = c[1], c[3]
            if {a[three], a[four]} == {three, four}:
                return NC, "3p.nc.cond4"
            return PROPER, "3p.proper.1324", MENU_3P
        names = {1: "3p.proper.1234", 3: "3p.proper.1342"}
        pos = c.index(two) if two in c else None
        return PROPER, names.get(pos, "3p.proper.1345"), MENU_3P
    pos = c.index(two) if two in c else None
    names = {1: "3p.proper.12345", 2: "3p.proper.13245", 3: "3p.proper.13425"}
    return PROPER, names.get(pos, "3p.proper.other5"), MENU_3P


_branches(4, "4p.nc.cond1", "4p.nc.cond2", "4p.nc.cond3", "4p.proper.small")
_branches(4, "4p.nc.cond4", "4p.proper.fix3", "4p.proper.orb3.23", "4p.proper.orb3.34", "4p.proper.3b=1",
          "4p.proper.3b=2", "4p.proper.3b=4")


def _solve_4p(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three = ca.witness
    a, b = A.a.images, A.b.images
    low = {one, two, three}
    if {b[one], b[three]} == {one, three}:
        return NC, "4p.nc.cond1"
    if b[one] == two and b[two] == one and b[three] == three:
        return NC, "4p.nc.cond2"
    if ((b[one] == one and b[two] == three and b[three] == two)
            or (b[one] == two and b[two] == three and b[three] == one)
            or (b[one] == three and b[three] == two and b[two] == one)):
        if a[two] == two:
            return NC, "4p.nc.cond3"
    four = None
    if b[three] not in low and b[b[three]] == three and (
            (b[one] == one and b[two] == two) or (b[one] == two and b[two] == one)):
        four = b[three]                 # (1)(2)(34) or (12)(34)
    elif b[one] not in low and b[b[one]] == one and b[two] == three and b[three] == two:
        four = b[one]                   # (14)(23)
    elif b[one] not in low and b[b[one]] == two and b[two] == three and b[three] == one:
        four = b[one]                   # (1423)
    elif b[one] == three and b[three] == two and b[two] not in low and b[b[two]] == one:
        four = b[two]                   # (1324)
    if four is not None and a[four] == two:
        return NC, "4p.nc.cond4"
    if _orbit(b, (one, three)) <= low:
        branch = "4p.proper.small"
    else:
        orb3 = _orbit(b, (three,))
        if len(orb3) == 1:
            branch = "4p.proper.fix3"
        elif orb3 == {two, three}:
            branch = "4p.proper.orb3.23"
        elif len(orb3) == 2:
            branch = "4p.proper.orb3.34"
        else:
            branch = {one: "4p.proper.3b=1", two: "4p.proper.3b=2"}.get(b[three], "4p.proper.3b=4")
    return PROPER, branch, MENU_4P


# --- families without permutations ----------------------------------------------

_branches(4, "11.nc", "11.improper")
_branches(4, "12.nc", "12.improper", "22.nc", "22.improper", "14.improper.outside", "14.nc", "14.nc.one3",
          "14.improper.one3", "24.improper.outside", "24.improper.kernel", "24.nc.13", "24.nc.14.i",
          "24.improper.14.ii", "24.nc.14.ii", "24.nc.23.i", "24.improper.23.ii", "24.nc.23.ii",
          "24.improper.24.i", "24.nc.24.i", "24.improper.24.ii")


def _solve_11(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three = ca.witness
    x, y, z = cb.witness
    if {one, two} <= {x, y, z} and {x, y} <= {one, two, three}:
        return NC, "11.nc"
    return IMPROPER, "11.improper"


def _solve_12(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three = ca.witness
    x, y, z, v = cb.witness
    if {one, two} in ({x, z}, {x, v}, {y, z}, {y, v}) and {x, z} <= {one, two, three}:
        return NC, "12.nc"
    return IMPROPER, "12.improper"


def _solve_22(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three, four = ca.witness
    x, y, z, v = cb.witness
    if {one, three} in ({x, z}, {x, v}, {y, z}, {y, v}) and \
            {x, z} in ({one, three}, {one, four}, {two, three}, {two, four}):
        return NC, "22.nc"
    return IMPROPER, "22.improper"


def _solve_14(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three = ca.witness
    x, y, z = cb.witness
    b = A.b.images
    if not {x, z} <= {one, two, three}:
        return IMPROPER, "14.improper.outside"
    if {x, z} == {one, two}:
        return NC, "14.nc"
    # {x, z} is {1,3} or {2,3}: with the kernel inside {1,2,3} the missing
    # sets cycle through {1,2}, {z} and {x,z} unless xb escapes
    if y in (one, two, three) and (x == three or b[x] == y):
        return NC, "14.nc.one3"
    return IMPROPER, "14.improper.one3"


def _solve_24(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three, four = ca.witness
    x, y, z = cb.witness
    b = A.b.images
    if {x, z} not in ({one, three}, {one, four}, {two, three}, {two, four}):
        return IMPROPER, "24.improper.outside"
    if not {x, y} & {one, three}:
        return IMPROPER, "24.improper.kernel"
    if {x, z} == {one, three}:
        return NC, "24.nc.13"
    # the pair {2,3} case is the pair {1,4} case with 1<->3 and 2<->4 exchanged
    for p1, p2, p3, p4, tag in ((one, two, three, four, "14"), (three, four, one, two, "23")):
        if {x, z} == {p1, p4}:
            if x == p4:
                return NC, f"24.nc.{tag}.i"
            if y != p2 or b[p3] != p2:
                return IMPROPER, f"24.improper.{tag}.ii"
            return NC, f"24.nc.{tag}.ii"
    # {x, z} == {2, 4}, y in {1, 3}
    q = three if y == one else one
    if (x == two and q == three) or (x == four and q == one):
        if b[q] != y:
            return IMPROPER, "24.improper.24.i"
        return NC, "24.nc.24.i"
    return IMPROPER, "24.improper.24.ii"


_branches(4, "13.improper.ba", "13.improper.ab", "13.improper.aba", "13.nc", "13.proper")


def _solve_13(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three = ca.witness
    x, y = cb.witness
    b = A.b.images
    low = {one, two, three}
    if x not in low:
        return IMPROPER, "13.improper.ba"
    if not {one, two} & {x, y}:
        return IMPROPER, "13.improper.ab"
    qs = [q for q in (one, two) if q != (x if x in (one, two) else y)]
    if any(b[q] not in low for q in qs):
        return IMPROPER, "13.improper.aba"
    if any(_orbit(b, (q,)) <= low for q in qs):
        return NC, "13.nc"
    return PROPER, "13.proper", MENU_13


_branches(5, "23.improper.ba")
_branches(4, "23.nc.x1.fixed", "23.improper.x1.aba", "23.nc.x1.orbit", "23.proper.x1",
          "23.improper.x2.ab", "23.nc.x2.y1.fixed", "23.improper.x2.y1.aba", "23.nc.x2.y1", "23.proper.x2.y1", "23.improper.x2.y3", "23.proper.x2.y3",
          "23.nc.x3.fixed", "23.improper.x3.aba", "23.nc.x3.orbit", "23.proper.x3",
          "23.improper.x4.ab", "23.nc.x4.y3.fixed", "23.improper.x4.y3.aba", "23.nc.x4.y3", "23.proper.x4.y3", "23.improper.x4.y1", "23.proper.x4.y1")


def _solve_23(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three, four = ca.witness
    x, y = cb.witness
    b = A.b.images
    if x not in (one, two, three, four):
        return IMPROPER, "23.improper.ba"
    # x = 3 and x = 4 mirror x = 1 and x = 2 under 1<->3, 2<->4
    if x in (one, two):
        p1, _, p3, p4, tx = one, two, three, four, {one: "x1", two: "x2"}[x]
    else:
        p1, _, p3, p4, tx = three, four, one, two, {three: "x3", four: "x4"}[x]
    if x == p1:
        if b[p3] != p4:
            return (NC, f"23.nc.{tx}.fixed") if b[p3] == p3 else (IMPROPER, f"23.improper.{tx}.aba")
        if _orbit(b, (p3,)) <= {p3, p4}:
            return NC, f"23.nc.{tx}.orbit"
        return PROPER, f"23.proper.{tx}", MENU_23
    ty = {p1: "y1", p3: "y3"}.get(y) if tx == "x2" else {p1: "y3", p3: "y1"}.get(y)
    if y not in (p1, p3):
        return IMPROPER, f"23.improper.{tx}.ab"
    if y == p1:
        if b[p3] != p4:
            return (NC, f"23.nc.{tx}.{ty}.fixed") if b[p3] == p3 else (IMPROPER, f"23.improper.{tx}.{ty}.aba")
        if b[p4] == p3:
            return NC, f"23.nc.{tx}.{ty}"
        return PROPER, f"23.proper.{tx}.{ty}", MENU_23
    if b[p1] not in (p3, p4):
        return IMPROPER, f"23.improper.{tx}.{ty}"
    return PROPER, f"23.proper.{tx}.{ty}", MENU_23


_branches(4, "33.nc.precheck", "33.nc.c1", "33.proper.c1", "33.nc.c2", "33.proper.c2", "33.improper.1b",
          "33.improper.xa", "33.nc.c3", "33.proper.c3")


def _solve_33(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two = ca.witness
    x, y = cb.witness
    a, b = A.a.images, A.b.images
    if x == one or {x, y} == {one, two}:
        return NC, "33.nc.precheck"
    if x == two:
        pair = {two, y}
        q = b[one]
        if {a[q], a[b[q]], a[b[b[q]]]} <= pair and _orbit(a, (a[q],)) <= pair:
            return NC, "33.nc.c1"
        return PROPER, "33.proper.c1", MENU_33
    if y == one:
        pair = {one, two}
        q = a[x]
        if {b[q], b[a[q]], b[a[a[q]]]} <= pair and _orbit(b, (b[q],)) <= pair:
            return NC, "33.nc.c2"
        return PROPER, "33.proper.c2", MENU_33
    if b[one] not in (one, two):
        return IMPROPER, "33.improper.1b"
    if a[x] not in (x, y):
        return IMPROPER, "33.improper.xa"
    if _orbit(b, (one,)) <= {one, two} and _orbit(a, (x,)) <= {x, y}:
        return NC, "33.nc.c3"
    return PROPER, "33.proper.c3", MENU_33


_branches(4, "34.improper.precheck", "34.nc.c1", "34.proper.c1", "34.nc.c2a", "34.proper.c2a", "34.nc.c2b",
          "34.proper.c2b", "34.proper.c2b.L", "34.nc.c2c", "34.proper.c2c", "34.nc.c3a", "34.proper.c3a",
          "34.nc.c3b", "34.proper.c3b")


def _solve_34(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two = ca.witness
    x, y, z = cb.witness
    a, b = A.a.images, A.b.images
    kernel = {x, y}
    if (not {one, two} & {x, z}
            or not (z in (one, two) or {one, a[z]} & kernel)
            or not {one, b[one]} & kernel
            or not (one in kernel or {z, b[one]} & {one, two})):
        return IMPROPER, "34.improper.precheck"
    if z == one:
        if _orbit(a, (x,)) <= kernel:
            return NC, "34.nc.c1"
        return PROPER, "34.proper.c1", MENU_34
    if z == two:
        if x == one:
            if _orbit(a, (two,)) <= {two, y} and b[a[two]] in (one, y):
                return NC, "34.nc.c2a"
            return PROPER, "34.proper.c2a", MENU_34
        if y == one:
            if {a[two], a[x]} == {two, x} and {b[a[two]], b[a[x]]} == {one, x}:
                return NC, "34.nc.c2b"
            if b[a[two]] == one and b[a[x]] == x:
                return PROPER, "34.proper.c2b.L", (), L_TEXT
            return PROPER, "34.proper.c2b", MENU_34
        # the prechecks force 1b = y here
        if {a[x], a[y]} == kernel:
            return NC, "34.nc.c2c"
        return PROPER, "34.proper.c2c", MENU_34
    if kernel == {one, two}:
        if len(_orbit(a, (z,))) <= 2 and b[a[z]] in (one, two):
            return NC, "34.nc.c3b"
        return PROPER, "34.proper.c3b", MENU_34
    # the prechecks force x = 1, y != 2 here
    if a[z] == z:
        return NC, "34.nc.c3a"
    return PROPER, "34.proper.c3a", MENU_34


_branches(4, "44.improper.precheck", "44.nc.c1", "44.proper.c1", "44.proper.c2", "44.nc.c3",
          "44.proper.c3", "44.nc.c4", "44.proper.c4")


def _solve_44(A: Automaton, ca: LetterClass, cb: LetterClass):
    one, two, three = ca.witness
    x, y, z = cb.witness
    a, b = A.a.images, A.b.images
    kernel = {x, y}
    if (not {one, two} & {x, z}
            or not (z in (one, two) or {three, a[z]} & kernel)
            or not {three, b[three]} & kernel
            or not {one, three} & kernel
            or not (three in kernel or {z, b[three]} & {one, two})
            or not {z, a[z]} & {one, two}):
        return IMPROPER, "44.improper.precheck"
    if z == one:
        if y == three and (a[x] != two or b[two] != three):
            return PROPER, "44.proper.c1", MENU_44
        return NC, "44.nc.c1"
    if z == two:
        if three not in kernel:
            # the prechecks already force 1 and 3b into the kernel
            return PROPER, "44.proper.c2", MENU_44
        (q,) = kernel - {three}
        if a[q] != two or b[one] != y:
            return PROPER, "44.proper.c3", MENU_44
        return NC, "44.nc.c3"
    if x in (one, two) and a[z] in (one, two):
        if y == three:
            return PROPER, "44.proper.c4", MENU_44
        return NC, "44.nc.c4"
    return IMPROPER, "44.improper.precheck"


# --- dispatch -------------------------------------------------------------------

_SOLVERS: dict[tuple[str, str], Callable] = {
    ("1", "p"): _solve_1p, ("2", "p"): _solve_2p, ("3", "p"): _solve_3p, ("4", "p"): _solve_4p,
    ("1", "1"): _solve_11, ("1", "2"): _solve_12, ("2", "2"): _solve_22, ("1", "4"): _solve_14,
    ("2", "4"): _solve_24, ("1", "3"): _solve_13, ("2", "3"): _solve_23, ("3", "3"): _solve_33,
    ("3", "4"): _solve_34, ("4", "4"): _solve_44,
}

NEVER_PROPER = (("1", "1"), ("1", "2"), ("2", "2"), ("1", "4"), ("2", "4"))

_branches(4, "pp.nc", "heavy.improper")


def _verdict(A: Automaton, cls: AutomatonClass) -> FamilyVerdict:
    if "heavy" in cls.family:
        return FamilyVerdict(cls, IMPROPER, matched_branch="heavy.improper")
    if cls.family == ("p", "p"):
        return FamilyVerdict(cls, NC, matched_branch="pp.nc")
    B, ca, cb = (dual_automaton(A), cls.class_b, cls.class_a) if cls.swapped else (A, cls.class_a, cls.class_b)
    verdict, branch, *rest = _SOLVERS[cls.family](B, ca, cb)
    menu = rest[0] if rest else ()
    language = rest[1] if len(rest) > 1 else None
    if cls.swapped:
        menu = tuple(dual_word(w) for w in menu)
        language = dual_word(language) if language else None
    return FamilyVerdict(cls, verdict, menu, branch, language)


def _family_predicate(*families: tuple[str, str]):
    def predicate(A: Automaton) -> FamilyVerdict:
        cls = classify_automaton(A)
        if cls.family not in families:
            raise WrongFamily(f"automaton is a {cls.label}-automaton, expected one of {families}")
        return _verdict(A, cls)
    return predicate


prop_1p = _family_predicate(("1", "p"))
prop_2p = _family_predicate(("2", "p"))
prop_3p = _family_predicate(("3", "p"))
prop_4p = _family_predicate(("4", "p"))
prop_ij_never = _family_predicate(*NEVER_PROPER)
prop_13 = _family_predicate(("1", "3"))
prop_23 = _family_predicate(("2", "3"))
prop_33 = _family_predicate(("3", "3"))
prop_34 = _family_predicate(("3", "4"))
prop_44 = _family_predicate(("4", "4"))


def characterize(A: Automaton) -> FamilyVerdict:
    """Verdict for any two-letter automaton, dispatched on its family."""
    return _verdict(A, classify_automaton(A))


def characterize_classified(A: Automaton, cls: AutomatonClass) -> FamilyVerdict:
    return _verdict(A, cls)

