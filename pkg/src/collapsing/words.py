"""Named words, factor tests, a small regex engine and the 3-collapsing certificate."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet

from .core import check_word, dual_word


def expand(text: str) -> str:
    """Expand exponent shorthand such as ``"ab2a"`` or ``"b(ab)2"`` into a plain word."""
    out: list[str] = []
    i = 0
    while i < len(text):
        c = text[i]
        if c == "(":
            depth, j = 1, i + 1
            while depth:
                depth += {"(": 1, ")": -1}.get(text[j], 0)
                j += 1
            unit, i = expand(text[i + 1:j - 1]), j
        elif c in "ab":
            unit, i = c, i + 1
        else:
            raise ValueError(f"unexpected {c!r} at {i} in {text!r}")
        j = i
        while j < len(text) and text[j].isdigit():
            j += 1
        out.append(unit * (int(text[i:j]) if j > i else 1))
        i = j
    return "".join(out)


# shortest 3-synchronizing word and the 53-letter 3-collapsing word
S32 = expand("ab2aba3b2a2babab2a2b3aba2ba2b2a")
W3 = expand("b2a3ba3b3aba2baba2ba2b2a2b2ab2abab2aba3bab3ab3a")

U = expand("b2aba3bab2")
V = expand("a2b3aba2")

_W_SHORTHAND = [
    "ab2ab2a", "ab2a2b2a", "abab2aba", "ab3aba", "abab3a", "ab3ab3a", "ba2baba2b", "a2b3a", "ba2ba2b",
    "ba2b2a2b", "baba2bab", "ba3bab", "baba3b", "ba3ba3b", "ab2abab2a", "b2a3b", "a2b3a2", "b2a3b2",
]
W: tuple[str, ...] = tuple(expand(s) for s in _W_SHORTHAND)
W_SPECIAL = (expand("a2b3a2"), expand("b2a3b2"))
W0: tuple[str, ...] = tuple(w for w in W if w not in W_SPECIAL)

assert len(S32) == 33 and len(W3) == 53 and len(W) == 18 and len(W0) == 16


def contains_factor(w: str, f: str) -> bool:
    return f in w


def factors(w: str, length: int) -> set[str]:
    return {w[i:i + length] for i in range(len(w) - length + 1)}


def is_k_full(w: str, k: int) -> bool:
    return len(factors(w, k)) == 2 ** k


# --- regular expressions ----------------------------------------------------


class RegexSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Lit:
    c: str


@dataclass(frozen=True)
class Cat:
    left: object
    right: object


@dataclass(frozen=True)
class Alt:
    left: object
    right: object


@dataclass(frozen=True)
class Star:
    inner: object


@dataclass(frozen=True)
class Plus:
    inner: object


class _Parser:
    # alt := cat ('|' cat)* ; cat := post+ ; post := atom ('*' | '+')* ; atom := a | b | '(' alt ')'
    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else None

    def parse(self):
        if not self.text:
            raise RegexSyntaxError("empty expression", 0)
        node = self.alt()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.pos)
        return node

    def alt(self):
        node = self.cat()
        while self.peek() == "|":
            self.pos += 1
            node = Alt(node, self.cat())
        return node

    def cat(self):
        if self.peek() not in ("a", "b", "("):
            raise RegexSyntaxError(f"expected a, b or '(' but got {self.peek()!r}", self.pos)
        node = self.post()
        while self.peek() in ("a", "b", "("):
            node = Cat(node, self.post())
        return node

    def post(self):
        node = self.atom()
        while self.peek() in ("*", "+"):
            node = Star(node) if self.peek() == "*" else Plus(node)
            self.pos += 1
        return node

    def atom(self):
        c = self.peek()
        if c in ("a", "b"):
            self.pos += 1
            return Lit(c)
        if c == "(":
            self.pos += 1
            node = self.alt()
            if self.peek() != ")":
                raise RegexSyntaxError("missing ')'", self.pos)
            self.pos += 1
            return node
        raise RegexSyntaxError(f"unexpected {c!r}", self.pos)


@dataclass(frozen=True)
class Regex:
    """Parsed expression with its position (Glushkov) automaton.

    State 0 is initial, state ``p >= 1`` means "just read position p".
    """

    text: str
    ast: object
    letters: tuple[str, ...] = field(repr=False)
    first: FrozenSet[int] = field(repr=False)
    follow: tuple[FrozenSet[int], ...] = field(repr=False)
    accepting: FrozenSet[int] = field(repr=False)

    def step(self, states: FrozenSet[int], c: str) -> FrozenSet[int]:
        nxt = set()
        for s in states:
            for p in (self.first if s == 0 else self.follow[s]):
                if self.letters[p] == c:
                    nxt.add(p)
        return frozenset(nxt)


def regex_parse(text: str) -> Regex:
    ast = _Parser(text).parse()
    letters: list[str] = [""]
    follow: list[set[int]] = [set()]

    def walk(node):
        # returns (nullable, first, last)
        if isinstance(node, Lit):
            letters.append(node.c)
            follow.append(set())
            p = len(letters) - 1
            return False, {p}, {p}
        if isinstance(node, Cat):
            n1, f1, l1 = walk(node.left)
            n2, f2, l2 = walk(node.right)
            for p in l1:
                follow[p] |= f2
            return n1 and n2, f1 | f2 if n1 else f1, l1 | l2 if n2 else l2
        if isinstance(node, Alt):
            n1, f1, l1 = walk(node.left)
            n2, f2, l2 = walk(node.right)
            return n1 or n2, f1 | f2, l1 | l2
        nl, f, l = walk(node.inner)
        for p in l:
            follow[p] |= f
        return (True if isinstance(node, Star) else nl), f, l

    nullable, first, last = walk(ast)
    accepting = set(last) | ({0} if nullable else set())
    return Regex(text, ast, tuple(letters), frozenset(first), tuple(frozenset(s) for s in follow),
                 frozenset(accepting))


def regex_matches(r: Regex, w: str) -> bool:
    states = frozenset({0})
    for c in w:
        states = r.step(states, c)
        if not states:
            return False
    return bool(states & r.accepting)


def regex_factor(r: Regex, w: str) -> bool:
    """True when some factor of ``w`` (possibly empty) belongs to the language of ``r``."""
    for i in range(len(w) + 1):
        states = frozenset({0})
        if states & r.accepting:
            return True
        for c in w[i:]:
            states = r.step(states, c)
            if not states:
                break
            if states & r.accepting:
                return True
    return False


def enumerate_language(node, max_len: int) -> set[str]:
    """All words of length at most ``max_len`` generated by the expression tree."""
    if isinstance(node, Regex):
        node = node.ast
    if isinstance(node, Lit):
        return {node.c} if max_len >= 1 else set()
    if isinstance(node, Alt):
        return enumerate_language(node.left, max_len) | enumerate_language(node.right, max_len)
    if isinstance(node, Cat):
        left = enumerate_language(node.left, max_len)
        right = enumerate_language(node.right, max_len)
        return {u + v for u in left for v in right if len(u) + len(v) <= max_len}
    inner = {u for u in enumerate_language(node.inner, max_len) if u}
    result = set(inner)
    frontier = set(inner)
    while frontier:
        frontier = {u + v for u in frontier for v in inner if len(u) + len(v) <= max_len} - result
        result |= frontier
    if isinstance(node, Star):
        result.add("")
    return result


# language of words 3-compressing the special (3,4) subcase, and its dual
L_TEXT = "b(a+b)*(ba)+a(ba)*ab(b|abb)"
L_DUAL_TEXT = dual_word(L_TEXT)


@lru_cache(maxsize=None)
def language_l() -> Regex:
    return regex_parse(L_TEXT)


@lru_cache(maxsize=None)
def language_l_dual() -> Regex:
    return regex_parse(L_DUAL_TEXT)


# --- certificate -------------------------------------------------------------


@dataclass(frozen=True)
class CertificateReport:
    word: str
    is_certified: bool
    missing_requirements: tuple[str, ...]

    def to_dict(self) -> dict:
        return {"word": self.word, "length": len(self.word), "is_certified": self.is_certified,
                "missing_requirements": list(self.missing_requirements)}


def certificate_3_collapsing(w: str) -> CertificateReport:
    """Sufficient check that ``w`` is 3-collapsing.

    A failed check does not show that ``w`` is not 3-collapsing.
    """
    check_word(w)
    missing = []
    for cube in ("".join(t) for t in itertools.product("ab", repeat=3)):
        if cube not in w:
            missing.append(f"3-full: factor {cube}")
    for f in W0:
        if f not in w:
            missing.append(f"factor {f}")
    a2b3a2, b2a3b2 = W_SPECIAL
    if a2b3a2 not in w and not regex_factor(language_l_dual(), w):
        missing.append(f"factor {a2b3a2} or a factor in dual L")
    if b2a3b2 not in w and not regex_factor(language_l(), w):
        missing.append(f"factor {b2a3b2} or a factor in L")
    return CertificateReport(w, not missing, tuple(missing))


__all__ = [
    "S32", "W3", "U", "V", "W", "W0", "W_SPECIAL", "expand", "contains_factor", "is_k_full",
    "Regex", "RegexSyntaxError", "regex_parse", "regex_matches", "regex_factor", "enumerate_language",
    "L_TEXT", "L_DUAL_TEXT", "language_l", "language_l_dual", "CertificateReport",
    "certificate_3_collapsing", "dual_word",
]
