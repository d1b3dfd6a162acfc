"""Transformations, two-letter automata, missing sets and letter classification.

States are the integers ``0..n-1``.  Words are plain strings over ``"ab"``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

ALPHABET = "ab"
_DUAL = str.maketrans("ab", "ba")


class WordError(ValueError):
    pass


def check_word(w: str) -> str:
    bad = set(w) - set(ALPHABET)
    if bad:
        raise WordError(f"word {w!r} has letters outside {{a,b}}: {sorted(bad)}")
    return w


def dual_word(w: str) -> str:
    """Swap the letters a and b."""
    return w.translate(_DUAL)


@dataclass(frozen=True)
class StateSet:
    """Subset of ``0..n-1`` stored as a bitmask."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits >> self.n:
            raise ValueError(f"members outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> StateSet:
        bits = 0
        for q in members:
            if not 0 <= q < n:
                raise ValueError(f"state {q} outside 0..{n - 1}")
            bits |= 1 << q
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> StateSet:
        return cls(n, (1 << n) - 1)

    def __contains__(self, q: int) -> bool:
        return bool(self.bits >> q & 1)

    def __iter__(self) -> Iterator[int]:
        bits, q = self.bits, 0
        while bits:
            if bits & 1:
                yield q
            bits >>= 1
            q += 1

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def _same(self, other: StateSet) -> None:
        if other.n != self.n:
            raise ValueError(f"universe mismatch: {self.n} vs {other.n}")

    def __or__(self, other: StateSet) -> StateSet:
        self._same(other)
        return StateSet(self.n, self.bits | other.bits)

    def __and__(self, other: StateSet) -> StateSet:
        self._same(other)
        return StateSet(self.n, self.bits & other.bits)

    def __sub__(self, other: StateSet) -> StateSet:
        self._same(other)
        return StateSet(self.n, self.bits & ~other.bits)

    def __le__(self, other: StateSet) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def complement(self) -> StateSet:
        return StateSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def __repr__(self) -> str:
        return "{" + ",".join(map(str, self)) + "}"


@dataclass(frozen=True)
class Transformation:
    """A total map on ``0..n-1``; ``images[q]`` is the image of ``q``."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(q) for q in self.images))
        n = len(self.images)
        if any(not 0 <= q < n for q in self.images):
            raise ValueError(f"images {self.images} not inside 0..{n - 1}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, q: int) -> int:
        return self.images[q]

    def image(self) -> StateSet:
        return StateSet.of(self.n, self.images)

    @property
    def deficiency(self) -> int:
        return self.n - len(set(self.images))

    def kernel_classes(self) -> list[tuple[int, ...]]:
        """Non-singleton classes of the kernel, each sorted, in order of first member."""
        groups: dict[int, list[int]] = {}
        for q, v in enumerate(self.images):
            groups.setdefault(v, []).append(q)
        return sorted(tuple(g) for g in groups.values() if len(g) > 1)

    def is_permutation(self) -> bool:
        return len(set(self.images)) == self.n


def apply(t: Transformation, s: StateSet) -> StateSet:
    if s.n != t.n:
        raise ValueError(f"universe mismatch: transformation on {t.n} states, set over {s.n}")
    bits = 0
    for q in s:
        bits |= 1 << t.images[q]
    return StateSet(t.n, bits)


def orbit(t: Transformation, s: StateSet) -> StateSet:
    """Smallest superset of ``s`` closed under ``t``."""
    if s.n != t.n:
        raise ValueError(f"universe mismatch: transformation on {t.n} states, set over {s.n}")
    result = s
    while True:
        grown = result | apply(t, result)
        if grown == result:
            return result
        result = grown


@dataclass(frozen=True)
class Automaton:
    """Deterministic complete semiautomaton over ``{a, b}``."""

    a: Transformation
    b: Transformation

    def __post_init__(self):
        if self.a.n != self.b.n:
            raise ValueError(f"letters act on different state counts: {self.a.n} vs {self.b.n}")

    @classmethod
    def from_maps(cls, a: Sequence[int], b: Sequence[int]) -> Automaton:
        return cls(Transformation(tuple(a)), Transformation(tuple(b)))

    @property
    def n(self) -> int:
        return self.a.n

    def letter(self, c: str) -> Transformation:
        if c == "a":
            return self.a
        if c == "b":
            return self.b
        raise WordError(f"letter {c!r} not in {{a,b}}")

    def run(self, q: int, w: str) -> int:
        """Image ``q·w`` of a single state."""
        ia, ib = self.a.images, self.b.images
        for c in w:
            q = ia[q] if c == "a" else ib[q]
        return q

    def image(self, w: str, s: StateSet | None = None) -> StateSet:
        """``s·w``; ``s`` defaults to the whole state set."""
        s = StateSet.full(self.n) if s is None else s
        for c in w:
            s = apply(self.letter(c), s)
        return s

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "a": list(self.a.images), "b": list(self.b.images)})

    @classmethod
    def from_json(cls, text: str) -> Automaton:
        data = json.loads(text)
        if not isinstance(data, dict) or set(data) != {"n", "a", "b"}:
            raise ValueError('automaton JSON needs exactly the keys "n", "a", "b"')
        n = data["n"]
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"bad state count {n!r}")
        for key in "ab":
            if not isinstance(data[key], list) or len(data[key]) != n:
                raise ValueError(f'"{key}" must be a list of {n} images')
            if not all(isinstance(q, int) and not isinstance(q, bool) for q in data[key]):
                raise ValueError(f'"{key}" must contain integers')
        return cls.from_maps(data["a"], data["b"])


def dual_automaton(A: Automaton) -> Automaton:
    return Automaton(A.b, A.a)


def deficiency(A: Automaton, w: str) -> int:
    return A.n - len(A.image(w))


def missing_set(A: Automaton, w: str) -> StateSet:
    return A.image(w).complement()


def missing_step(A: Automaton, q1: StateSet, letter: str) -> StateSet:
    """Missing set after reading ``letter`` having already missed ``q1``.

    Equals ``M(letter)`` together with the images of members of ``q1`` not
    shared with any state outside ``q1``.
    """
    if q1.n != A.n:
        raise ValueError(f"universe mismatch: automaton on {A.n} states, set over {q1.n}")
    t = A.letter(letter)
    outside = apply(t, q1.complement())
    missed = t.image().complement()
    for q in q1:
        if t.images[q] not in outside:
            missed = missed | StateSet(A.n, 1 << t.images[q])
    return missed


# --- letter classification ------------------------------------------------


class Tag(str, Enum):
    PERMUTATION = "p"
    TYPE1 = "1"
    TYPE2 = "2"
    TYPE3 = "3"
    TYPE4 = "4"
    HEAVY = "heavy"


@dataclass(frozen=True)
class LetterClass:
    """Type of a letter plus its distinguished states.

    witness layout:
      TYPE1  (x, y, z)          for [x,y,z]\\x,y with x < y
      TYPE2  (x, y, z, v)       for [x,y][z,v]\\x,z with x < z
      TYPE3  (x, y)             for [x,y]\\x
      TYPE4  (x, y, z)          for [x,y]\\z with z·t = x
    """

    tag: Tag
    witness: tuple[int, ...] = ()


@lru_cache(maxsize=None)
def classify_letter(t: Transformation) -> LetterClass:
    df = t.deficiency
    if df == 0:
        return LetterClass(Tag.PERMUTATION)
    if df > 2:
        return LetterClass(Tag.HEAVY)
    missing = sorted(t.image().complement())
    classes = t.kernel_classes()
    if df == 1:
        (pair,) = classes
        (z,) = missing
        if z in pair:
            x = z
            y = pair[0] if pair[1] == z else pair[1]
            return LetterClass(Tag.TYPE3, (x, y))
        if t.images[z] in pair:
            x = t.images[z]
            y = pair[0] if pair[1] == x else pair[1]
            return LetterClass(Tag.TYPE4, (x, y, z))
        return LetterClass(Tag.HEAVY)
    # deficiency 2: one class of three, or two classes of two
    u, v = missing
    if len(classes) == 1:
        (triple,) = classes
        if u in triple and v in triple:
            (z,) = [q for q in triple if q not in (u, v)]
            return LetterClass(Tag.TYPE1, (u, v, z))
        return LetterClass(Tag.HEAVY)
    p1, p2 = classes
    if (u in p1 and v in p2) or (u in p2 and v in p1):
        first, second = (p1, p2) if u in p1 else (p2, p1)
        x, z = u, v
        y = first[0] if first[1] == x else first[1]
        w = second[0] if second[1] == z else second[1]
        return LetterClass(Tag.TYPE2, (x, y, z, w))
    return LetterClass(Tag.HEAVY)


# family ordering used to normalise (i, j) labels: types before permutations
_RANK = {Tag.TYPE1: 0, Tag.TYPE2: 1, Tag.TYPE3: 2, Tag.TYPE4: 3, Tag.PERMUTATION: 4, Tag.HEAVY: 5}


@dataclass(frozen=True)
class AutomatonClass:
    """Classes of both letters and the normalised family label.

    ``family`` is ``(i, j)`` with ``i`` the class of the letter playing the
    role of ``a``; when ``swapped`` is set the roles are exchanged, i.e. the
    label describes the dual automaton.
    """

    class_a: LetterClass
    class_b: LetterClass
    family: tuple[str, str]
    swapped: bool

    @property
    def label(self) -> str:
        return "({},{})".format(*self.family)


def classify_automaton(A: Automaton) -> AutomatonClass:
    ca, cb = classify_letter(A.a), classify_letter(A.b)
    # heavy letters sort last, so a heavy pair is labelled (i, heavy)
    swapped = _RANK[ca.tag] > _RANK[cb.tag]
    first, second = (cb, ca) if swapped else (ca, cb)
    return AutomatonClass(ca, cb, (first.tag.value, second.tag.value), swapped)
