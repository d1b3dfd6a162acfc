"""Shortest words containing every word of a set as a factor.

The search runs breadth-first over pairs (matcher node, set of patterns
seen so far), where the matcher is an Aho-Corasick automaton for the
patterns.  States are packed as ``node << P | mask`` and each layer is a
sorted numpy array, so a layer is expanded in a few vector operations.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .core import check_word
from .words import Regex, regex_factor

DEFAULT_CAP = 10 ** 6


class ScsCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class PatternIndex:
    """Aho-Corasick automaton over ``{a, b}`` with complete transitions.

    ``out[v]`` is the bitmask of patterns ending at node ``v``, including
    those reached through suffix links.
    """

    patterns: tuple[str, ...]
    goto: np.ndarray
    out: np.ndarray

    @property
    def nodes(self) -> int:
        return len(self.out)

    def scan(self, w: str) -> int:
        """Bitmask of the patterns that occur in ``w``."""
        node, seen = 0, 0
        for c in w:
            node = int(self.goto[node, int(c == "b")])
            seen |= int(self.out[node])
        return seen


def build_index(patterns: Sequence[str]) -> PatternIndex:
    children: list[list[int]] = [[-1, -1]]
    out = [0]
    for i, p in enumerate(patterns):
        node = 0
        for c in p:
            k = c == "b"
            if children[node][k] < 0:
                children[node][k] = len(out)
                children.append([-1, -1])
                out.append(0)
            node = children[node][k]
        out[node] |= 1 << i
    goto = np.zeros((len(out), 2), dtype=np.int64)
    fail = [0] * len(out)
    queue = deque()
    for k in range(2):
        child = children[0][k]
        if child >= 0:
            goto[0, k] = child
            queue.append(child)
    while queue:
        node = queue.popleft()
        out[node] |= out[fail[node]]
        for k in range(2):
            child = children[node][k]
            if child >= 0:
                fail[child] = int(goto[fail[node], k])
                goto[node, k] = child
                queue.append(child)
            else:
                goto[node, k] = goto[fail[node], k]
    return PatternIndex(tuple(patterns), goto, np.array(out, dtype=np.int64))


@dataclass(frozen=True)
class ScsSolution:
    patterns: tuple[str, ...]
    length: int
    words: tuple[str, ...]
    covered: int
    complete: bool  # words holds every optimal word

    @property
    def empty(self) -> bool:
        return not self.words

    def to_dict(self) -> dict:
        return {"length": self.length, "count": len(self.words), "complete": self.complete,
                "words": list(self.words)}


def _essential(patterns: Iterable[str]) -> list[str]:
    unique = sorted(set(patterns))
    return [p for p in unique if not any(p != q and p in q for q in unique)]


def _layers(index: PatternIndex) -> list[np.ndarray]:
    bits = len(index.patterns)
    full = (1 << bits) - 1
    if index.nodes << bits > 1 << 31:
        raise ValueError(f"search space of {index.nodes} nodes x 2^{bits} masks is too large")
    visited = np.zeros(index.nodes << bits, dtype=bool)
    start = np.array([int(index.out[0])], dtype=np.int64)
    visited[start] = True
    layers = [start]
    while not ((layers[-1] & full) == full).any():
        cur = layers[-1]
        node, mask = cur >> bits, cur & full
        succ = []
        for k in range(2):
            nxt = index.goto[node, k]
            succ.append(nxt << bits | mask | index.out[nxt])
        nxt = np.unique(np.concatenate(succ))
        nxt = nxt[~visited[nxt]]
        visited[nxt] = True
        layers.append(nxt)
    return layers


def _successors(index: PatternIndex, states: np.ndarray, k: int) -> np.ndarray:
    bits = len(index.patterns)
    full = (1 << bits) - 1
    nxt = index.goto[states >> bits, k]
    return nxt << bits | (states & full) | index.out[nxt]


def _prune(index: PatternIndex, layers: list[np.ndarray]) -> list[np.ndarray]:
    """Restrict every layer to states lying on some optimal path."""
    full = (1 << len(index.patterns)) - 1
    keep = [None] * len(layers)
    keep[-1] = layers[-1][(layers[-1] & full) == full]
    for t in range(len(layers) - 2, -1, -1):
        alive = np.zeros(len(layers[t]), dtype=bool)
        for k in range(2):
            alive |= np.isin(_successors(index, layers[t], k), keep[t + 1])
        keep[t] = layers[t][alive]
    return keep


def _edges(index: PatternIndex, keep: list[np.ndarray]) -> list[dict[int, list[tuple[str, int]]]]:
    edges = []
    for t in range(len(keep) - 1):
        table: dict[int, list[tuple[str, int]]] = {}
        for k, c in enumerate("ab"):
            succ = _successors(index, keep[t], k)
            ok = np.isin(succ, keep[t + 1])
            for s, n in zip(keep[t][ok].tolist(), succ[ok].tolist()):
                table.setdefault(s, []).append((c, n))
        for s in table:
            table[s].sort()
        edges.append(table)
    return edges


def _count_paths(edges, keep, cap: int) -> int:
    counts = {s: 1 for s in keep[-1].tolist()}
    for t in range(len(edges) - 1, -1, -1):
        counts = {s: min(cap + 1, sum(counts[n] for _, n in nxt)) for s, nxt in edges[t].items()}
    return sum(counts.values())


def _words(edges, start: int, first_only: bool) -> list[str]:
    out: list[str] = []
    path: list[str] = []

    def walk(t: int, state: int) -> bool:
        if t == len(edges):
            out.append("".join(path))
            return first_only
        for c, nxt in edges[t][state]:
            path.append(c)
            if walk(t + 1, nxt):
                return True
            path.pop()
        return False

    walk(0, start)
    return out


def scs_solve(patterns: Iterable[str], enumerate_all: bool = False, cap: int = DEFAULT_CAP) -> ScsSolution:
    """Minimum length of a word containing every pattern as a factor.

    Returns the lexicographically least optimal word, or every optimal word
    in lexicographic order when ``enumerate_all`` is set; raises
    ``ScsCapExceeded`` if there are more than ``cap`` of them.
    """
    patterns = tuple(patterns)
    if not patterns:
        raise ValueError("need at least one pattern")
    for p in patterns:
        if not p:
            raise ValueError("patterns must be nonempty")
        check_word(p)
    index = build_index(_essential(patterns))
    keep = _prune(index, _layers(index))
    edges = _edges(index, keep)
    (start,) = keep[0].tolist()
    if enumerate_all:
        total = _count_paths(edges, keep, cap)
        if total > cap:
            raise ScsCapExceeded(f"more than {cap} optimal words")
    words = tuple(_words(edges, start, first_only=not enumerate_all))
    full_index = build_index(patterns)
    covered = full_index.scan(words[0])
    return ScsSolution(patterns, len(keep) - 1, words, covered, enumerate_all)


def scs_filter(sol: ScsSolution, constraints: Sequence[Regex | Callable[[str], bool]]) -> ScsSolution:
    """Optimal words of ``sol`` in which every constraint regex matches some factor.

    Constraints may also be plain predicates on words.  An empty result
    means no optimal word meets the constraints; check ``.empty``.
    """
    if not sol.complete:
        raise ValueError("filtering needs the complete optimal set (enumerate_all=True)")
    tests = [(lambda w, r=c: regex_factor(r, w)) if isinstance(c, Regex) else c for c in constraints]
    words = tuple(w for w in sol.words if all(test(w) for test in tests))
    return ScsSolution(sol.patterns, sol.length, words, sol.covered if words else 0, True)
