"""m-Missing-State Automata: compressibility, properness and shortest compressing words."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Optional, Union

from .core import ALPHABET, Automaton, StateSet, missing_step


class Verdict(str, Enum):
    NOT_COMPRESSIBLE = "NotCompressible"
    IMPROPER = "Improper"
    PROPER = "Proper"


class _Sink:
    def __repr__(self) -> str:
        return "SINK"


SINK = _Sink()
Node = Union[StateSet, _Sink]


@dataclass(frozen=True)
class MSA:
    m: int
    n: int
    nodes: tuple[Node, ...]
    transitions: dict  # (StateSet, letter) -> Node

    @property
    def start(self) -> StateSet:
        return StateSet(self.n)

    def step(self, node: Node, letter: str) -> Node:
        if node is SINK:
            raise ValueError("the sink has no outgoing transitions")
        return self.transitions[node, letter]

    def reachable(self) -> set:
        seen = {self.start}
        todo = [self.start]
        while todo:
            node = todo.pop()
            if node is SINK:
                continue
            for c in ALPHABET:
                nxt = self.transitions[node, c]
                if nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
        return seen

    def sink_reachable(self) -> bool:
        return SINK in self.reachable()


def build_msa(A: Automaton, m: int) -> MSA:
    n = A.n
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")
    nodes: list[Node] = [StateSet.of(n, c) for size in range(m) for c in combinations(range(n), size)]
    transitions = {}
    for node in nodes:
        for c in ALPHABET:
            nxt = missing_step(A, node, c)
            transitions[node, c] = nxt if len(nxt) < m else SINK
    nodes.append(SINK)
    return MSA(m, n, tuple(nodes), transitions)


@dataclass(frozen=True)
class CompressReport:
    k: int
    word: Optional[str]

    @property
    def compressible(self) -> bool:
        return self.word is not None

    @property
    def length(self) -> Optional[int]:
        return None if self.word is None else len(self.word)

    @property
    def proper(self) -> bool:
        return self.word is not None and len(self.word) > self.k

    @property
    def verdict(self) -> Verdict:
        if self.word is None:
            return Verdict.NOT_COMPRESSIBLE
        return Verdict.PROPER if self.proper else Verdict.IMPROPER

    def to_dict(self) -> dict:
        if self.word is None:
            return {"k": self.k, "status": "NotCompressible"}
        return {"k": self.k, "status": "Compressible", "word": self.word,
                "length": len(self.word), "proper": self.proper}


def _missing_bits(images: tuple[int, ...], full: int, missed: int) -> int:
    # missing set after one letter == complement of the image of the present states
    img = 0
    present = full & ~missed
    q = 0
    while present:
        if present & 1:
            img |= 1 << images[q]
        present >>= 1
        q += 1
    return full & ~img


def shortest_compressing_word(A: Automaton, k: int) -> CompressReport:
    """Breadth-first search of the kMSA from the empty missing set.

    Letters are expanded a before b, so the first word found is the
    lexicographically least among the shortest ones.
    """
    n = A.n
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    full = (1 << n) - 1
    letters = (("a", A.a.images), ("b", A.b.images))
    parent: dict[int, tuple[int, str]] = {0: (-1, "")}
    queue = deque([0])
    while queue:
        node = queue.popleft()
        for c, images in letters:
            nxt = _missing_bits(images, full, node)
            if bin(nxt).count("1") >= k:
                word = [c]
                while node:
                    node, c = parent[node]
                    word.append(c)
                return CompressReport(k, "".join(reversed(word)))
            if nxt not in parent:
                parent[nxt] = (node, c)
                queue.append(nxt)
    return CompressReport(k, None)


def is_k_compressible(A: Automaton, k: int) -> bool:
    return shortest_compressing_word(A, k).compressible


def is_proper(A: Automaton, k: int) -> Verdict:
    return shortest_compressing_word(A, k).verdict


def _node_name(node: Node) -> str:
    if node is SINK:
        return "SINK"
    members = list(node)
    return ",".join(map(str, members)) if members else "{}"


def export_dot(msa: MSA) -> str:
    lines = ["digraph MSA {", "  rankdir=LR;", '  __start [shape=point];']
    for node in msa.nodes:
        shape = "doublecircle" if node is SINK else "circle"
        label = str(msa.m) if node is SINK else _node_name(node).replace("{}", "")
        lines.append(f'  "{_node_name(node)}" [shape={shape}, label="{label}"];')
    lines.append(f'  __start -> "{_node_name(msa.start)}";')
    for node in msa.nodes:
        if node is SINK:
            continue
        targets: dict[str, list[str]] = {}
        for c in ALPHABET:
            targets.setdefault(_node_name(msa.transitions[node, c]), []).append(c)
        for target, cs in targets.items():
            lines.append(f'  "{_node_name(node)}" -> "{target}" [label="{",".join(cs)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
