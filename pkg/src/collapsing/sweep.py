"""Exhaustive sweeps over small automata.

Every sweep compares a claim against the brute-force shortest-word oracle
of ``_kernels``.  Work is cut into shards (slices of the ``a`` letters) whose
partial reports merge associatively, so shards may run in worker processes.
"""
from __future__ import annotations

import itertools
import json
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from . import _kernels as K
from .characterize import (BRANCHES, MENU_13, MENU_1P, MENU_23, MENU_2P, MENU_33, MENU_34, MENU_3P, MENU_44,
                           MENU_4P, L_REPRESENTATIVE, characterize)
from .core import Automaton, Transformation, check_word, classify_letter, dual_word
from .msa import Verdict

TAGS = ("1", "2", "3", "4", "p", "heavy")
T1, T2, T3, T4, P, HEAVY = range(6)
MAX_EXAMPLES = 50


# --- letter tables ----------------------------------------------------------------


def tag_maps(maps: np.ndarray) -> np.ndarray:
    """Type code (index into ``TAGS``) of every row of ``maps``; agrees with ``classify_letter``."""
    count, n = maps.shape
    maps = maps.astype(np.int64)
    rows = np.arange(count)[:, None]
    hits = np.zeros((count, n), dtype=np.int64)
    for q in range(n):
        hits[:, q] = (maps == q).sum(axis=1)
    missing = hits == 0
    df = missing.sum(axis=1)
    klass = hits[rows, maps]                # size of the kernel class of each state
    in_pair, in_triple = klass == 2, klass == 3
    r = rows[:, 0]
    u = missing.argmax(axis=1)
    v = n - 1 - missing[:, ::-1].argmax(axis=1)
    tags = np.full(count, HEAVY, dtype=np.int8)
    tags[df == 0] = P
    d1 = df == 1
    z_in = in_pair[r, u]
    tags[d1 & z_in] = T3
    tags[d1 & ~z_in & in_pair[r, maps[r, u]]] = T4
    d2 = df == 2
    tags[d2 & in_triple[r, u] & in_triple[r, v]] = T1
    tags[d2 & in_pair[r, u] & in_pair[r, v] & (maps[r, u] != maps[r, v])] = T2
    return tags


@dataclass(frozen=True)
class LetterTable:
    n: int
    maps: np.ndarray
    tags: np.ndarray

    def indices(self, tag: int) -> np.ndarray:
        return np.flatnonzero(self.tags == tag)

    def canonical(self, tag: int) -> np.ndarray:
        """Indices of maps of the given type whose witness is ``(0, 1, ...)``."""
        out = []
        for i in self.indices(tag):
            w = classify_letter(Transformation(tuple(self.maps[i]))).witness
            if w == tuple(range(len(w))):
                out.append(i)
        return np.array(out, dtype=np.int64)


@lru_cache(maxsize=4)
def letter_table(n: int) -> LetterTable:
    maps = K.all_maps(n)
    return LetterTable(n, maps, tag_maps(maps))


# --- enumeration -----------------------------------------------------------------


def _rank_sorted(ta: int, tb: int) -> tuple[str, str]:
    return (TAGS[ta], TAGS[tb]) if ta <= tb else (TAGS[tb], TAGS[ta])


def family_of_tags(ta: int, tb: int) -> tuple[str, str]:
    """Normalised family label of a pair of letter types."""
    return _rank_sorted(ta, tb)


def parse_family(text: str) -> tuple[str, str]:
    """Parse labels such as ``"(3,p)"``, ``"p,3"`` or ``"3p"`` into a normalised family."""
    raw = text.strip().strip("()").replace(" ", "")
    parts = raw.split(",") if "," in raw else ([raw[:1], raw[1:]] if len(raw) == 2 else [raw])
    if len(parts) != 2 or any(p not in TAGS for p in parts):
        raise ValueError(f"bad family label {text!r}; expected e.g. (3,p) or (1,heavy)")
    return _rank_sorted(TAGS.index(parts[0]), TAGS.index(parts[1]))


def family_name(family: tuple[str, str]) -> str:
    return "({},{})".format(*family)


@dataclass(frozen=True)
class EnumFilter:
    """Allowed letter types for ``a`` and ``b`` and allowed normalised families; ``None`` allows all."""

    a: Optional[frozenset[str]] = None
    b: Optional[frozenset[str]] = None
    families: Optional[frozenset[tuple[str, str]]] = None

    def accepts(self, ta: int, tb: int) -> bool:
        return ((self.a is None or TAGS[ta] in self.a) and (self.b is None or TAGS[tb] in self.b)
                and (self.families is None or family_of_tags(ta, tb) in self.families))


def enumerate_automata(n: int, flt: EnumFilter = EnumFilter()) -> Iterator[Automaton]:
    """Every letter pair on ``n`` states accepted by the filter, ``a`` major, maps in lexicographic order."""
    if not 2 <= n <= 8:
        raise ValueError(f"need 2 <= n <= 8, got {n}")
    if n <= 7:
        table = letter_table(n)
        maps = [tuple(int(q) for q in m) for m in table.maps]
        tags = [int(t) for t in table.tags]
    else:
        maps = list(itertools.product(range(n), repeat=n))
        tags = [TAGS.index(classify_letter(Transformation(m)).tag.value) for m in maps]
    for ma, ta in zip(maps, tags):
        for mb, tb in zip(maps, tags):
            if flt.accepts(ta, tb):
                yield Automaton.from_maps(ma, mb)


# --- reports ---------------------------------------------------------------------


@dataclass
class SweepReport:
    kind: str
    n: int
    total: int = 0
    counts: Counter = field(default_factory=Counter)
    mismatch_count: int = 0
    mismatches: list = field(default_factory=list)
    menu_failure_count: int = 0
    menu_failures: list = field(default_factory=list)
    branches: Counter = field(default_factory=Counter)
    families: tuple = ()
    reduced: bool = False
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.mismatch_count == 0 and self.menu_failure_count == 0

    def merge(self, other: SweepReport) -> SweepReport:
        if (self.kind, self.n) != (other.kind, other.n):
            raise ValueError("cannot merge reports of different sweeps")
        return SweepReport(
            self.kind, self.n, self.total + other.total, self.counts + other.counts,
            self.mismatch_count + other.mismatch_count,
            _examples(self.mismatches + other.mismatches), self.menu_failure_count + other.menu_failure_count,
            _examples(self.menu_failures + other.menu_failures), self.branches + other.branches,
            tuple(sorted(set(self.families) | set(other.families))), self.reduced or other.reduced,
            self.elapsed + other.elapsed)

    def unreached_branches(self) -> list[str]:
        """Branches of the swept families that can fire at this size but never did."""
        if self.kind != "characterization":
            return []
        prefixes = {_branch_prefix(f) for f in self.families}
        return sorted(b for b, m in BRANCHES.items()
                      if m <= self.n and b.split(".")[0] in prefixes and b not in self.branches)

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "n": self.n, "total": self.total, "counts": dict(sorted(self.counts.items())),
               "mismatch_count": self.mismatch_count, "mismatches": self.mismatches, "ok": self.ok,
               "elapsed_seconds": round(self.elapsed, 3)}
        if self.kind == "characterization":
            out.update(families=[family_name(f) for f in self.families], reduced=self.reduced,
                       menu_failure_count=self.menu_failure_count, menu_failures=self.menu_failures,
                       branches=dict(sorted(self.branches.items())), unreached=self.unreached_branches())
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _examples(items: list) -> list:
    return sorted(items, key=lambda d: json.dumps(d, sort_keys=True))[:MAX_EXAMPLES]


def _branch_prefix(family: tuple[str, str]) -> str:
    if "heavy" in family:
        return "heavy"
    return "".join(family)


def _automaton_json(ma, mb) -> dict:
    return {"n": len(ma), "a": [int(q) for q in ma], "b": [int(q) for q in mb]}


def _truth(length: int) -> Verdict:
    if length == 0:
        return Verdict.NOT_COMPRESSIBLE
    return Verdict.IMPROPER if length <= 3 else Verdict.PROPER


def _run_shards(worker, jobs: Sequence[tuple], threads: int) -> list:
    if threads <= 1 or len(jobs) <= 1:
        return [worker(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, *zip(*jobs)))


def _merge_all(kind: str, n: int, parts: Iterable[SweepReport]) -> SweepReport:
    report = SweepReport(kind, n)
    for part in parts:
        report = report.merge(part)
    return report


def _split(indices: np.ndarray, shards: int) -> list[np.ndarray]:
    return [part for part in np.array_split(indices, max(1, shards)) if len(part)]


# --- characterization sweep --------------------------------------------------------

_MENU_WORDS = sorted({w for menu in (MENU_1P, MENU_2P, MENU_3P, MENU_4P, MENU_13, MENU_23, MENU_33, MENU_34,
                                     MENU_44, (L_REPRESENTATIVE,))
                      for word in menu for w in (word, dual_word(word))})


def _characterization_shard(n: int, ta: int, tb: int, amaps: np.ndarray, bmaps: np.ndarray,
                            weight: int) -> SweepReport:
    start = time.perf_counter()
    family = family_of_tags(ta, tb)
    label = family_name(family)
    report = SweepReport("characterization", n, families=(family,))
    img = K.image_table(np.concatenate([amaps, bmaps]).astype(np.int8))
    ia = np.arange(len(amaps))
    ib = np.arange(len(amaps), len(amaps) + len(bmaps))
    lengths = K.shortest_lengths(img, ia, ib, n, 3)
    report.total = weight * lengths.size

    if "heavy" in family or family == ("p", "p"):
        expected = Verdict.IMPROPER if "heavy" in family else Verdict.NOT_COMPRESSIBLE
        branch = "heavy.improper" if "heavy" in family else "pp.nc"
        truth = np.where(lengths == 0, 0, np.where(lengths <= 3, 1, 2))
        code = {Verdict.NOT_COMPRESSIBLE: 0, Verdict.IMPROPER: 1}[expected]
        report.counts[f"{label} {expected.value}"] += weight * lengths.size
        report.branches[branch] += weight * lengths.size
        bad = np.argwhere(truth != code)
        report.mismatch_count = weight * len(bad)
        report.mismatches = _examples([
            {"automaton": _automaton_json(amaps[i], bmaps[j]), "family": label, "branch": branch,
             "expected": _truth(int(lengths[i, j])).value, "got": expected.value} for i, j in bad[:MAX_EXAMPLES]])
        report.elapsed = time.perf_counter() - start
        return report

    limit = n - 3
    hits = {w: K.popcount(K.word_images(img, ia, ib, K.encode_word(w))) <= limit for w in _MENU_WORDS}
    a_letters = [Transformation(tuple(m)) for m in amaps]
    b_letters = [Transformation(tuple(m)) for m in bmaps]
    mismatches, menu_failures = [], []
    for i, la in enumerate(a_letters):
        row = lengths[i]
        for j, lb in enumerate(b_letters):
            fv = characterize(Automaton(la, lb))
            truth = _truth(int(row[j]))
            report.counts[f"{label} {fv.verdict.value}"] += weight
            report.branches[fv.matched_branch] += weight
            if fv.verdict is not truth:
                report.mismatch_count += weight
                if len(mismatches) < MAX_EXAMPLES:
                    mismatches.append({"automaton": _automaton_json(amaps[i], bmaps[j]), "family": label,
                                       "branch": fv.matched_branch, "expected": truth.value,
                                       "got": fv.verdict.value})
            elif truth is Verdict.PROPER and not any(hits[w][i, j] for w in fv.candidate_words()):
                report.menu_failure_count += weight
                if len(menu_failures) < MAX_EXAMPLES:
                    menu_failures.append({"automaton": _automaton_json(amaps[i], bmaps[j]), "family": label,
                                          "branch": fv.matched_branch, "menu": list(fv.candidate_words())})
    report.mismatches = _examples(mismatches)
    report.menu_failures = _examples(menu_failures)
    report.elapsed = time.perf_counter() - start
    return report


ALL_FAMILIES = tuple(sorted({family_of_tags(ta, tb) for ta in range(6) for tb in range(6)},
                            key=lambda f: (TAGS.index(f[0]), TAGS.index(f[1]))))
NEVER_PROPER_FAMILIES = (("1", "1"), ("1", "2"), ("2", "2"), ("1", "4"), ("2", "4"))


def verify_characterization(n: int, families: Optional[Iterable] = None, *, reduced: bool = False,
                            threads: int = 1, shards: Optional[int] = None) -> SweepReport:
    """Compare ``characterize`` with the oracle on every automaton of the requested families.

    With ``reduced`` the letter ``a`` ranges only over maps whose witness
    is ``(0, 1, ...)``, one representative for each way of placing the
    witness, and the counts are scaled back up; dual pairs are covered by
    counting mixed-type blocks twice.  Families with a heavy letter are not
    available in reduced mode.
    """
    if n < 4:
        raise ValueError(f"3-compression needs n >= 4, got {n}")
    wanted = ALL_FAMILIES if families is None else tuple(
        sorted({parse_family(f) if isinstance(f, str) else tuple(f) for f in families},
               key=lambda f: (TAGS.index(f[0]), TAGS.index(f[1]))))
    if reduced:
        wanted = tuple(f for f in wanted if "heavy" not in f and f != ("p", "p"))
    start = time.perf_counter()
    table = letter_table(n)
    shards = shards or max(1, threads)
    jobs = []
    for ta, tb in itertools.product(range(6), repeat=2):
        if family_of_tags(ta, tb) not in wanted:
            continue
        if reduced:
            if ta > tb:
                continue
            canon = table.canonical(ta)
            weight = len(table.indices(ta)) // len(canon)
            if weight * len(canon) != len(table.indices(ta)):
                raise AssertionError("witness placements are not uniform")
            weight *= 1 if ta == tb else 2
            a_idx = canon
        else:
            weight, a_idx = 1, table.indices(ta)
        b_idx = table.indices(tb)
        for part in _split(a_idx, shards):
            jobs.append((n, ta, tb, table.maps[part], table.maps[b_idx], weight))
    report = _merge_all("characterization", n, _run_shards(_characterization_shard, jobs, threads))
    report.families = wanted
    report.reduced = reduced
    report.elapsed = time.perf_counter() - start
    return report


# --- word sweeps -----------------------------------------------------------------


def _word_shard(n: int, k: int, words: tuple[str, ...], a_idx: np.ndarray) -> SweepReport:
    start = time.perf_counter()
    table = letter_table(n)
    img = K.image_table(table.maps)
    ib = np.arange(len(table.maps))
    lengths = K.shortest_lengths(img, a_idx, ib, n, k)
    compressible = lengths > 0
    covered = np.zeros_like(compressible)
    report = SweepReport("words", n)
    for w in words:
        hit = K.popcount(K.word_images(img, a_idx, ib, K.encode_word(w))) <= n - k
        covered |= hit
        report.counts[f"compressed by {w}"] += int((hit & compressible).sum())
    bad = np.argwhere(compressible & ~covered)
    report.total = lengths.size
    report.counts["compressible"] = int(compressible.sum())
    report.mismatch_count = len(bad)
    report.mismatches = _examples([_automaton_json(table.maps[a_idx[i]], table.maps[j])
                                   for i, j in bad[:MAX_EXAMPLES]])
    report.elapsed = time.perf_counter() - start
    return report


def verify_words(words: Sequence[str], n: int, k: int, *, threads: int = 1,
                 shards: Optional[int] = None) -> SweepReport:
    """All k-compressible n-state automata compressed by none of ``words``; they are the mismatches."""
    for w in words:
        check_word(w)
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
    if n > 6:
        raise ValueError(f"exhaustive word sweeps are limited to n <= 6, got {n}")
    start = time.perf_counter()
    size = n ** n
    shards = shards or max(threads, math.ceil(size / 1024))
    jobs = [(n, k, tuple(words), part) for part in _split(np.arange(size), shards)]
    report = _merge_all("words", n, _run_shards(_word_shard, jobs, threads))
    report.elapsed = time.perf_counter() - start
    return report


def verify_word(w: str, n: int, k: int, *, threads: int = 1) -> SweepReport:
    return verify_words((w,), n, k, threads=threads)


def five_state_pair_sweep(*, threads: int = 1) -> SweepReport:
    """Every 3-compressible 5-state automaton checked against s(3,2) and its dual."""
    from .words import S32
    return verify_words((S32, dual_word(S32)), 5, 3, threads=threads)
