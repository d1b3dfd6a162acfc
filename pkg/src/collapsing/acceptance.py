"""End-to-end reproduction checks, one function per criterion.

Each check returns a ``CriterionResult``; ``run_all`` runs them in order.
Expensive sweeps are cached so the checks can share them.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from functools import lru_cache

from .characterize import BRANCHES
from .core import Automaton, StateSet, dual_word, missing_set, missing_step
from .msa import shortest_compressing_word
from .scs import scs_filter, scs_solve
from .sweep import NEVER_PROPER_FAMILIES, family_name, five_state_pair_sweep, verify_characterization, verify_word
from .words import (S32, U, V, W, W0, W3, certificate_3_collapsing,
                    enumerate_language, expand, language_l, language_l_dual, regex_matches)

# time limits in seconds, pinned per criterion (single core)
LIMITS = {1: 1.0, 2: 10.0, 3: 1.0, 4: 600.0, 5: 60.0, 6: 300.0, 7: 900.0, 8: 1800.0, 9: 600.0}

COUNTEREXAMPLE = Automaton.from_maps([0, 3, 4, 2, 1], [3, 0, 0, 1, 4])


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    elapsed: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number}. {self.title}: {self.detail} ({self.elapsed:.1f}s)"


def _timed(number: int, title: str, body) -> CriterionResult:
    start = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - start
    if ok and elapsed > LIMITS[number]:
        ok, detail = False, f"{detail}; exceeded {LIMITS[number]:.0f}s"
    return CriterionResult(number, title, ok, detail, elapsed)


@lru_cache(maxsize=None)
def characterization_report(n: int, reduced: bool = False, families: tuple = ()):
    return verify_characterization(n, families or None, reduced=reduced)


def check_1() -> CriterionResult:
    def body():
        return len(S32) == 33 and len(W3) == 53, f"|s32|={len(S32)}, |w3|={len(W3)}"
    return _timed(1, "literal lengths", body)


def check_2() -> CriterionResult:
    def body():
        r = verify_word(S32, 4, 3)
        return r.ok and r.total == 65536, f"{r.mismatch_count} failures over {r.total} pairs"
    return _timed(2, "s32 is 3-synchronizing", body)


def check_3() -> CriterionResult:
    def body():
        s, d = COUNTEREXAMPLE.image(S32), COUNTEREXAMPLE.image(dual_word(S32))
        ok = s == StateSet.of(5, (0, 1, 3)) and d == StateSet.of(5, (3,))
        return ok, f"Q.s32={s}, Q.dual(s32)={d}"
    return _timed(3, "counterexample images", body)


def check_4() -> CriterionResult:
    def body():
        r = five_state_pair_sweep()
        detail = f"{r.mismatch_count} violators among {r.counts['compressible']} compressible of {r.total}"
        if r.mismatches:
            detail += f"; first {r.mismatches[0]}"
        return r.ok, detail
    return _timed(4, "five-state s32/dual sweep", body)


def check_5() -> CriterionResult:
    def body():
        full = scs_solve(W)
        reduced = scs_solve(W0, enumerate_all=True)
        filtered = scs_filter(reduced, [language_l(), language_l_dual()])
        ok = (full.length == 55 and reduced.length == 53 and W3 in reduced.words
              and not filtered.empty and W3 in filtered.words)
        return ok, (f"W -> {full.length}, W0 -> {reduced.length} ({len(reduced.words)} optimal, w3 "
                    f"{'in' if W3 in reduced.words else 'not in'}), filtered {len(filtered.words)}")
    return _timed(5, "superstring optima", body)


def check_6() -> CriterionResult:
    def body():
        cert = certificate_3_collapsing(W3)
        r4, r5 = verify_word(W3, 4, 3), verify_word(W3, 5, 3)
        ok = cert.is_certified and r4.ok and r5.ok
        return ok, f"certified={cert.is_certified}, failures n=4: {r4.mismatch_count}, n=5: {r5.mismatch_count}"
    return _timed(6, "w3 certificate and sweep", body)


def check_7() -> CriterionResult:
    def body():
        parts, ok = [], True
        for n in (4, 5):
            r = characterization_report(n)
            never = sum(v for k, v in r.counts.items()
                        if k.endswith(" Proper") and k.split()[0] in {family_name(f) for f in NEVER_PROPER_FAMILIES})
            ok &= r.ok and never == 0 and r.total == n ** (2 * n)
            parts.append(f"n={n}: {r.mismatch_count} mismatches, {r.menu_failure_count} menu failures, "
                         f"{never} never-proper violations")
        return ok, "; ".join(parts)
    return _timed(7, "characterization vs oracle", body)


def check_8() -> CriterionResult:
    def body():
        r6 = characterization_report(6, True)
        r7 = characterization_report(7, True, (("3", "p"),))
        fired = set(characterization_report(4).branches) | set(characterization_report(5).branches) | set(r6.branches)
        unreached = sorted(b for b, m in BRANCHES.items() if m <= 6 and b not in fired)
        ok = r6.ok and r7.ok and not unreached
        return ok, (f"n=6: {r6.mismatch_count} mismatches, n=7 (3,p): {r7.mismatch_count} mismatches, "
                    f"unreached branches: {unreached or 'none'}")
    return _timed(8, "deep-orbit branches", body)


def _naive_shortest(A: Automaton, k: int):
    # breadth-first search over images Q.w
    full = frozenset(range(A.n))
    seen, layer, length = {full}, [full], 0
    while layer:
        length += 1
        nxt = []
        for s in layer:
            for t in (A.a.images, A.b.images):
                img = frozenset(t[q] for q in s)
                if len(img) <= A.n - k:
                    return length
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        layer = nxt
    return None


def check_9() -> CriterionResult:
    def body():
        problems = []
        for n in (2, 3, 4):
            maps = list(itertools.product(range(n), repeat=n))
            words = ["".join(p) for m in range(1, 5 if n < 4 else 3) for p in itertools.product("ab", repeat=m)]
            for ma, mb in itertools.product(maps, repeat=2):
                A = Automaton.from_maps(ma, mb)
                for k in (2, 3):
                    if k < n and shortest_compressing_word(A, k).length != _naive_shortest(A, k):
                        problems.append(f"msa disagrees on {A.to_json()} k={k}")
                for w in words:
                    fold = StateSet(n)
                    for c in w:
                        fold = missing_step(A, fold, c)
                    if fold != missing_set(A, w):
                        problems.append(f"missing_step fold differs on {A.to_json()} w={w}")
        for r in (language_l(), language_l_dual()):
            members = enumerate_language(r, 10)
            for m in range(11):
                for p in itertools.product("ab", repeat=m):
                    w = "".join(p)
                    if regex_matches(r, w) != (w in members):
                        problems.append(f"regex {r.text} disagrees on {w!r}")
        if not (regex_matches(language_l(), U) and regex_matches(language_l_dual(), V)
                and regex_matches(language_l(), expand("b2a3b2"))):
            problems.append("u, v or b2a3b2 membership failed")
        return not problems, "all agree" if not problems else f"{len(problems)} problems, first: {problems[0]}"
    return _timed(9, "property suites", body)


CHECKS = (check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8, check_9)


def run_all(echo=None) -> list[CriterionResult]:
    results = []
    for check in CHECKS:
        result = check()
        if echo:
            echo(result.line())
        results.append(result)
    return results
