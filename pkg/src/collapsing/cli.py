"""Command-line interface: ``collapsing <subcommand> ...``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .characterize import characterize
from .core import Automaton, WordError, check_word, dual_word
from .msa import build_msa, export_dot, shortest_compressing_word
from .scs import ScsCapExceeded, scs_filter, scs_solve
from .sweep import five_state_pair_sweep, parse_family, verify_characterization, verify_word
from .words import (L_DUAL_TEXT, L_TEXT, RegexSyntaxError, S32, U, V, W, W0, W3, certificate_3_collapsing,
                    regex_parse)

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _automaton(path: str) -> Automaton:
    try:
        return Automaton.from_json(_read(path))
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad automaton in {path}: {exc}") from exc


def _word(text: str) -> str:
    try:
        return check_word(text)
    except WordError as exc:
        raise UsageError(str(exc)) from exc


def _emit(data) -> None:
    print(json.dumps(data, indent=2))


def _cmd_classify(args) -> int:
    A = _automaton(args.file)
    fv = characterize(A)
    cls = fv.family
    _emit({"a": {"type": cls.class_a.tag.value, "witness": list(cls.class_a.witness)},
           "b": {"type": cls.class_b.tag.value, "witness": list(cls.class_b.witness)},
           "family": cls.label, "swapped": cls.swapped, "verdict": fv.verdict.value,
           "word_menu": list(fv.word_menu), "language": fv.language, "matched_branch": fv.matched_branch})
    return OK


def _cmd_compress(args) -> int:
    A = _automaton(args.file)
    if not 0 < args.k < A.n:
        raise UsageError(f"--k must satisfy 0 < k < n = {A.n}")
    _emit(shortest_compressing_word(A, args.k).to_dict())
    return OK


def _cmd_msa_dot(args) -> int:
    A = _automaton(args.file)
    if not 0 < args.m < A.n:
        raise UsageError(f"--m must satisfy 0 < m < n = {A.n}")
    sys.stdout.write(export_dot(build_msa(A, args.m)))
    return OK


def _report(report) -> int:
    print(report.to_json())
    return OK if report.ok else FAILED


def _cmd_verify_word(args) -> int:
    w = _word(args.word)
    if not 0 < args.k < args.n:
        raise UsageError("need 0 < k < n")
    if args.n > 6:
        raise UsageError("exhaustive word sweeps support n <= 6")
    return _report(verify_word(w, args.n, args.k, threads=args.threads))


def _cmd_verify_characterization(args) -> int:
    if not 4 <= args.n <= 8:
        raise UsageError("--n must be between 4 and 8")
    try:
        families = [parse_family(f) for f in args.family] if args.family else None
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return _report(verify_characterization(args.n, families, reduced=args.reduced, threads=args.threads))


def _cmd_sweep5(args) -> int:
    return _report(five_state_pair_sweep(threads=args.threads))


_NAMED_LANGUAGES = {"L": L_TEXT, "L-dual": L_DUAL_TEXT}


def _cmd_scs(args) -> int:
    patterns = [line.strip() for line in _read(args.patterns).splitlines() if line.strip()]
    if not patterns:
        raise UsageError("pattern file is empty")
    for p in patterns:
        _word(p)
    try:
        constraints = [regex_parse(_NAMED_LANGUAGES.get(c, c)) for c in args.constraint]
    except RegexSyntaxError as exc:
        raise UsageError(f"bad constraint: {exc}") from exc
    try:
        sol = scs_solve(patterns, enumerate_all=args.all or bool(constraints), cap=args.cap)
    except ScsCapExceeded as exc:
        print(f"error: {exc}; raise --cap", file=sys.stderr)
        return FAILED
    if constraints:
        sol = scs_filter(sol, constraints)
        if sol.empty:
            _emit({"length": sol.length, "count": 0, "words": [],
                   "error": "no optimal word satisfies the constraints"})
            return FAILED
    _emit(sol.to_dict())
    return OK


def _cmd_certificate(args) -> int:
    report = certificate_3_collapsing(_word(args.word))
    _emit(report.to_dict())
    return OK if report.is_certified else FAILED


def _cmd_words(args) -> int:
    _emit({"s32": S32, "s32_dual": dual_word(S32), "w3": W3, "u": U, "v": V, "W": list(W), "W0": list(W0),
           "L": L_TEXT, "L_dual": L_DUAL_TEXT})
    return OK


def _cmd_reproduce(args) -> int:
    from .acceptance import run_all
    results = run_all(echo=lambda line: print(line, flush=True))
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} criteria passed")
    return OK if passed == len(results) else FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="collapsing", description="3-compressibility of two-letter automata")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="letter types, family and verdict of an automaton JSON file")
    p.add_argument("file", help='JSON {"n": N, "a": [...], "b": [...]}, or - for stdin')
    p.set_defaults(run=_cmd_classify)

    p = sub.add_parser("compress", help="shortest k-compressing word")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(run=_cmd_compress)

    p = sub.add_parser("msa-dot", help="m-missing-state automaton as Graphviz DOT")
    p.add_argument("file")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(run=_cmd_msa_dot)

    p = sub.add_parser("verify-word", help="k-compressible n-state automata not compressed by a word")
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(run=_cmd_verify_word)

    p = sub.add_parser("verify-characterization", help="closed-form verdicts against brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", action="append", help="family such as (3,p); repeatable")
    p.add_argument("--reduced", action="store_true", help="one automaton per witness placement")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(run=_cmd_verify_characterization)

    p = sub.add_parser("sweep5", help="all 5-state automata against s32 and its dual")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(run=_cmd_sweep5)

    p = sub.add_parser("scs", help="shortest word containing every pattern as a factor")
    p.add_argument("--patterns", required=True, help="file with one word per line")
    p.add_argument("--all", action="store_true", help="list every optimal word")
    p.add_argument("--constraint", action="append", default=[],
                   help="regex one of whose words must be a factor; L and L-dual name the built-in languages")
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.set_defaults(run=_cmd_scs)

    p = sub.add_parser("certificate", help="sufficient check that a word is 3-collapsing")
    p.add_argument("--word", required=True)
    p.set_defaults(run=_cmd_certificate)

    p = sub.add_parser("words", help="print the named words and languages")
    p.set_defaults(run=_cmd_words)

    p = sub.add_parser("reproduce", help="run every acceptance check")
    p.set_defaults(run=_cmd_reproduce)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return USAGE
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
