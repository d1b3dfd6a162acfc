"""Compressibility of two-letter automata and 3-collapsing words."""
from .characterize import FamilyVerdict, characterize
from .core import (Automaton, AutomatonClass, LetterClass, StateSet, Tag, Transformation, classify_automaton,
                   classify_letter, deficiency, dual_automaton, dual_word, missing_set, missing_step)
from .msa import MSA, CompressReport, Verdict, build_msa, export_dot, is_k_compressible, is_proper, \
    shortest_compressing_word
from .scs import ScsSolution, scs_filter, scs_solve
from .sweep import SweepReport, enumerate_automata, five_state_pair_sweep, verify_characterization, verify_word
from .words import S32, W, W0, W3, certificate_3_collapsing

__all__ = [
    "Automaton", "AutomatonClass", "LetterClass", "StateSet", "Tag", "Transformation", "classify_automaton",
    "classify_letter", "deficiency", "dual_automaton", "dual_word", "missing_set", "missing_step", "MSA",
    "CompressReport", "Verdict", "build_msa", "export_dot", "is_k_compressible", "is_proper",
    "shortest_compressing_word", "FamilyVerdict", "characterize", "ScsSolution", "scs_filter", "scs_solve",
    "SweepReport", "enumerate_automata", "five_state_pair_sweep", "verify_characterization", "verify_word",
    "S32", "W", "W0", "W3", "certificate_3_collapsing",
]
