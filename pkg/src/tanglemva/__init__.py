"""Exact Alexander-type invariants of virtual tangles, braids and links."""

from .ring import LaurentPoly, RationalFunction
from .diagram import TangleDiagram, break_arc, mu_counts, parse_diagram, skeleton
from .alexander import AlexanderMatrix, MinorSpec, build_matrix, det_exact, minor_det
from .tmva import (
    AhdElement,
    ReducedPair,
    compute_tmva,
    hodge_reduce,
    reconstruct_full,
    reconstruct_minor,
    reduced_from_diagram,
)
from .meta import MetaElement, assemble_diagram, eval_program, f_map, generator, parse_program
from .braid import BraidWord, burau, check_correspondence, gassner, parse_braid, rmva_braid
from .links import OneTanglePair, mva_link, partial_trace, rmva_one_tangle, vmva

__all__ = [
    "AhdElement", "AlexanderMatrix", "BraidWord", "LaurentPoly", "MetaElement",
    "MinorSpec", "OneTanglePair", "RationalFunction", "ReducedPair",
    "TangleDiagram", "assemble_diagram", "break_arc", "build_matrix",
    "burau", "check_correspondence", "compute_tmva", "det_exact",
    "eval_program", "f_map", "gassner", "generator", "hodge_reduce",
    "minor_det", "mu_counts", "mva_link", "parse_braid", "parse_diagram",
    "parse_program", "partial_trace", "reconstruct_full", "reconstruct_minor",
    "reduced_from_diagram", "rmva_braid", "rmva_one_tangle", "skeleton", "vmva",
]
