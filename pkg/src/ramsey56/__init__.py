"""Explicit (5,6)-colorings of complete graphs and the tools to check them.

``combined.build(q)`` colors K_{q^2} with the product of a bit-string
coloring (``cfls``) and a coloring over F_q^2 (``algebraic``). ``verifier``
checks every 5-clique exhaustively, ``patterns`` holds the forbidden
configurations, and ``enumerator`` lists the small colorings that survive them.
"""

from .algebraic import Vector2, chi
from .cfls import BitVertex, phi
from .coloring import EdgeColoring
from .combined import Construction, build, choose_beta, embed
from .enumerator import canonical_key, enumerate_residual, enumerate_colorings
from .field import FieldElement, FieldSpec
from .patterns import ForbiddenPattern, default_patterns, load_patterns, match_pattern, scan, soundness
from .verifier import VerifyReport, lower_bound_56, recursion_bound, verify

__version__ = "0.1.0"

__all__ = [
    "BitVertex", "Construction", "EdgeColoring", "FieldElement", "FieldSpec", "ForbiddenPattern",
    "Vector2", "VerifyReport", "build", "canonical_key", "chi", "choose_beta", "default_patterns",
    "embed", "enumerate_residual", "enumerate_colorings", "load_patterns", "lower_bound_56",
    "match_pattern", "phi", "recursion_bound", "scan", "soundness", "verify",
]
