"""HOMFLY-PT and Kauffman invariants of framed links in RP^3."""

from ._kernels import BACKEND
from .diagram import (
    BasedDiagram,
    Diagram,
    DiagramError,
    PDGParseError,
    canonical_code,
    parse_pdg,
    serialize_pdg,
    standard_based,
    standard_unlink,
    validate,
)
from .homfly import compute_homfly
from .kauffman import compute_kauffman
from .ring import HomflyValue, KauffmanValue, LaurentPoly, delta, mu

__all__ = [
    "BACKEND",
    "BasedDiagram",
    "Diagram",
    "DiagramError",
    "PDGParseError",
    "HomflyValue",
    "KauffmanValue",
    "LaurentPoly",
    "canonical_code",
    "compute_homfly",
    "compute_kauffman",
    "delta",
    "mu",
    "parse_pdg",
    "serialize_pdg",
    "standard_based",
    "standard_unlink",
    "validate",
]

__version__ = "0.1.0"
