"""Exact Lefschetz checks, decomposition and gluing for Artinian monomial algebras."""

from __future__ import annotations

__version__ = "0.1.0"

from .core import (  # noqa: E402
    HilbertData,
    Monomial,
    MonomialIdeal,
    ParseError,
    colon_by_monomial,
    hilbert_data,
    minimalize,
    parse_ideal,
    parse_monomial,
    render_ideal,
    render_monomial,
    standard_monomials,
)
from .glue import Decomposition, GluingSpec, NotApplicableError, decompose, find_witness, glue, split  # noqa: E402
from .lefschetz import LefschetzReport, Property, check_lefschetz, has_narrow_slp, has_slp, has_wlp  # noqa: E402
from .linalg import bareiss_rank  # noqa: E402
from .tables import Table, ideal_of, gorenstein_initial_ideal  # noqa: E402

__all__ = [
    "Decomposition", "GluingSpec", "HilbertData", "LefschetzReport", "Monomial", "MonomialIdeal",
    "NotApplicableError", "ParseError", "Property", "Table", "bareiss_rank", "check_lefschetz",
    "colon_by_monomial", "decompose", "find_witness", "glue", "has_narrow_slp", "has_slp", "has_wlp",
    "hilbert_data", "ideal_of", "gorenstein_initial_ideal", "minimalize", "parse_ideal", "parse_monomial",
    "render_ideal", "render_monomial", "split", "standard_monomials",
]
