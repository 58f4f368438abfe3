"""Local fields over Q_p, root counting, and parameter search for Galois splitting models."""

from .errors import *  # noqa: F401,F403
from .field import FieldElement, LocalField, construct
from .padic import AtLeast, PadicNumber, from_int, from_rational
from .panayi import RootReport, count_roots, embed_subfield, oracle_count, refine_root
from .poly import BivariatePoly, PolyOverK, content_valuation, normalize, reduce_mod_pi
from .residue import ResidueElement, ResidueField, roots_in_k
from .search import (GenericPolynomial, SearchJob, SearchResult, check_gsm_local,
                     load_catalog, reconstruct_global, search, specialize)

__version__ = "0.1.0"
