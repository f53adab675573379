"""Finite right groups over Cayley tables.

Structure recognition and decomposition, congruence machinery, Hom-set
enumeration (structured and brute force), group actions, and the
right-zero/group pretorsion checks, all at exhaustively verifiable scale.
"""

from .core import (
    FiniteGroup,
    FiniteSemigroup,
    Morphism,
    direct_product,
    enumerate_hom_bruteforce,
    idempotents,
    parse_table_text,
    validate,
)
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "FiniteGroup",
    "FiniteSemigroup",
    "Morphism",
    "direct_product",
    "enumerate_hom_bruteforce",
    "idempotents",
    "parse_table_text",
    "validate",
]

__version__ = "0.1.0"
