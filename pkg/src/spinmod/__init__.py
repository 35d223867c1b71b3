"""Spin characters of the symmetric groups in characteristic 2."""

from .abacus import two_content, two_core, two_quotient, two_sign, two_weight
from .characters import FormalChar, parse_char
from .classify import is_2carter, spin_irreducible, verify_suite
from .degrees import spin_degree
from .errors import SpinModError
from .partitions import Partition, parse
from .regdouble import dblreg, double, four_bar_core, regularize, spin_block
from .rouquier import RouquierBlock, assemble_E

__version__ = "0.1.0"

__all__ = [
    "FormalChar", "Partition", "RouquierBlock", "SpinModError", "assemble_E", "dblreg", "double",
    "four_bar_core", "is_2carter", "parse", "parse_char", "regularize", "spin_block", "spin_degree",
    "spin_irreducible", "two_content", "two_core", "two_quotient", "two_sign", "two_weight",
    "verify_suite",
]
