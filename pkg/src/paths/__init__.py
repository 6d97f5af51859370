"""Delta Square Paths Package"""

from .objects import DecoratedLabelledPath, SchroederPath, SquarePath
from .enumeration import PathFamily, enumerate_family, gen_function, qt_polynomial, records
from .involution import alternating_gen_function, phi, weight
from .removal import RemovalMode, RemovalRecord, hperp_combinatorial, removal_algorithm

__all__ = [
    "SquarePath",
    "DecoratedLabelledPath",
    "SchroederPath",
    "PathFamily",
    "enumerate_family",
    "gen_function",
    "qt_polynomial",
    "records",
    "phi",
    "weight",
    "alternating_gen_function",
    "RemovalMode",
    "RemovalRecord",
    "removal_algorithm",
    "hperp_combinatorial",
]
