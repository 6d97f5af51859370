"""Delta Square Macdonald Package"""

from .basis import MacdonaldBasis, get_basis, htilde, star_inner
from .operators import delta, delta_e, delta_h, enk, macdonald_expand, nabla, pieri

__all__ = [
    "MacdonaldBasis",
    "get_basis",
    "htilde",
    "star_inner",
    "macdonald_expand",
    "delta",
    "delta_e",
    "delta_h",
    "nabla",
    "pieri",
    "enk",
]
