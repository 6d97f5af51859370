"""Delta Square Algebra Package"""

from .qt_algebra import QT_FIELD, QT_RING, q, t, q_binomial, qt_equal, qt_text
from .partitions import Partition, enumerate_partitions
from .symfunc import SymFunc, e, h, p, s, skew_h

__all__ = [
    "QT_RING",
    "QT_FIELD",
    "q",
    "t",
    "q_binomial",
    "qt_equal",
    "qt_text",
    "Partition",
    "enumerate_partitions",
    "SymFunc",
    "e",
    "h",
    "p",
    "s",
    "skew_h",
]
