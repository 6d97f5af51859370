"""Delta Square Verifier - Package Init

Lazy import 방식이라 설정만 필요한 스크립트는 sympy 계산 모듈을 불러오지 않습니다.
"""

__version__ = "0.1.0"

# Lazy imports - 실제 사용 시점에 로드됨
def __getattr__(name):
    """Lazy import를 위한 __getattr__ 구현"""
    if name == "settings":
        from .core.config import settings
        return settings
    elif name == "Settings":
        from .core.config import Settings
        return Settings
    elif name == "SymFunc":
        from .algebra.symfunc import SymFunc
        return SymFunc
    elif name == "Partition":
        from .algebra.partitions import Partition
        return Partition
    elif name == "MacdonaldBasis":
        from .macdonald.basis import MacdonaldBasis
        return MacdonaldBasis
    elif name == "PathFamily":
        from .paths.enumeration import PathFamily
        return PathFamily
    elif name == "STATEMENTS":
        from .conjectures.statements import STATEMENTS
        return STATEMENTS
    elif name == "VerificationReport":
        from .conjectures.report import VerificationReport
        return VerificationReport

    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "settings",
    "Settings",
    "SymFunc",
    "Partition",
    "MacdonaldBasis",
    "PathFamily",
    "STATEMENTS",
    "VerificationReport",
]
