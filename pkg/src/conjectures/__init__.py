"""Delta Square Conjectures Package"""

from .families import FTable, STable, f_direct, f_recursive, f_via_nabla_enk, s_recursive
from .report import ReportBuilder, VerificationReport, VerificationStatus, run_campaign
from .statements import STATEMENTS, Statement, campaign, expand_grid, get_statement

__all__ = [
    "FTable",
    "STable",
    "f_direct",
    "f_recursive",
    "f_via_nabla_enk",
    "s_recursive",
    "ReportBuilder",
    "VerificationReport",
    "VerificationStatus",
    "run_campaign",
    "STATEMENTS",
    "Statement",
    "campaign",
    "expand_grid",
    "get_statement",
]
