"""Breaking-change detection and client impact analysis for Mini-J libraries."""

from .apimodel import ApiModel, DeclRef, ExclusionRules, extract_api
from .delta import BcKind, BreakingChange, Delta, diff
from .impact import ImpactModel, compute_impact, matcher_rule
from .oracle import broken_by_oracle, check_client
from .usage import UseKind, UsageModel, extract_uses

__version__ = "0.1.0"

__all__ = [
    "ApiModel",
    "BcKind",
    "BreakingChange",
    "DeclRef",
    "Delta",
    "ExclusionRules",
    "ImpactModel",
    "UseKind",
    "UsageModel",
    "broken_by_oracle",
    "check_client",
    "compute_impact",
    "diff",
    "extract_api",
    "extract_uses",
    "matcher_rule",
]
