"""Discharging audit with exact rational charges."""

from .audit import AuditReport, audit, dot_labels
from .ledger import ChargeLedger, ConservationBroken, TransferRecord, init_charges
from .lemmas import LemmaViolation, check_lemmas
from .rules import apply_rules
from .templates import AmbiguousMatch, SpecialFacePattern, load_templates, match_special_faces, token_matches

__all__ = [
    "AmbiguousMatch",
    "AuditReport",
    "ChargeLedger",
    "ConservationBroken",
    "LemmaViolation",
    "SpecialFacePattern",
    "TransferRecord",
    "apply_rules",
    "audit",
    "check_lemmas",
    "dot_labels",
    "init_charges",
    "load_templates",
    "match_special_faces",
    "token_matches",
]
