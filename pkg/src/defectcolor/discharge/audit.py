"""Run the whole discharging argument on a concrete embedding."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..graph import PlanarEmbedding
from .ledger import ChargeLedger, ConservationBroken, fmt, init_charges
from .lemmas import LemmaViolation, check_lemmas
from .rules import apply_rules
from .templates import SpecialFacePattern, load_templates, match_special_faces

EULER_TOTAL = Fraction(-8)


@dataclass
class AuditReport:
    initial_total: Fraction
    final_total: Fraction
    ledger: ChargeLedger
    special: dict[int, str] = field(default_factory=dict)
    lemma_violations: list[LemmaViolation] = field(default_factory=list)

    @property
    def final(self) -> dict[str, Fraction]:
        return self.ledger.charge

    @property
    def negative(self) -> list[str]:
        return [x for x, q in self.ledger.charge.items() if q < 0]

    @property
    def anomalies(self) -> list[dict]:
        return self.ledger.anomalies

    @property
    def transfers(self):
        return self.ledger.transfers

    def lemmas(self) -> set[str]:
        return {v.lemma for v in self.lemma_violations}

    def to_dict(self) -> dict:
        led = self.ledger
        return {
            "totals": {"initial": fmt(self.initial_total), "final": fmt(self.final_total)},
            "elements": [
                {"id": x, "kind": led.kind[x], "initial": fmt(led.initial[x]), "final": fmt(led.charge[x])}
                for x in led.charge
            ],
            "special_faces": {f"f{i}": name for i, name in sorted(self.special.items())},
            "negative": self.negative,
            "transfers": [t.to_dict() for t in led.transfers],
            "anomalies": list(led.anomalies),
            "lemma_violations": [v.to_dict() for v in self.lemma_violations],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def audit(
    emb: PlanarEmbedding,
    templates: dict[str, SpecialFacePattern] | None = None,
    *,
    lemmas: bool = True,
) -> AuditReport:
    """Initial charges, special faces, rules R1-R3 and the structural checks.

    Raises :class:`ConservationBroken` if the total charge is not -8 at the
    start or changes during any phase, or if an edge keeps charge after R2.
    """
    templates = load_templates() if templates is None else templates
    ledger = init_charges(emb)
    start = ledger.total()
    if start != EULER_TOTAL:
        raise ConservationBroken(f"initial total {start} != -8")
    special = match_special_faces(emb, templates)

    def check(phase: str) -> None:
        total = ledger.total()
        if total != start:
            raise ConservationBroken(f"total drifted to {total} after {phase}")
        if phase == "R2":
            stuck = [x for x, q in ledger.charge.items() if ledger.kind[x] == "edge" and q != 0]
            if stuck:
                raise ConservationBroken(f"edges hold charge after R2: {stuck[:5]}")

    apply_rules(emb, ledger, special, check=check)
    report = AuditReport(start, ledger.total(), ledger, special)
    if lemmas:
        report.lemma_violations = check_lemmas(emb, special)
    return report


def dot_labels(report: AuditReport, emb: PlanarEmbedding) -> dict[int, str]:
    """Per-vertex DOT labels: class and final charge."""
    return {
        v: f"{emb.classes[v].label} {fmt(report.final[f'v{v}'])}" for v in range(emb.n)
    }
