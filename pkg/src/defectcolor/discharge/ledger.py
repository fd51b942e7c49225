"""Exact charge bookkeeping for vertices, edges and faces."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..graph import PlanarEmbedding

RULES = ("R1", "R1a", "R1b", "R1c", "R2", "R3", "R3a", "R3b", "R3c", "R3d")


class ConservationBroken(AssertionError):
    pass


def exact_sum(values) -> Fraction:
    """Sum of fractions over a common denominator (much faster than ``sum``)."""
    values = list(values)
    den = math.lcm(*(q.denominator for q in values)) if values else 1
    return Fraction(sum(q.numerator * (den // q.denominator) for q in values), den)


def vid(v: int) -> str:
    return f"v{v}"


def eid(u: int, v: int) -> str:
    u, v = min(u, v), max(u, v)
    return f"e{u}-{v}"


def fid(f: int) -> str:
    return f"f{f}"


def fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class TransferRecord:
    rule: str
    src: str
    dst: str
    amount: Fraction
    encounter: int | None = None

    def to_dict(self) -> dict:
        out = {"rule": self.rule, "src": self.src, "dst": self.dst, "amount": fmt(self.amount)}
        if self.encounter is not None:
            out["encounter"] = self.encounter
        return out


@dataclass
class ChargeLedger:
    charge: dict[str, Fraction] = field(default_factory=dict)
    kind: dict[str, str] = field(default_factory=dict)
    initial: dict[str, Fraction] = field(default_factory=dict)
    transfers: list[TransferRecord] = field(default_factory=list)
    anomalies: list[dict] = field(default_factory=list)

    def add(self, element: str, kind: str, amount: Fraction | int) -> None:
        self.charge[element] = Fraction(amount)
        self.initial[element] = Fraction(amount)
        self.kind[element] = kind

    def transfer(self, rule: str, src: str, dst: str, amount: Fraction, encounter: int | None = None) -> None:
        if rule not in RULES:
            raise ValueError(f"unknown rule {rule!r}")
        if amount == 0:
            return
        self.charge[src] -= amount
        self.charge[dst] += amount
        self.transfers.append(TransferRecord(rule, src, dst, amount, encounter))

    def flag(self, kind: str, element: str, detail: str, rule: str | None = None) -> None:
        entry = {"kind": kind, "element": element, "detail": detail}
        if rule is not None:
            entry["rule"] = rule
        self.anomalies.append(entry)

    def total(self) -> Fraction:
        return exact_sum(self.charge.values())

    def initial_total(self) -> Fraction:
        return exact_sum(self.initial.values())

    def received(self, element: str, rule: str | None = None) -> Fraction:
        return sum(
            (t.amount for t in self.transfers if t.dst == element and (rule is None or t.rule == rule)),
            Fraction(0),
        )

    def sent(self, element: str, rule: str | None = None) -> Fraction:
        return sum(
            (t.amount for t in self.transfers if t.src == element and (rule is None or t.rule == rule)),
            Fraction(0),
        )


def init_charges(emb: PlanarEmbedding) -> ChargeLedger:
    """d(x) - 4 on vertices and faces, 0 on edges."""
    ledger = ChargeLedger()
    for v in range(emb.n):
        ledger.add(vid(v), "vertex", emb.degree(v) - 4)
    for u, v in emb.edges:
        ledger.add(eid(u, v), "edge", 0)
    for face in emb.faces:
        ledger.add(fid(face.index), "face", face.degree - 4)
    return ledger
