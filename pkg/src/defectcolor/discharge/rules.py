"""The three discharging phases: vertices, heavy edges, faces."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..graph import PlanarEmbedding, VertexClass, heavy_edges
from .ledger import ChargeLedger, eid, fid, vid

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
THREE_EIGHTHS = Fraction(3, 8)
SIXTH = Fraction(1, 6)


def _split(
    ledger: ChargeLedger,
    rule: str,
    src: str,
    remaining: Fraction,
    recipients: Sequence[tuple[str, int | None]],
) -> None:
    """Distribute ``remaining`` evenly, flagging negative or undeliverable charge."""
    if not recipients:
        if remaining != 0:
            ledger.flag("retained", src, f"no recipients for remaining charge {remaining}", rule)
        return
    if remaining < 0:
        ledger.flag("negative-remaining", src, f"distributes negative charge {remaining}", rule)
    share = remaining / len(recipients)
    for dst, enc in recipients:
        ledger.transfer(rule, src, dst, share, enc)


def _note_unclassified(ledger: ChargeLedger, emb: PlanarEmbedding, v: int, rule: str, seen: set) -> None:
    vc = emb.classes[v]
    if vc.tag.value == "unclassified-poor" and (v, rule) not in seen:
        seen.add((v, rule))
        ledger.flag("unclassified-poor-recipient", vid(v), f"{vc.degree}-vertex with no 3+-neighbors paid as poor", rule)


def apply_r1(emb: PlanarEmbedding, ledger: ChargeLedger, heavy: set[tuple[int, int]]) -> None:
    start = dict(ledger.charge)
    seen: set = set()
    cls = emb.classes
    for v in range(emb.n):
        d = emb.degree(v)
        if d < 5:
            continue
        src = vid(v)
        nbrs = sorted(emb.rotations[v])
        twos = [w for w in nbrs if cls[w].degree == 2]
        for w in twos:
            ledger.transfer("R1", src, vid(w), HALF)
        paid = HALF * len(twos)
        edges = [eid(v, w) for w in nbrs if (min(v, w), max(v, w)) in heavy]
        if d >= 8:
            for w in nbrs:
                if cls[w].is_needy:
                    _note_unclassified(ledger, emb, w, "R1a", seen)
                    ledger.transfer("R1a", src, vid(w), HALF)
            for e in edges:
                ledger.transfer("R1a", src, e, HALF)
        elif d == 7:
            for w in nbrs:
                if cls[w].is_5p or cls[w].is_6p:
                    _note_unclassified(ledger, emb, w, "R1b", seen)
                    ledger.transfer("R1b", src, vid(w), HALF)
                    paid += HALF
            recipients = [(vid(w), None) for w in nbrs if cls[w].is_5s] + [(e, None) for e in edges]
            _split(ledger, "R1b", src, start[src] - paid, recipients)
        else:
            fives = [w for w in nbrs if cls[w].is_5p]
            for w in fives:
                _note_unclassified(ledger, emb, w, "R1c", seen)
            recipients = [(vid(w), None) for w in fives] + [(e, None) for e in edges]
            _split(ledger, "R1c", src, start[src] - paid, recipients)


def apply_r2(emb: PlanarEmbedding, ledger: ChargeLedger, heavy: set[tuple[int, int]]) -> None:
    for u, v in sorted(heavy):
        e = eid(u, v)
        amount = ledger.charge[e]
        f1, f2 = emb.face_of(u, v), emb.face_of(v, u)
        if f1 == f2:
            ledger.flag("heavy-bridge", e, f"bridge pays both halves to {fid(f1)}", "R2")
        for f in (f1, f2):
            ledger.transfer("R2", e, fid(f), amount / 2)


def _face_r3(
    ledger: ChargeLedger,
    src: str,
    walk: Sequence[int],
    classes: Sequence[VertexClass],
    special: str | None,
    balance: Fraction,
    seen: set,
    emb: PlanarEmbedding,
) -> None:
    d = len(walk)
    enc = list(enumerate(walk))

    def pay(rule: str, pred, amount: Fraction) -> Fraction:
        total = Fraction(0)
        for i, v in enc:
            if pred(classes[i]):
                if classes[i].degree != 2:
                    _note_unclassified(ledger, emb, v, rule, seen)
                ledger.transfer(rule, src, vid(v), amount, i)
                total += amount
        return total

    def who(rule: str, pred) -> list[tuple[str, int]]:
        out = []
        for i, v in enc:
            if pred(classes[i]):
                _note_unclassified(ledger, emb, v, rule, seen)
                out.append((vid(v), i))
        return out

    paid = pay("R3", lambda c: c.degree == 2, HALF)
    twos = sum(1 for c in classes if c.degree == 2)
    needy = lambda c: c.is_needy  # noqa: E731

    if d >= 8:
        pay("R3a", needy, HALF)
    elif d == 7:
        if special == "F7":
            pay("R3b", lambda c: c.is_5s or c.is_6p, THREE_EIGHTHS)
        else:
            paid += pay("R3b", lambda c: c.is_5p or c.is_6p, HALF)
            _split(ledger, "R3b", src, balance - paid, who("R3b", lambda c: c.is_5s))
    elif d == 6:
        if special == "F6a":
            pay("R3c", lambda c: c.is_5p, THREE_EIGHTHS)
            pay("R3c", lambda c: c.is_6p, QUARTER)
        elif special == "F6b":
            pay("R3c", lambda c: c.is_6p, SIXTH)
        else:
            paid += pay("R3c", lambda c: c.is_5p, HALF)
            paid += pay("R3c", lambda c: c.is_5s or c.is_6p, QUARTER)
            _split(ledger, "R3c", src, balance - paid, who("R3c", lambda c: c.is_5s or c.is_6p))
    elif d == 5:
        if twos == 2:
            _split(ledger, "R3d", src, balance - paid, who("R3d", needy))
        elif twos >= 3:
            ledger.flag("five-face-many-2-vertices", src, f"{twos} encountered 2-vertices; no R3d sub-rule applies", "R3d")
        elif special in ("F5a", "F5b"):
            paid += pay("R3d", lambda c: c.is_6p, HALF)
            _split(ledger, "R3d", src, balance - paid, who("R3d", lambda c: c.is_5s))
        elif special in ("F5c", "F5d"):
            paid += pay("R3d", lambda c: c.is_5p or c.is_6p, QUARTER)
            _split(ledger, "R3d", src, balance - paid, who("R3d", lambda c: c.is_5s))
        else:
            paid += pay("R3d", needy, QUARTER)
            _split(ledger, "R3d", src, balance - paid, who("R3d", needy))


def apply_r3(emb: PlanarEmbedding, ledger: ChargeLedger, special: dict[int, str]) -> None:
    start = dict(ledger.charge)
    seen: set = set()
    for face in emb.faces:
        if face.degree < 5:
            continue
        src = fid(face.index)
        walk = face.walk
        classes = [emb.classes[v] for v in walk]
        _face_r3(ledger, src, walk, classes, special.get(face.index), start[src], seen, emb)


def apply_rules(
    emb: PlanarEmbedding, ledger: ChargeLedger, special: dict[int, str], *, check=None
) -> ChargeLedger:
    """Run R1, R2 and R3 in that order on ``ledger`` (modified in place).

    ``check`` is called with the phase name after each phase.
    """
    heavy = heavy_edges(emb)
    for name, phase in (
        ("R1", lambda: apply_r1(emb, ledger, heavy)),
        ("R2", lambda: apply_r2(emb, ledger, heavy)),
        ("R3", lambda: apply_r3(emb, ledger, special)),
    ):
        phase()
        if check is not None:
            check(name)
    return ledger
