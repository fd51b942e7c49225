import itertools
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defectcolor.corpus import EmbeddingBuilder, cycle, dodecahedron, face_with_classes, gen_random, star
from defectcolor.discharge import (
    AmbiguousMatch,
    ChargeLedger,
    ConservationBroken,
    audit,
    check_lemmas,
    init_charges,
    load_templates,
    match_special_faces,
    token_matches,
)
from defectcolor.discharge.templates import match_face
from defectcolor.graph import VertexClass, VertexTag

TAGS = {"p": VertexTag.POOR, "s": VertexTag.SEMI_POOR, "r": VertexTag.RICH, "u": VertexTag.UNCLASSIFIED_POOR}
PLUS = {"p": 1, "s": 2, "r": 3, "u": 0}
SYMBOLS = ["2", "3r", "5p", "5s", "5r", "5u", "6p", "6s", "6r", "6u", "7p", "7s", "7r", "9p", "9s", "9r"]


def vc(symbol):
    if symbol == "2":
        return VertexClass(2, VertexTag.TWO, 0)
    return VertexClass(int(symbol[:-1]), TAGS[symbol[-1]], PLUS[symbol[-1]])


def classes(*symbols):
    return [vc(s) for s in symbols]


def test_tokens():
    assert token_matches("2", vc("2"))
    assert token_matches("5p", vc("5u"))  # poor includes no 3+-neighbors
    assert not token_matches("5p", vc("5s"))
    assert token_matches("7s+", vc("9r")) and token_matches("7s+", vc("7s"))
    assert not token_matches("7s+", vc("7p")) and not token_matches("7s+", vc("6r"))
    assert token_matches("7r+|9s+", vc("9s")) and not token_matches("7r+|9s+", vc("7s"))
    assert token_matches("3+", vc("3r")) and not token_matches("3+", vc("2"))


def test_table_loads_every_template():
    t = load_templates()
    assert sorted(t) == ["F5a", "F5b", "F5c", "F5d", "F6a", "F6b", "F7"]
    assert [t[k].degree for k in ("F5a", "F6a", "F6b", "F7")] == [5, 6, 6, 7]
    assert t["F5b"].open_fields == [2]


@pytest.mark.parametrize(
    "walk,name",
    [
        (("2", "6p", "2", "6p", "2", "6p"), "F6b"),
        (("6p", "2", "6p", "2", "6p", "2"), "F6b"),
        (("5s", "2", "6p", "2", "6p", "2", "6p"), "F7"),
        (("6p", "2", "6p", "2", "6p", "2", "5s"), "F7"),
        (("5p", "7s", "5p", "2", "6p", "2"), "F6a"),
        (("2", "6p", "5s", "7r", "5p"), "F5c"),
        (("5p", "7r", "5s", "6p", "2"), "F5c"),
        (("2", "6p", "5s", "9s", "5s"), "F5d"),
        (("2", "6p", "6s", "7s", "5s"), "F5a"),
        (("2", "6p", "7p", "5s", "7p"), "F5b"),
        (("9r", "9r", "9r", "9r", "9r", "9r"), None),
        (("2", "6p", "2", "6p", "2", "5p"), None),
        (("5s", "2", "6p", "2", "6p", "2", "6s"), None),
        (("2", "6p", "5s", "7s", "5p"), None),
    ],
)
def test_template_matches(walk, name):
    assert match_face(classes(*walk), load_templates()) == name


def test_five_face_templates_are_mutually_exclusive():
    # each 5-face template holds exactly one 2-vertex, so fixing it first is
    # enough to see every face any of them can match
    t = load_templates()
    five = {k: p for k, p in t.items() if p.degree == 5}
    assert all(p.two_count == 1 for p in five.values())
    rest = [s for s in SYMBOLS if s != "2"]
    hits = {k: 0 for k in five}
    for tail in itertools.product(rest, repeat=4):
        cl = classes("2", *tail)
        names = [k for k, p in five.items() if p.matches(cl)]
        assert len(names) <= 1, (tail, names)
        for k in names:
            hits[k] += 1
    assert all(hits.values()), hits


def test_six_and_seven_face_templates_are_mutually_exclusive():
    t = load_templates()
    # F6a and F6b differ in their number of 2-vertices
    assert t["F6a"].two_count == 2 and t["F6b"].two_count == 3
    alphabet = ["2", "5p", "5s", "6p", "7s", "9r"]
    for walk in itertools.product(alphabet, repeat=6):
        assert sum(p.matches(classes(*walk)) for p in t.values()) <= 1


def test_ambiguous_table_is_an_error():
    t = load_templates()
    dup = {"F6b": t["F6b"], "copy": t["F6b"]}
    with pytest.raises(AmbiguousMatch):
        match_face(classes("2", "6p", "2", "6p", "2", "6p"), dup)


def test_initial_charges():
    for emb, total in ((cycle(5), -8), (dodecahedron(), -8), (star(3), -8)):
        assert init_charges(emb).total() == total
    led = init_charges(star(3))
    assert led.charge["v0"] == -1 and led.charge["v1"] == -3
    assert sorted(q for x, q in led.charge.items() if led.kind[x] == "face") == [2]


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 250), st.integers(0, 10**6))
def test_conservation_on_random_graphs(n, seed):
    emb = gen_random(n, seed)
    rep = audit(emb)
    assert rep.initial_total == rep.final_total == -8
    led = rep.ledger
    for x in led.charge:
        assert led.charge[x] == led.initial[x] + led.received(x) - led.sent(x)
    assert all(q == 0 for x, q in led.charge.items() if led.kind[x] == "edge")


def test_dodecahedron_audit():
    rep = audit(dodecahedron())
    assert rep.transfers == []
    assert rep.lemmas() == {"2.1", "2.2"}
    assert {q for x, q in rep.final.items() if rep.ledger.kind[x] == "vertex"} == {-1}
    assert {q for x, q in rep.final.items() if rep.ledger.kind[x] == "face"} == {1}


def test_c5_audit():
    rep = audit(cycle(5))
    assert rep.lemmas() == {"2.1", "2.3(i)"}
    assert sorted(rep.negative) == sorted([f"v{i}" for i in range(5)] + ["f0", "f1"])
    assert rep.final["f0"] == Fraction(-3, 2) and rep.final["v0"] == -1


def test_three_vertex_is_flagged():
    emb = face_with_classes([(3, 2), (2, 0), (6, 1), (2, 0), (6, 1)])
    assert "2.2" in {v.lemma for v in check_lemmas(emb)}


def f6b_next_to_five_face():
    # hexagon 0..5 with 2-vertices 0, 2, 4; pentagon 1, 0, 5, 6, 7 with 2-vertices 0, 6
    b = EmbeddingBuilder.from_faces([[0, 1, 2, 3, 4, 5], [1, 0, 5, 6, 7]])
    return b.pad({1: (6, 1), 3: (6, 1), 5: (6, 1), 7: (7, 3)}).build()


def test_f6b_beside_a_five_face_with_two_2_vertices():
    emb = f6b_next_to_five_face()
    special = match_special_faces(emb)
    assert special.get(emb.face_of(0, 1)) == "F6b"
    found = [v for v in check_lemmas(emb, special) if v.lemma == "2.5"]
    assert len(found) == 1
    assert found[0].witnesses[1] == f"f{emb.face_of(1, 0)}"


def test_one_vertex_switch():
    emb = star(3)
    assert not any(v.lemma == "1-vertex" for v in check_lemmas(emb))
    assert sum(v.lemma == "1-vertex" for v in check_lemmas(emb, no_1_vertex=True)) == 3


def test_report_json():
    rep = audit(cycle(5))
    d = json.loads(rep.to_json())
    assert set(d) == {"totals", "elements", "special_faces", "negative", "transfers", "anomalies", "lemma_violations"}
    assert d["totals"] == {"initial": "-8/1", "final": "-8/1"}
    assert all(t["amount"] == "1/2" for t in d["transfers"])


def test_leaky_transfer_is_caught(monkeypatch):
    def leaky(self, rule, src, dst, amount, encounter=None):
        self.charge[src] -= amount
        self.charge[dst] += amount / 2

    monkeypatch.setattr(ChargeLedger, "transfer", leaky)
    with pytest.raises(ConservationBroken):
        audit(cycle(5))
