"""Local configurations from the face and vertex charge arguments.

Every fixture is one face padded out to the required vertex classes.  The
padding uses leaves and 3-vertices only, so no heavy edge touches the face
and its R3 budget is exactly d(f) - 4.  Amounts below are worked out by hand
from the rule constants.
"""

from fractions import Fraction as Q

import pytest

from defectcolor.corpus import EmbeddingBuilder, face_with_classes
from defectcolor.discharge import audit
from defectcolor.discharge.rules import HALF, QUARTER, SIXTH, THREE_EIGHTHS

P5, S5, P6 = (5, 1), (5, 2), (6, 1)
TWO = (2, 0)


def r7(plus=3):
    return (7, plus)


def face_report(layout):
    emb = face_with_classes(layout)
    report = audit(emb)
    f = emb.face_of(0, 1)
    assert emb.faces[f].walk == tuple(range(len(layout)))
    paid = {}
    for t in report.transfers:
        if t.src == f"f{f}":
            paid.setdefault(t.encounter, []).append((t.rule, t.amount))
    return emb, report, f, paid


def labels(emb, k):
    return [emb.classes[v].label for v in range(k)]


# (name, layout, expected labels, template, per-position totals, final)
FACES = [
    (
        "6-face, two 2-vertices, one 5p",  # 2 - 1/2*3 - 1/4*2 = 0
        [TWO, P5, r7(), TWO, P6, S5],
        ["2", "5p", "7r", "2", "6p", "5s"],
        None,
        {0: HALF, 1: HALF, 3: HALF, 4: QUARTER, 5: QUARTER},
        Q(0),
    ),
    (
        "6-face, two 2-vertices, no 5p",  # 2 - 1/2*2 - 1/4*4 = 0
        [TWO, P6, S5, TWO, P6, S5],
        ["2", "6p", "5s", "2", "6p", "5s"],
        None,
        {0: HALF, 1: QUARTER, 2: QUARTER, 3: HALF, 4: QUARTER, 5: QUARTER},
        Q(0),
    ),
    (
        "F6a",  # 2 - 1/2*2 - 3/8*2 - 1/4 = 0
        [P5, (7, 2), P5, TWO, P6, TWO],
        ["5p", "7s", "5p", "2", "6p", "2"],
        "F6a",
        {0: THREE_EIGHTHS, 2: THREE_EIGHTHS, 3: HALF, 4: QUARTER, 5: HALF},
        Q(0),
    ),
    (
        "F6b",  # 2 - 1/2*3 - 1/6*3 = 0
        [TWO, P6, TWO, P6, TWO, P6],
        ["2", "6p"] * 3,
        "F6b",
        {0: HALF, 1: SIXTH, 2: HALF, 3: SIXTH, 4: HALF, 5: SIXTH},
        Q(0),
    ),
    (
        "6-face, three 2-vertices, not F6b",  # 2 - 1/2*3 - 1/4*2 = 0
        [TWO, P6, TWO, P6, TWO, r7()],
        ["2", "6p", "2", "6p", "2", "7r"],
        None,
        {0: HALF, 1: QUARTER, 2: HALF, 3: QUARTER, 4: HALF},
        Q(0),
    ),
    (
        "6-face, three 2-vertices and a 5p",  # 2 - 1/2*4 = 0
        [TWO, P5, TWO, r7(), TWO, r7()],
        ["2", "5p", "2", "7r", "2", "7r"],
        None,
        {0: HALF, 1: HALF, 2: HALF, 4: HALF},
        Q(0),
    ),
    (
        "6-face, three 2-vertices and a 5s",  # 2 - 1/2*3 - 1/4 - 1/4 = 0
        [TWO, S5, TWO, r7(), TWO, r7()],
        ["2", "5s", "2", "7r", "2", "7r"],
        None,
        {0: HALF, 1: HALF, 2: HALF, 4: HALF},
        Q(0),
    ),
    (
        "6-face, no 2-vertex, four 5s",  # 2 - 1/4*4 - remaining 1 split four ways
        [S5, S5, (9, 3), S5, S5, (9, 3)],
        ["5s", "5s", "9r", "5s", "5s", "9r"],
        None,
        {0: HALF, 1: HALF, 3: HALF, 4: HALF},
        Q(0),
    ),
    (
        "F7",  # 3 - 1/2*3 - 3/8*4 = 0
        [S5, TWO, P6, TWO, P6, TWO, P6],
        ["5s", "2", "6p", "2", "6p", "2", "6p"],
        "F7",
        {0: THREE_EIGHTHS, 1: HALF, 2: THREE_EIGHTHS, 3: HALF, 4: THREE_EIGHTHS, 5: HALF, 6: THREE_EIGHTHS},
        Q(0),
    ),
    (
        "7-face, six half payments",  # 3 - 1/2*6 = 0
        [TWO, P6, TWO, P6, TWO, P6, r7()],
        ["2", "6p", "2", "6p", "2", "6p", "7r"],
        None,
        {0: HALF, 1: HALF, 2: HALF, 3: HALF, 4: HALF, 5: HALF},
        Q(0),
    ),
    (
        "F5c",  # 1 - 1/2 - 1/4*2 = 0, nothing left for the 5s
        [TWO, P6, S5, r7(), P5],
        ["2", "6p", "5s", "7r", "5p"],
        "F5c",
        {0: HALF, 1: QUARTER, 4: QUARTER},
        Q(0),
    ),
    (
        "5-face, one 2-vertex, one 5s",  # 1 - 1/2 - 1/4 - remaining 1/4 to the 5s
        [TWO, r7(), S5, (4, 2), r7()],
        ["2", "7r", "5s", "4s", "7r"],
        None,
        {0: HALF, 2: HALF},
        Q(0),
    ),
    (
        "5-face, two 2-vertices",  # 1 - 1/2*2 leaves nothing to split
        [TWO, P6, TWO, r7(), S5],
        ["2", "6p", "2", "7r", "5s"],
        None,
        {0: HALF, 2: HALF},
        Q(0),
    ),
]


@pytest.mark.parametrize("name,layout,expect_labels,template,totals,final", FACES, ids=[f[0] for f in FACES])
def test_face_case(name, layout, expect_labels, template, totals, final):
    emb, report, f, paid = face_report(layout)
    assert labels(emb, len(layout)) == expect_labels
    assert report.special.get(f) == template
    got = {i: sum((a for _, a in rows), Q(0)) for i, rows in paid.items()}
    assert got == totals
    assert report.final[f"f{f}"] == final
    assert report.final[f"f{f}"] >= 0
    # fixed-amount rules pay exactly their constants
    for rows in paid.values():
        for rule, amount in rows:
            if rule == "R3":
                assert amount == HALF
    assert report.final_total == -8


def test_f7_pays_three_eighths_to_each_needy_vertex():
    emb, report, f, paid = face_report([S5, TWO, P6, TWO, P6, TWO, P6])
    for i in (0, 2, 4, 6):
        assert paid[i] == [("R3b", THREE_EIGHTHS)]
    for i in (1, 3, 5):
        assert paid[i] == [("R3", HALF)]


def test_f6b_pays_one_sixth():
    emb, report, f, paid = face_report([TWO, P6, TWO, P6, TWO, P6])
    for i in (1, 3, 5):
        assert paid[i] == [("R3c", SIXTH)]


def test_ordinary_6_face_pays_quarter_then_splits():
    emb, report, f, paid = face_report([S5, S5, (9, 3), S5, S5, (9, 3)])
    for i in (0, 1, 3, 4):
        assert paid[i] == [("R3c", QUARTER), ("R3c", QUARTER)]


def test_big_face_pays_cut_vertex_per_visit():
    # a 5p cut vertex with four pendant leaves and one 3-vertex neighbor;
    # the single face walks past it five times
    b = EmbeddingBuilder({0: []})
    b.attach_star(0)
    for _ in range(4):
        b.attach_leaf(0)
    emb = b.build()
    assert emb.classes[0].label == "5p"
    assert emb.face_count == 1 and emb.faces[0].degree == 14
    report = audit(emb)
    visits = [t for t in report.transfers if t.dst == "v0"]
    assert [t.amount for t in visits] == [HALF] * 5
    assert all(t.rule == "R3a" for t in visits)
    assert sum(t.amount for t in visits) >= 1
    # 14 - 4 - 5 * 1/2
    assert report.final["f0"] == Q(15, 2)


# --- vertices ---------------------------------------------------------------


def test_two_vertex_between_rich_vertices_ends_at_zero():
    emb = face_with_classes([TWO, r7(), r7(), r7(), r7()])
    report = audit(emb)
    got = sorted((t.rule, t.amount) for t in report.transfers if t.dst == "v0")
    assert got == [("R1", HALF), ("R1", HALF), ("R3", HALF), ("R3", HALF)]
    assert report.final["v0"] == 0  # 2 - 4 + 4 * 1/2


def spider(center_degree, extra=None):
    """A center whose neighbors are 2-vertices ending in leaves, plus ``extra``
    neighbors given as (degree, plus) targets."""
    b = EmbeddingBuilder({0: []})
    twos = []
    for _ in range(center_degree - len(extra or [])):
        x = b.attach_leaf(0)
        b.attach_leaf(x)
        twos.append(x)
    others = []
    for target in extra or []:
        y = b.attach_leaf(0)
        others.append((y, target))
    for y, (deg, plus) in others:
        b.pad({y: (deg, plus)})
    return b.build(), twos, [y for y, _ in others]


def test_eight_vertex_with_only_2_neighbors_ends_at_zero():
    emb, twos, _ = spider(8)
    report = audit(emb)
    out = [t for t in report.transfers if t.src == "v0"]
    assert [t.amount for t in out] == [HALF] * 8
    assert report.final["v0"] == 0  # 8 - 4 - 8 * 1/2


def test_seven_vertex_gives_half_and_splits_nothing():
    emb, twos, (y,) = spider(7, [S5])
    assert emb.classes[y].label == "5s"
    report = audit(emb)
    out = [(t.rule, t.amount) for t in report.transfers if t.src == "v0"]
    assert out == [("R1", HALF)] * 6
    assert report.final["v0"] == 0  # 7 - 4 - 6 * 1/2


def test_nine_vertex_feeds_5p_neighbor():
    emb, twos, (y,) = spider(9, [P5])
    assert emb.classes[y].label == "5p"
    report = audit(emb)
    got = [(t.rule, t.amount) for t in report.transfers if t.src == "v0" and t.dst == f"v{y}"]
    assert got == [("R1a", HALF)]
    assert report.final["v0"] == Q(1, 2)  # 9 - 4 - 9 * 1/2
