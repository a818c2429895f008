"""Smoke tests for the python bindings: one pass over every exposed surface,
with values small enough to check by eye."""

import pytest

import lpcat


def test_pattern_construction_and_validation():
    p = lpcat.LinkPattern([(0, 1), (2, 3)], strands=2)
    assert p.strands == 2
    assert p.points == 4
    assert p.partner(0) == 1
    assert p.has_link(2, 3)
    assert p.pairs() == [(0, 1), (2, 3)]
    assert str(p) == "n=2;0-1,2-3"

    with pytest.raises(lpcat.Error, match="crossing"):
        lpcat.LinkPattern([(0, 2), (1, 3)], strands=2)
    with pytest.raises(lpcat.Error, match="matching"):
        lpcat.LinkPattern([(0, 1)], strands=2)


def test_pattern_surgery_and_action():
    p = lpcat.LinkPattern([(0, 1), (2, 3)], strands=2)
    grown = lpcat.insert_strand(p, 4)
    assert str(grown) == "n=3;0-1,2-3,4-5"
    assert lpcat.delete_strand(grown, 4) == p

    q, loops = lpcat.apply_generator(p, 1)
    assert str(q) == "n=2;0-3,1-2"
    assert loops == 0
    _, loops = lpcat.apply_word(p, [1, 1])
    assert loops == 1

    assert lpcat.exposure(q) == 2
    pre = lpcat.preimages(q, 3)
    assert pre == lpcat.brute_preimages(q, 3) == [p, q]


def test_tree_navigation():
    r = lpcat.root("lp")
    assert str(r) == "n=1;0-1"
    assert lpcat.label(r) == 2
    kids = lpcat.children(r)
    assert [str(k) for k in kids] == ["n=2;0-1,2-3", "n=2;0-3,1-2"]
    assert lpcat.parent(kids[1]) == r
    assert lpcat.child_rank(kids[1]) == 2
    assert lpcat.child(r, 2) == kids[1]

    code = lpcat.path_code(kids[0])
    assert code == [1]
    assert lpcat.node_at("lp", code) == kids[0]

    with pytest.raises(lpcat.Error, match="at-root"):
        lpcat.parent(r)


def test_level_iteration_and_counts():
    level = list(lpcat.iterate_level("dyck", 3))
    assert [d.word for d in level] == ["UDUDUD", "UDUUDD", "UUDDUD", "UUDUDD", "UUUDDD"]
    assert lpcat.count_level("perm", 6) == 132
    assert {str(p) for p in lpcat.iterate_level("lp", 4)} == {
        str(p) for p in lpcat.brute_patterns(4)
    }

    it = lpcat.iterate_level("lp", 6)
    for _ in it:
        pass
    assert it.max_frames <= 7


def test_conversions_carry_statistics():
    for pattern in lpcat.iterate_level("lp", 5):
        path = lpcat.convert(pattern, "dyck")
        assert lpcat.last_descent_length(path) == lpcat.exposure(pattern)
        assert lpcat.peaks(path) == lpcat.interaction(pattern) + 1
        assert lpcat.convert(path, "lp") == pattern

    record = lpcat.stat_record(lpcat.parse("n=2;0-1,2-3", "lp"))
    assert record == {
        "family": "lp",
        "level": 2,
        "label": 2,
        "exposure": 1,
        "interaction": 1,
    }


def test_exact_counting():
    assert lpcat.catalan(14) == 2674440
    assert lpcat.catalan(50) == 1978261657756160653623774456
    assert lpcat.binomial(100, 50) == 100891344545564193334812497256
    n = 9
    histo = lpcat.histogram("lp", n, "exposure", jobs=2)
    assert histo == {k: lpcat.count_by_exposure(n, k) for k in range(1, n + 1)}
    assert sum(histo.values()) == lpcat.catalan(n)
    assert lpcat.histogram("dyck", 4, "peaks") == {
        p: lpcat.count_by_interaction(4, p - 1) for p in range(1, 5)
    }


def test_relations():
    report = lpcat.check_relations(3)
    assert report.basis_size == 5
    assert report.core_pass()
    literal = report.literal_commutation()
    assert literal is not None and not literal.passed
    w = literal.witness
    assert lpcat.apply_word(w, [literal.i, literal.j]) != lpcat.apply_word(
        w, [literal.j, literal.i]
    )


def test_codec_and_render():
    p = lpcat.parse("n=2;1-2,3-0", "lp")
    assert lpcat.encode(p) == "n=2;0-3,1-2"
    assert lpcat.render(p) == ".-----.\n| .-. |\n0 1 2 3\n"
    assert lpcat.render(lpcat.DyckPath("UUDD")) == " /\\\n/  \\\n"
    assert lpcat.render(p, format="svg-chord").startswith("<svg")

    with pytest.raises(lpcat.Error, match="parse"):
        lpcat.parse("n=2;0-1,", "lp")
    with pytest.raises(lpcat.Error, match="crossing"):
        lpcat.parse("n=2;0-2,1-3", "lp")
    with pytest.raises(ValueError, match="family"):
        lpcat.parse("n=1;0-1", "nope")


def test_value_semantics():
    a = lpcat.LinkPattern([(0, 1)], strands=1)
    b = lpcat.parse("n=1;0-1", "lp")
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1
    assert sorted(lpcat.iterate_level("perm", 3)) == sorted(lpcat.brute_avoiders(3))
