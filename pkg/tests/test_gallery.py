import pytest

from estar import gallery
from estar.errors import InputError, ResourceLimitError
from estar.graph import GSTAR_CHORDS


@pytest.mark.parametrize("name", gallery.NAMES)
def test_expected_verdicts_are_reproduced(name):
    e = gallery.entry(name)
    assert e.expected
    assert gallery.redecide(e) == e.expected


def test_larger_circulant_needs_a_wider_cap():
    e = gallery.entry("circulant-13-1-3")
    with pytest.raises(ResourceLimitError):
        gallery.redecide(e)


def test_circulant_13_is_strongly_equistarable():
    e = gallery.entry("circulant-13-1-3")
    assert gallery.redecide(e, max_bits=26) == e.expected


@pytest.mark.parametrize("name", ["petersen", "circulant-12-1-3", "circulant-5-1-3", "line-complement:nope"])
def test_unknown_names(name):
    with pytest.raises(InputError):
        gallery.entry(name)


def test_fifth_chord_is_unique():
    search = gallery.fifth_chord_search()
    assert len(search["candidates"]) == 23
    assert search["survivors"] == [[5, 8]]
    bad_triangle_free = [c["chord"] for c in search["candidates"] if c["triangle_free"] and c["bad"]]
    assert sorted(bad_triangle_free) == [[2, 8], [5, 8]]


def test_mirror_preserves_the_first_four_chords():
    four = {frozenset(c) for c in GSTAR_CHORDS[:4]}
    assert {frozenset(map(gallery.mirror, c)) for c in four} == four
    assert {gallery.mirror(3), gallery.mirror(7)} == {4, 9}
    assert {gallery.mirror(5), gallery.mirror(8)} == {2, 8}
    assert sorted(gallery.mirror(v) for v in range(1, 10)) == list(range(1, 10))


def test_bundle_layout():
    b = gallery.bundle("gstar")
    assert b["params"] == {"name": "gstar"}
    assert b["edge_list"].startswith("# gstar\n9 14\n1 2\n")
    assert [c["type"] for c in b["certificates"]] == ["badness", "equistarable", "strong-equistarability"]
    derived = gallery.bundle("line-complement:gstar")
    assert derived["params"] == {"root": "gstar"}
    assert "fifth_chord_search" not in derived
