import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import line_graph_distance
from packedge.coloring import (
    A1, A2, B1, B2, GOOD_SPEC,
    ColoringError, PackingSpec, format_certificate, parse_certificate,
    permute_classes, validate, validate_good, vertex_sees,
)
from packedge.families import make_g1, make_path, random_subcubic
from packedge.graph import MultiGraph


def test_spec_parsing_and_names():
    spec = PackingSpec.parse("1,1,2,2")
    assert spec == GOOD_SPEC == PackingSpec.from_counts(2, 2)
    assert spec.names == ["1_a", "1_b", "2_a", "2_b"]
    assert spec.index("2_b") == B2
    assert PackingSpec.parse("1,2,2,2").names == ["1_a", "2_a", "2_b", "2_c"]
    assert spec.classes_of_strength(2) == [A2, B2]
    for bad in ("", "0,1", "1,x", "3,-1"):
        with pytest.raises(ColoringError):
            PackingSpec.parse(bad)


def test_adjacent_same_matching_class_is_reported():
    g = make_path(3)
    bad = validate(g, GOOD_SPEC, {0: A1, 1: A1})
    assert [v.line() for v in bad] == ["V distance 0 1"]


def test_two_class_needs_distance_three():
    g = make_path(4)  # edges 0,1,2 in a row
    assert validate(g, GOOD_SPEC, {0: A2, 1: A1, 2: A2})
    assert not validate(g, GOOD_SPEC, {0: A1, 1: B1, 2: A1})


def test_missing_and_unknown_edges():
    g = make_path(3)
    assert [v.kind for v in validate(g, GOOD_SPEC, {0: A1}, require_total=True)] == ["uncolored-edge"]
    with pytest.raises(ColoringError):
        validate(g, GOOD_SPEC, {7: A1})
    with pytest.raises(ColoringError):
        validate(g, GOOD_SPEC, {0: 9})


def test_good_conditions():
    # path 0-1-2-3: 2_a and 2_b on the two end edges meet through vertex 1 and 2
    g = make_path(5)  # edges 0..3
    c = {0: A2, 1: A1, 2: B1, 3: B2}
    assert not validate(g, GOOD_SPEC, c)
    assert [v.kind for v in validate_good(g, c)] == ["good-condition-II"]
    c = {0: A2, 1: B2, 2: A1, 3: B1}
    assert "good-condition-I" in {v.kind for v in validate_good(g, c)}
    c = {0: A2, 1: A1, 2: B1, 3: A2}
    assert not validate_good(g, c)


def test_good_requires_good_spec():
    with pytest.raises(ColoringError):
        validate_good(make_path(2), {0: 0}, PackingSpec.parse("1,2"))


def test_vertex_sees():
    g = make_path(3)
    c = {0: A1, 1: B2}
    assert vertex_sees(g, c, 1, B2) and not vertex_sees(g, c, 0, B2)


def test_certificate_round_trip():
    c = {0: A1, 1: B1, 2: B1, 3: A1, 4: A1, 5: A2, 6: B2}
    text = format_certificate(GOOD_SPEC, c)
    assert parse_certificate(text) == (GOOD_SPEC, c)
    assert not validate(make_g1(), GOOD_SPEC, c, require_total=True)


@pytest.mark.parametrize("text", [
    "a 0 1_a\n",
    "c packing 1 1\na 0 2_a\n",
    "c packing 1 1\na x 1_a\n",
    "c packing 1 1\na 0 1_a\na 0 1_b\n",
    "c packing 1 1\nz\n",
])
def test_certificate_parse_errors(text):
    with pytest.raises(ColoringError):
        parse_certificate(text)


def test_permute_classes():
    assert permute_classes({0: A1, 1: A2}, (1, 0, 3, 2)) == {0: B1, 1: B2}


def _naive_valid(g, spec, c):
    # matchings for strength 1, pairwise line-distance > 2 for strength 2
    for e, f in itertools.combinations(g.edge_ids(), 2):
        if c[e] != c[f]:
            continue
        d = line_graph_distance(g, e, f)
        if spec.s[c[e]] == 1 and set(g.ends(e)) & set(g.ends(f)):
            return False
        if spec.s[c[e]] == 2 and d <= 2:
            return False
    return True


def _naive_good(g, c):
    if not _naive_valid(g, GOOD_SPEC, c):
        return False
    twos = [e for e in g.edge_ids() if c[e] in (A2, B2)]
    for e, f in itertools.combinations(twos, 2):
        if c[e] == c[f]:
            continue
        ee, ff = set(g.ends(e)), set(g.ends(f))
        if ee & ff:
            return False
        for x in ee:
            for y in ff:
                for w in set(g.neighbors(x)) & set(g.neighbors(y)):
                    if w not in ee and w not in ff:
                        return False
    return True


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 8), st.integers(0, 10_000), st.sampled_from(["1,1,2,2", "1,2,2,2", "1,1,2", "2,2,2,2"]))
def test_validate_matches_naive_checker(n, seed, spec_text):
    g = random_subcubic(n, seed)
    spec = PackingSpec.parse(spec_text)
    if g.m > 6:
        return
    for c in itertools.product(range(len(spec)), repeat=g.m):
        col = dict(zip(g.edge_ids(), c))
        assert (not validate(g, spec, col)) == _naive_valid(g, spec, col)
        if spec == GOOD_SPEC:
            assert (not validate_good(g, col)) == _naive_good(g, col)
