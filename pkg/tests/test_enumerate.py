import pytest

from oracles import all_octagon_pair_diagrams, isomorphic
from rgcr.diagrams import canonical_form, mirror, verify
from rgcr.enumerate import (
    SearchLimits,
    SearchTooLargeError,
    enumerate_diagrams,
    find_knots,
    gluing_classes,
    polygon_layout,
)
from rgcr.signatures import TilingSignature, count_bounds, signature_from_pair, special_case_k1


@pytest.fixture(scope="module")
def genus_two_octagons():
    return enumerate_diagrams(special_case_k1(2))


@pytest.fixture(scope="module")
def genus_three_octagons():
    return enumerate_diagrams(signature_from_pair(3, 8, 8))


def test_octagon_knot_exists(genus_two_octagons):
    result = genus_two_octagons
    assert result.knot_count == 1
    assert sorted(d.components for d in result.diagrams) == [1, 2, 3, 4]
    assert find_knots(special_case_k1(2)) == [d.canonical for d in result.knots]


def test_octagons_match_naive_search(genus_two_octagons):
    naive = sorted(canonical_form(m) for m in all_octagon_pair_diagrams())
    assert naive == [d.canonical for d in genus_two_octagons.diagrams]


def test_genus_three_octagons_differ_in_components(genus_three_octagons):
    result = genus_three_octagons
    counts = {d.components for d in result.diagrams}
    assert len(counts) >= 2
    assert len(result.diagrams) == 127
    assert result.knot_count == 17


@pytest.mark.parametrize(
    "sig, diagrams, components",
    [
        (TilingSignature(1, 4, 4, 1, 1), 1, [2]),
        (TilingSignature(1, 3, 6, 2, 1), 1, [3]),
        (TilingSignature(1, 4, 4, 3, 3), 2, [2, 4]),
        (signature_from_pair(2, 5, 10), 6, [1, 1, 2, 3, 3, 5]),
        (signature_from_pair(2, 6, 6), 9, None),
        (signature_from_pair(2, 4, 12), 6, [1, 1, 2, 2, 2, 4]),
    ],
)
def test_small_catalogs(sig, diagrams, components):
    result = enumerate_diagrams(sig)
    assert len(result.diagrams) == diagrams
    if components is not None:
        assert sorted(d.components for d in result.diagrams) == components


def test_minimal_square_weave_is_a_two_component_link():
    result = enumerate_diagrams(TilingSignature(1, 4, 4, 1, 1))
    assert find_knots(TilingSignature(1, 4, 4, 1, 1)) == []
    assert result.diagrams[0].report.face_vector == (4, 4)


def test_every_emitted_diagram_passes(genus_two_octagons, genus_three_octagons):
    for result in (genus_two_octagons, genus_three_octagons):
        keys = [d.canonical for d in result.diagrams]
        assert keys == sorted(set(keys))
        for d in result.diagrams:
            assert d.report.ok and d.report.genus == result.signature.g
            assert set(d.report.edge_class_sizes) == {4}
            assert canonical_form(d.smap) == d.canonical
            assert verify(d.smap) == d.report


def test_count_below_link_bound(genus_three_octagons):
    assert len(genus_three_octagons.diagrams) <= count_bounds(3).link_bound


def test_worker_count_does_not_change_output():
    sig = signature_from_pair(2, 5, 10)
    serial = enumerate_diagrams(sig, workers=1)
    parallel = enumerate_diagrams(sig, workers=3)
    assert serial == parallel


def test_mirror_closure():
    sig = signature_from_pair(2, 5, 10)
    plain = enumerate_diagrams(sig, mirror_quotient=False)
    keys = {d.canonical for d in plain.diagrams}
    assert {canonical_form(mirror(d.smap), mirror_quotient=False) for d in plain.diagrams} == keys
    quotient = enumerate_diagrams(sig)
    # one chiral pair collapses under the mirror quotient
    assert len(plain.diagrams) == len(quotient.diagrams) + 1
    assert {canonical_form(d.smap) for d in plain.diagrams} == {d.canonical for d in quotient.diagrams}


def test_diagrams_pairwise_non_isomorphic(genus_two_octagons):
    ds = genus_two_octagons.diagrams
    for i, a in enumerate(ds):
        for b in ds[i + 1:]:
            assert not isomorphic(a.smap, b.smap)


def test_classes_bound_the_catalog():
    sig = signature_from_pair(2, 6, 6)
    found, leaves = gluing_classes(sig)
    result = enumerate_diagrams(sig)
    assert leaves == result.gluings_explored
    assert leaves >= len(found) >= len(result.diagrams)


def test_search_too_large():
    with pytest.raises(SearchTooLargeError, match="20 edges exceeds the cap of 12"):
        enumerate_diagrams(signature_from_pair(2, 5, 5), SearchLimits(max_edges=12))


def test_torus_needs_counts():
    with pytest.raises(ValueError):
        polygon_layout(TilingSignature(1, 4, 4))
    assert polygon_layout(TilingSignature(1, 3, 6, 2, 1)) == [3, 3, 6]
