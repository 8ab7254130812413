"""Tests for the state-sum torsion, skein triples and structural identities."""

import pytest

from models.laurent import LaurentPoly
from models.report import IdentityOptions
from services.check_service import clasp_expected
from utils.errors import IndexRangeError


def test_clasp_torsion(torsion_service, clasp1):
    state_sum = torsion_service.state_sum(clasp1)
    assert len(state_sum.records) == 3
    assert state_sum.polynomial.to_text() == "h1^-1 + h2^-1 - h1^-1*h2^-1"
    assert [r.sign for r in state_sum.records] == [-1, 1, 1]


@pytest.mark.parametrize("linking", [1, 2, 3])
def test_clasp_family(torsion_service, diagram_service, linking):
    state_sum = torsion_service.state_sum(diagram_service.clasp(linking))
    assert len(state_sum.records) == 2 * linking + 1
    assert state_sum.polynomial == clasp_expected(linking)


def test_clasp2_text(torsion_service, load_fixture):
    poly = torsion_service.torsion_polynomial(load_fixture("clasp2"))
    assert poly.to_text() == "h1^-2 + h1^-1*h2^-1 + h2^-2 - h1^-2*h2^-1 - h1^-1*h2^-2"


def test_trefoil_torsion(torsion_service, trefoil):
    assert torsion_service.torsion_polynomial(trefoil).to_text() == "h1 - 1 + h1^-1"


@pytest.mark.parametrize("name", ["braid3", "twist1", "trivial2"])
def test_braids_have_trivial_torsion(torsion_service, load_fixture, name):
    diagram = load_fixture(name)
    assert torsion_service.torsion_polynomial(diagram) == LaurentPoly.one(diagram.strands)


def test_split_diagram_multiplies_blocks(torsion_service, diagram_service, clasp1, trefoil):
    combined = diagram_service.amalgamate(clasp1, trefoil)
    state_sum = torsion_service.state_sum(combined)
    expected = (torsion_service.torsion_polynomial(clasp1).embed(3, 0)
                * torsion_service.torsion_polynomial(trefoil).embed(3, 2))
    assert state_sum.polynomial == expected
    assert len(state_sum.records) == 9
    assert all(len(r.state.quadrants) == 6 for r in state_sum.records)


def test_mirror_inverts_variables(torsion_service, diagram_service, clasp1):
    mirrored = torsion_service.state_sum(diagram_service.mirror(clasp1))
    assert sorted(r.filt2 for r in mirrored.records) == [(0, 2), (2, 0), (2, 2)]
    assert mirrored.polynomial == torsion_service.torsion_polynomial(clasp1).invert_variables()


def test_specialize_to_closure(torsion_service, clasp1):
    one = LaurentPoly.one(2)
    assert torsion_service.specialize_to_closure(clasp1, 1) == one
    assert torsion_service.specialize_to_closure(clasp1, 2) == one
    with pytest.raises(IndexRangeError):
        torsion_service.specialize_to_closure(clasp1, 3)


def test_skein_triple_torsions(torsion_service, trefoil, load_fixture):
    entry = torsion_service.verify_skein(trefoil, 1)
    assert entry.crossing == 1
    assert entry.strand == 1
    assert entry.plus == torsion_service.torsion_polynomial(trefoil)
    assert entry.minus == torsion_service.torsion_polynomial(load_fixture("unknot_switched"))


def test_identities_amalgam_and_mirror(torsion_service, clasp1, trefoil):
    report = torsion_service.verify_identities(
        clasp1, trefoil, IdentityOptions(compose=False, mirror=True)
    )
    assert report.holds
    assert [c.name for c in report.checks] == ["amalgam", "mirror"]


def test_skein_report_covers_self_crossings(torsion_service, clasp1, trefoil):
    assert len(torsion_service.verify_skein_all(trefoil).entries) == 3
    assert [e.crossing for e in torsion_service.verify_skein_all(clasp1).entries] == [0]


def test_compose_identity(torsion_service, clasp1):
    report = torsion_service.verify_identities(
        clasp1, clasp1, IdentityOptions(amalgam=False, mirror=False)
    )
    assert [c.name for c in report.checks] == ["compose"]
    assert report.holds


def test_satellite_identity_is_exact(torsion_service, clasp1):
    report = torsion_service.verify_identities(
        clasp1, options=IdentityOptions(mirror=False, satellite_strand=2, satellite_width=2)
    )
    check, = report.checks
    assert check.name == "satellite"
    assert check.holds
    assert check.detail == "exact"


def test_skein_factor_agrees_across_trefoil_crossings(torsion_service, trefoil):
    entries = torsion_service.verify_skein_all(trefoil).entries
    assert all(entry.holds for entry in entries)
    # the three smoothings are the same diagram and every switch unknots the strand
    assert {entry.factor for entry in entries} == {entries[0].factor}
    assert all(entry.unit == entries[0].unit for entry in entries)
    assert all(entry.zero == entries[0].zero for entry in entries)


@pytest.mark.parametrize("left, right", [
    ("clasp1", "trefoil"),
    ("clasp1", "clasp2"),
    ("trefoil", "braid3"),
    ("three_strand_alternating", "trefoil"),
])
def test_amalgam_state_count_is_a_product(torsion_service, diagram_service, load_fixture, left, right):
    first, second = load_fixture(left), load_fixture(right)
    combined = torsion_service.state_sum(diagram_service.amalgamate(first, second))
    assert len(combined.records) == (len(torsion_service.state_sum(first).records)
                                     * len(torsion_service.state_sum(second).records))
