"""Presentation parsing, serialization round-trips, base change, fixtures."""

import random

import pytest

import gcrs
from gcrs import (
    AlreadyExtendedError,
    DuplicateGeneratorError,
    NonHomogeneousRelationError,
    ParseError,
    PresentationError,
    base_change,
    parse_presentation,
    permute_generators,
    serialize_presentation,
)
from oracles import random_homogeneous

# frozen checksum of the shipped fixture; any transcription drift fails here
HS260_SHA256 = "22f0e4df5ddbcc3f1de0f068a4b106a40b64fb1bbdeea190ab9c189fc619a97b"


def test_fixture_shape(hs260):
    assert hs260.names == ("z", "y", "x", "w", "v", "u", "t", "s", "r", "q")
    assert hs260.degrees == (1, 1, 1, 2, 2, 3, 5, 5, 5, 8)
    assert len(hs260.relations) == 27
    assert all(f.is_homogeneous() for f in hs260.relations)
    assert hs260.meta["small_group_index"] == 139
    assert hs260.meta["hall_senior"] == 260
    assert hs260.meta["duflot_bound"] == 1
    assert hs260.meta["claimed_depth"] == 2


def test_fixture_checksum():
    assert gcrs.fixture_sha256("hs260") == HS260_SHA256


def test_fixture_relation_degrees(hs260):
    degrees = sorted(f.degree() for f in hs260.relations)
    assert degrees == [2, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6, 6, 6, 6, 6,
                       7, 7, 8, 8, 8, 9, 10, 10, 10, 10, 10, 10]


def test_round_trip_fixture(hs260):
    text = serialize_presentation(hs260)
    again = parse_presentation(text)
    assert again == hs260
    assert serialize_presentation(again) == text


def test_round_trip_randomized():
    rng = random.Random(99)
    ring = gcrs.Ring(gcrs.Field(2, 2), ("a", "b", "c"), (1, 2, 3))
    for _ in range(25):
        rels = []
        for _ in range(rng.randint(0, 4)):
            f = random_homogeneous(ring, rng, rng.randint(2, 6), 4)
            if f:
                rels.append(f)
        pres = gcrs.Presentation(ring, tuple(rels), {"group_name": "demo"})
        assert parse_presentation(serialize_presentation(pres)) == pres


def test_relation_canonical_order(hs260):
    # serializer emits each relation with terms descending in the ambient order
    text = serialize_presentation(hs260)
    rel_lines = [line[4:] for line in text.splitlines() if line.startswith("rel ")]
    ring = hs260.ring
    for line, poly in zip(rel_lines, hs260.relations):
        keys = [ring.order.key(p) for p, _ in ring.parse(line)._terms]
        assert keys == sorted(keys, reverse=True)
        assert str(poly) == line


def test_gen_line_format(hs260):
    assert "gen q 8" in serialize_presentation(hs260).splitlines()


def test_empty_relation_list_is_valid():
    pres = parse_presentation("field 2\ngen z 1\n")
    assert pres.relations == ()
    assert pres.names == ("z",)


def test_non_homogeneous_relation_names_degrees():
    text = "field 2\ngen z 1\ngen w 2\nrel z + w\n"
    with pytest.raises(NonHomogeneousRelationError) as err:
        parse_presentation(text)
    assert {err.value.degree_a, err.value.degree_b} == {1, 2}
    assert err.value.line == 4


def test_duplicate_generator():
    with pytest.raises(DuplicateGeneratorError) as err:
        parse_presentation("field 2\ngen z 1\ngen z 2\n")
    assert err.value.line == 3


def test_every_malformed_line_is_a_single_positioned_diagnostic():
    cases = [
        ("field 2\nbogus z 1\n", ParseError, 2),
        ("field 2\ngen z\n", ParseError, 2),
        ("field 2\ngen z 1\nrel z*\n", ParseError, 3),
        ("field 2\ngen z 1\nrel y\n", gcrs.UnknownGeneratorError, 3),
        ("field 4\ngen z 1\n", gcrs.NotPrimeError, None),
        ("field 2\ngen z 1\nmeta duflot_bound x\n", ParseError, 3),
    ]
    for text, exc, line in cases:
        with pytest.raises(exc) as err:
            parse_presentation(text)
        if line is not None:
            assert err.value.line == line, text


def test_structural_validation():
    with pytest.raises(PresentationError):
        parse_presentation("gen z 1\n")  # no field line
    with pytest.raises(PresentationError):
        parse_presentation("field 2\nfield 2\ngen z 1\n")  # duplicate field
    with pytest.raises(PresentationError):
        parse_presentation("field 2\n")  # no generators
    with pytest.raises(PresentationError):
        parse_presentation("field 2\ngen z 1\nrel 0\n")  # zero relation
    with pytest.raises(PresentationError):
        parse_presentation("field 2\ngen z 0\n")  # degree 0 generator


def test_extension_field_lines():
    pres = parse_presentation("field 2^2\ngen a 1\nrel a^2 + (@)*a^2\n")
    assert pres.field.q == 4
    assert pres.field.modulus == (1, 1, 1)
    explicit = parse_presentation("field 2^2 mod 1+@+@^2\ngen a 1\n")
    assert explicit.field == pres.field


def test_base_change_preserves_structure(hs260, hs260_f4):
    assert hs260_f4.field.q == 4
    assert hs260_f4.names == hs260.names
    assert hs260_f4.degrees == hs260.degrees
    assert len(hs260_f4.relations) == len(hs260.relations)
    for f2rel, f4rel in zip(hs260.relations, hs260_f4.relations):
        assert f4rel.term_count() == f2rel.term_count()
        assert f4rel.degree() == f2rel.degree()
        # every coefficient lies in the image of the prime-field embedding
        assert all(c < 2 for _, c in f4rel._terms)
    assert hs260_f4.meta["base_change"] == "from F_2"


def test_base_change_round_trips_through_gcr(hs260_f4):
    text = serialize_presentation(hs260_f4)
    assert parse_presentation(text) == hs260_f4


def test_base_change_rejects_extensions(hs260, hs260_f4):
    with pytest.raises(AlreadyExtendedError):
        base_change(hs260_f4, 2)
    with pytest.raises(ValueError):
        base_change(hs260, 1)


def test_permute_generators(hs260):
    names = tuple(reversed(hs260.names))
    flipped = permute_generators(hs260, names)
    assert flipped.names == names
    assert flipped.degrees == tuple(reversed(hs260.degrees))
    assert len(flipped.relations) == 27
    back = permute_generators(flipped, hs260.names)
    assert back == gcrs.Presentation(hs260.ring, hs260.relations, dict(hs260.meta))
    with pytest.raises(ValueError):
        permute_generators(hs260, hs260.names[:-1])


def test_comments_and_blank_lines():
    text = "# header\nfield 2\n\ngen z 1  # inline\nrel z^2 # comment\n"
    pres = parse_presentation(text)
    assert len(pres.relations) == 1
    assert str(pres.relations[0]) == "z^2"
