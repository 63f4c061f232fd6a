"""Data model: parsing, serialization, validation, structural transforms."""
import random

import pytest

import knotoids as K
from knotoids.errors import ParseError, ValidityError
from knotoids.vassiliev import random_classical_code, random_flat_code

from conftest import VK4


def test_parse_trivial():
    code = K.parse("E")
    assert code.chord_count() == 0
    assert len(code.components) == 1
    assert K.serialize(code) == "E"


def test_parse_kink():
    code = K.parse("O1+ U1+")
    assert code.kind == "Classical"
    assert len(code.open_component) == 2
    assert code.sign_of(1) == 1


def test_parse_rejects_bad_tokens():
    for text in ("O1 U1", "X1 X1", "A1+ B1+", "O1+", "SA1* SB1", "A0 B0",
                 "A1 B1* SA2* SB2"):
        with pytest.raises((ParseError, ValidityError)):
            K.parse(text)


def test_parse_rejects_structural_errors():
    with pytest.raises(ValidityError):
        K.parse("O1+ U2+ / O2+")          # chord 1 unpaired
    with pytest.raises(ValidityError):
        K.parse("O1+ O1+")                # two overpasses
    with pytest.raises(ValidityError):
        K.parse("O1+ U1-")                # sign mismatch
    with pytest.raises(ValidityError):
        K.parse("O1+ A2 U1+ B2")          # classical and flat mixed
    with pytest.raises(ValidityError):
        K.parse("SA1* SB1* SA2* SB2*")    # two preferred chords


def test_closed_component_canonical_rotation():
    a = K.parse("E / B2 A1 B1 A2")
    b = K.parse("E / B1 A2 B2 A1")
    assert a == b
    # rotation starts at the least (chord, role) pair: chord 1's tail
    assert K.serialize(a) == "E / A1 B1 A2 B2"
    assert K.serialize(a) == K.serialize(b)


def test_roundtrip_random():
    rng = random.Random(7)
    for _ in range(200):
        code = random_classical_code(rng.randrange(0, 6), rng)
        assert K.parse(K.serialize(code)) == code
        flat = random_flat_code(rng.randrange(0, 6), rng)
        assert K.parse(K.serialize(flat)) == flat


def test_flatten_kink():
    assert K.serialize(K.flatten(K.parse("O1+ U1+"))) == "A1 B1"
    assert K.serialize(K.flatten(K.parse("O1- U1-"))) == "B1 A1"


def test_flatten_is_identity_on_flat():
    code = K.parse("A1 B2 B1 A2")
    assert K.flatten(code) == code
    assert K.flatten(K.parse("E")) == K.parse("E")


def test_mirror_kink():
    assert K.serialize(K.mirror(K.parse("O1+ U1+"))) == "U1- O1-"


def test_mirror_reverse_involutions():
    rng = random.Random(11)
    for _ in range(100):
        code = random_classical_code(rng.randrange(1, 6), rng)
        assert K.mirror(K.mirror(code)) == code
        assert K.reverse(K.reverse(code)) == code
        assert K.mirror(K.reverse(code)) == K.reverse(K.mirror(code))


def test_flatten_mirror_equals_flatten():
    rng = random.Random(13)
    for _ in range(100):
        code = random_classical_code(rng.randrange(1, 6), rng)
        assert K.flatten(K.mirror(code)) == K.flatten(code)


def test_flatten_mirror_on_reference(vk4):
    assert K.flatten(K.mirror(vk4)) == K.flatten(vk4)


def test_reverse_preserves_flat_roles():
    code = K.parse("A1 B2 B1 A2")
    rev = K.reverse(code)
    assert K.serialize(rev) == "A2 B1 B2 A1"


def test_add_unknot():
    assert K.serialize(K.add_unknot(K.parse("E"))) == "E / E"
    assert K.serialize(K.add_unknot(K.parse("A1 B1"))) == "A1 B1 / E"
    code = K.parse(VK4)
    assert len(K.add_unknot(code).components) == len(code.components) + 1


def test_chord_ids_preserved_by_transforms(vk4):
    for out in (K.mirror(vk4), K.reverse(vk4), K.flatten(vk4)):
        assert out.chord_ids() == vk4.chord_ids()


def test_kind_detection():
    assert K.parse("O1+ U1+").kind == "Classical"
    assert K.parse("O1+ SA2 U1+ SB2").kind == "ClassicalSingular"
    assert K.parse("A1 B1").kind == "Flat"
    assert K.parse("SA1* SB1*").kind == "FlatSingular"
    assert K.parse("A1 SA2 B1 SB2").kind == "FlatSingular"


def test_ordered_view_requires_two_components():
    from knotoids.errors import ComponentCountError

    with pytest.raises(ComponentCountError):
        K.OrderedTwoComponent(K.parse("A1 B1"), 0, 1)
