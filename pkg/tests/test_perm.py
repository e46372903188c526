import random

import pytest

from gelfand.perm import (
    CycleParseError,
    compose,
    conjugate,
    cycle_string,
    cycle_type,
    cycles,
    identity,
    inverse,
    parse_cycles,
    perm_order,
)

# the twelve-point permutation from the worked coset-type example,
# given in two-line form as 1..12 -> 8,12,4,6,10,9,11,1,7,2,3,5
T12 = tuple(x - 1 for x in (8, 12, 4, 6, 10, 9, 11, 1, 7, 2, 3, 5))


def test_parse_empty_is_identity():
    assert parse_cycles("", 4) == identity(4)
    assert parse_cycles("()", 4) == identity(4)


def test_parse_single_transposition():
    assert parse_cycles("(1 2)", 3) == (1, 0, 2)


def test_parse_twelve_point_permutation():
    assert parse_cycles("(1 8)(2 12 5 10)(3 4 6 9 7 11)", 12) == T12


def test_parse_errors_name_the_token():
    with pytest.raises(CycleParseError, match="repeated point 2"):
        parse_cycles("(1 2)(2 3)", 4)
    with pytest.raises(CycleParseError, match="out of range"):
        parse_cycles("(1 5)", 4)
    with pytest.raises(CycleParseError, match="unclosed"):
        parse_cycles("(1 2", 4)
    with pytest.raises(CycleParseError, match="unmatched"):
        parse_cycles("(1 2))", 4)
    with pytest.raises(CycleParseError, match="outside parentheses"):
        parse_cycles("1 2", 4)
    with pytest.raises(CycleParseError, match="unexpected"):
        parse_cycles("(1 x)", 4)


def test_compose_identity_law():
    p = parse_cycles("(1 3 2)", 3)
    assert compose(identity(3), p) == p
    assert compose(p, identity(3)) == p


def test_compose_involution():
    t = parse_cycles("(1 2)", 3)
    assert compose(t, t) == identity(3)


def test_compose_applies_right_first():
    # (1 2) * (2 3) = (1 2 3)
    got = compose(parse_cycles("(1 2)", 3), parse_cycles("(2 3)", 3))
    assert got == parse_cycles("(1 2 3)", 3)


def test_compose_degree_mismatch():
    with pytest.raises(ValueError, match="degree mismatch"):
        compose(identity(3), identity(4))


def test_inverse_law():
    rng = random.Random(1)
    for _ in range(50):
        p = list(range(8))
        rng.shuffle(p)
        p = tuple(p)
        assert compose(p, inverse(p)) == identity(8)
        assert compose(inverse(p), p) == identity(8)


def test_conjugate_matches_composition():
    rng = random.Random(2)
    for _ in range(30):
        g = list(range(6))
        x = list(range(6))
        rng.shuffle(g)
        rng.shuffle(x)
        g, x = tuple(g), tuple(x)
        assert conjugate(g, x) == compose(compose(g, x), inverse(g))


def test_cycle_roundtrip():
    s = "(1 8)(2 12 5 10)(3 4 6 9 7 11)"
    assert cycle_string(parse_cycles(s, 12)) == s
    assert cycle_string(identity(5)) == "()"


def test_cycle_type_and_order():
    assert cycle_type(T12) == (6, 4, 2)
    assert perm_order(T12) == 12
    assert cycle_type(identity(4)) == (1, 1, 1, 1)
    assert cycles(identity(4)) == []
