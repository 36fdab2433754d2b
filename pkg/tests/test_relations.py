"""Tests for the bit-matrix relation oracle, independent of the coset engine."""

import random

import pytest

from groupra.groups import make_cyclic
from groupra.relations import (
    ConcreteRelation,
    cayley_relation,
    identity_on,
    rel_complement_within,
    rel_compose,
    rel_converse,
    rel_intersect,
    rel_union,
)


def mod3_cross(k):
    """Z6 rows 0..5, Z9 columns 6..14: pairs (a, 6+b) with b = a+k mod 3."""
    return ConcreteRelation.from_pairs(
        15, ((a, 6 + b) for a in range(6) for b in range(9) if b % 3 == (a + k) % 3)
    )


def random_relation(rng, size):
    pairs = [
        (i, j) for i in range(size) for j in range(size) if rng.random() < 0.3
    ]
    return ConcreteRelation.from_pairs(size, pairs)


def test_from_pairs_roundtrip():
    r = ConcreteRelation.from_pairs(4, [(3, 0), (1, 2), (1, 1)])
    assert r.pairs() == [(1, 1), (1, 2), (3, 0)]
    assert r.count() == 3
    assert (1, 2) in r
    assert (2, 1) not in r
    assert ConcreteRelation.empty(4).pairs() == []


def test_from_pairs_range_check():
    with pytest.raises(ValueError):
        ConcreteRelation.from_pairs(3, [(0, 3)])
    with pytest.raises(ValueError):
        ConcreteRelation.from_pairs(3, [(-1, 0)])


def test_mod3_relations_shape():
    for k in range(3):
        assert mod3_cross(k).count() == 18


def test_converse_swaps_pairs():
    r = mod3_cross(1)
    assert sorted(rel_converse(r).pairs()) == sorted((b, a) for a, b in r.pairs())


def test_compose_mod3():
    # R1 ; converse(R1) relates a to a' exactly when a = a' mod 3.
    r1 = mod3_cross(1)
    got = rel_compose(r1, rel_converse(r1))
    expected = ConcreteRelation.from_pairs(
        15, ((a, b) for a in range(6) for b in range(6) if a % 3 == b % 3)
    )
    assert got == expected


def test_union_rebuilds_rectangle():
    whole = rel_union(rel_union(mod3_cross(0), mod3_cross(1)), mod3_cross(2))
    rect = ConcreteRelation.from_pairs(
        15, ((a, 6 + b) for a in range(6) for b in range(9))
    )
    assert whole == rect


def test_intersect_of_distinct_atoms_is_empty():
    assert rel_intersect(mod3_cross(0), mod3_cross(1)) == ConcreteRelation.empty(15)


def test_complement_within():
    rect = ConcreteRelation.from_pairs(
        15, ((a, 6 + b) for a in range(6) for b in range(9))
    )
    got = rel_complement_within(mod3_cross(0), rect)
    assert got == rel_union(mod3_cross(1), mod3_cross(2))
    with pytest.raises(ValueError, match="not contained"):
        rel_complement_within(identity_on(15), rect)


def test_identity_neutral_for_compose():
    r = mod3_cross(2)
    assert rel_compose(identity_on(15), r) == r
    assert rel_compose(r, identity_on(15)) == r


def test_size_mismatch_rejected():
    with pytest.raises(ValueError, match="sizes differ"):
        rel_compose(identity_on(3), identity_on(4))
    with pytest.raises(ValueError, match="sizes differ"):
        rel_union(identity_on(3), identity_on(4))


def test_cayley_relation_basics():
    z6 = make_cyclic(6)
    r0 = cayley_relation(z6, 0)
    assert r0 == identity_on(6)
    r2 = cayley_relation(z6, 2)
    assert r2.pairs() == [(a, (a + 2) % 6) for a in range(6)]


def test_cayley_relations_compose_like_the_group():
    z6 = make_cyclic(6)
    for f in range(6):
        for g in range(6):
            composed = rel_compose(cayley_relation(z6, f), cayley_relation(z6, g))
            assert composed == cayley_relation(z6, z6.mul(f, g))


def test_cayley_relation_with_offset():
    z3 = make_cyclic(3)
    r = cayley_relation(z3, 1, offset=4, size=10)
    assert r.size == 10
    assert r.pairs() == [(4, 5), (5, 6), (6, 4)]


def test_oracle_laws_on_random_relations():
    rng = random.Random(5150)
    size = 7
    for _ in range(40):
        r = random_relation(rng, size)
        s = random_relation(rng, size)
        t = random_relation(rng, size)
        assert rel_converse(rel_converse(r)) == r
        assert rel_converse(rel_compose(r, s)) == rel_compose(
            rel_converse(s), rel_converse(r)
        )
        assert rel_compose(rel_compose(r, s), t) == rel_compose(r, rel_compose(s, t))
        assert rel_compose(r, rel_union(s, t)) == rel_union(
            rel_compose(r, s), rel_compose(r, t)
        )
        assert rel_converse(rel_union(r, s)) == rel_union(
            rel_converse(r), rel_converse(s)
        )
