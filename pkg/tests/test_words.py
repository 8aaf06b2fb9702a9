import pytest

from threebraid import words as w_
from threebraid.words import (
    BraidWord,
    MalformedExponent,
    UnknownToken,
    components,
    concat,
    exponent_sum,
    free_reduce,
    inverse,
    parse,
    permutation,
)

from conftest import random_word


def test_parse_negative_exponent():
    assert parse("x y^-2").letters == (w_.X, w_.Y_INV, w_.Y_INV)


def test_parse_full_twist_macro():
    assert parse("h").letters == (w_.X, w_.Y, w_.X, w_.Y, w_.X, w_.Y)


def test_parse_braid_generator_spellings():
    assert parse("s1 s2^-1") == parse("x y^-1")


def test_parse_zero_exponent_is_empty():
    assert parse("x^0") == BraidWord()


def test_parse_unknown_token_position():
    with pytest.raises(UnknownToken) as excinfo:
        parse("x z")
    assert excinfo.value.position == 2


def test_parse_malformed_exponent():
    for text in ("x^", "y^1.5", "x^--2", "h^a"):
        with pytest.raises(MalformedExponent):
            parse(text)


def test_exponent_sum():
    assert exponent_sum(BraidWord()) == 0
    assert exponent_sum(parse("h")) == 6
    assert exponent_sum(parse("x y^-2")) == -1


def test_inverse_and_free_reduce():
    assert str(inverse(parse("x y"))) == "y^-1 x^-1"
    assert str(free_reduce(parse("x x^-1 y"))) == "y"
    assert free_reduce(concat(parse("x"), parse("x^-1"))) == BraidWord()


def test_rendering_round_trips():
    for text in ("", "x", "x y^-2", "h x y^-5", "x^3 y^-4 x"):
        assert parse(str(parse(text))) == parse(text)


def test_permutation_fixtures():
    assert permutation(parse("h")).images == (1, 2, 3)
    assert components(parse("h")) == 3
    assert components(parse("x y^-5")) == 1
    assert components(parse("x^-2 y^-1")) == 2


def test_permutation_matches_transposition_product():
    # Independent route: multiply transpositions as dictionaries.
    def apply(mapping, i):
        return mapping.get(i, i)

    flip_x = {1: 2, 2: 1}
    flip_y = {2: 3, 3: 2}
    word = parse("x y^-5 x^-1 y x")
    current = {1: 1, 2: 2, 3: 3}
    for letter in word:
        flip = flip_x if letter.generator == "x" else flip_y
        current = {i: apply(flip, current[i]) for i in (1, 2, 3)}
    expected = tuple(current[i] for i in (1, 2, 3))
    assert permutation(word).images == expected


def test_free_reduce_idempotent_and_exponent_invariants(rng):
    for _ in range(300):
        w = random_word(rng, 30)
        u = random_word(rng, 10)
        reduced = free_reduce(w)
        assert free_reduce(reduced) == reduced
        assert exponent_sum(reduced) == exponent_sum(w)
        assert exponent_sum(w_.conjugate(w, u)) == exponent_sum(w)
        assert exponent_sum(inverse(w)) == -exponent_sum(w)


def test_permutation_is_homomorphism(rng):
    for _ in range(300):
        u = random_word(rng, 15)
        w = random_word(rng, 15)
        assert permutation(concat(u, w)) == permutation(u).then(permutation(w))


def test_components_conjugation_invariant(rng):
    for _ in range(300):
        u = random_word(rng, 10)
        w = random_word(rng, 20)
        assert components(w_.conjugate(w, u)) == components(w)
