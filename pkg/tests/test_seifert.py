import pytest

from threebraid import words as w_
from threebraid.homology import determinant
from threebraid.seifert import (
    SeifertMatrix,
    SplitClosure,
    oracle_determinant,
    seifert_matrix,
    sym_determinant,
    sym_signature,
)
from threebraid.words import parse

from conftest import random_nonsplit_word, random_word


def test_calibration_trefoil():
    # Build gate: the closure of (x y)^2 is the right trefoil.
    matrix = seifert_matrix(parse("x y x y"))
    assert sym_determinant(matrix) == 3
    assert sym_signature(matrix) == -2


def test_calibration_figure_eight():
    matrix = seifert_matrix(parse("x y^-1 x y^-1"))
    assert sym_determinant(matrix) == 5
    assert sym_signature(matrix) == 0


def test_alternating_four_crossing_link():
    assert oracle_determinant(parse("x y y x")) == 4


def test_oracle_determinant_fixtures():
    assert oracle_determinant(parse("x y^-1")) == 1
    assert oracle_determinant(parse("y x^5")) == 5
    assert oracle_determinant(parse("x y^-1 x y^-1")) == 5


def test_torus_link_signatures():
    assert sym_signature(seifert_matrix(parse("y x^5"))) == -4
    assert sym_signature(seifert_matrix(parse("y^-1 x^-5"))) == 4


def test_matrix_size_and_bookkeeping():
    matrix = seifert_matrix(parse("x y x y"))
    assert matrix.size == len(parse("x y x y")) - 3 + 1
    assert matrix.generators == ((0, 0, 2), (1, 1, 3))

    # Free reduction happens first: x y y^-1 x y reduces to x x y.
    matrix = seifert_matrix(parse("x y y^-1 x y"))
    assert matrix.size == 1


def test_split_closure_errors():
    with pytest.raises(SplitClosure):
        seifert_matrix(parse("y^5"))
    with pytest.raises(SplitClosure):
        seifert_matrix(parse(""))
    with pytest.raises(SplitClosure):
        seifert_matrix(parse("x y y^-1 x"))  # reduces to x x


def test_sym_signature_small_matrices():
    assert sym_signature(SeifertMatrix((), ())) == 0
    assert sym_signature(SeifertMatrix(((-1,),), ((0, 0, 1),))) == -1
    # Hyperbolic plane: signature zero, determinant -1.
    hyperbolic = SeifertMatrix(((0, 1), (0, 0)), ((0, 0, 1), (0, 1, 2)))
    assert sym_signature(hyperbolic) == 0
    assert sym_determinant(hyperbolic) == 1


def test_oracle_agrees_with_representation_determinant(rng):
    for _ in range(400):
        word = random_nonsplit_word(rng, 16)
        assert oracle_determinant(word) == determinant(word)


def test_oracle_conjugation_invariance(rng):
    checked = 0
    for _ in range(400):
        word = random_nonsplit_word(rng, 12)
        u = random_word(rng, 6)
        conjugated = w_.free_reduce(w_.conjugate(word, u))
        if {letter.generator for letter in conjugated} != {"x", "y"}:
            continue
        assert oracle_determinant(conjugated) == oracle_determinant(word)
        checked += 1
    assert checked > 200


def test_mirror_signature_antisymmetry(rng):
    checked = 0
    for _ in range(300):
        word = random_nonsplit_word(rng, 14)
        if w_.components(word) != 1:
            continue
        assert sym_signature(seifert_matrix(w_.inverse(word))) == \
            -sym_signature(seifert_matrix(word))
        checked += 1
    assert checked > 50


def test_signature_bounded_by_size(rng):
    for _ in range(200):
        word = random_nonsplit_word(rng, 16)
        matrix = seifert_matrix(word)
        assert abs(sym_signature(matrix)) <= matrix.size
