import random

import pytest

from cubereps import cube
from cubereps.cube import (
    CorruptedState,
    CubeState,
    MoveWord,
    WordError,
    apply_word,
    corner_orientation,
    corner_permutation,
    edge_orientation,
    edge_permutation,
    flip_edge,
    invariant_s,
    invariant_t,
    random_basis,
    random_word,
    twist_corner,
)
from cubereps.perm import Permutation

SOLVED2 = CubeState.solved(2)
SOLVED3 = CubeState.solved(3)

PHI = {
    "U": "(1342)",
    "D": "(5687)",
    "F": "(1265)",
    "B": "(3784)",
    "L": "(1573)",
    "R": "(2486)",
}
BETA = {
    "U": "(abcd)",
    "D": "(ilkj)",
    "B": "(aeif)",
    "F": "(cgkh)",
    "R": "(bfjg)",
    "L": "(dhle)",
}


@pytest.mark.parametrize("face,cycle", sorted(PHI.items()))
def test_generator_corner_permutations(face, cycle):
    got = corner_permutation(apply_word(SOLVED2, face))
    assert got == Permutation.from_cycles(cycle, 8)
    got3 = corner_permutation(apply_word(SOLVED3, face))
    assert got3 == Permutation.from_cycles(cycle, 8)


@pytest.mark.parametrize("face,cycle", sorted(BETA.items()))
def test_generator_edge_permutations(face, cycle):
    got = edge_permutation(apply_word(SOLVED3, face))
    assert got == Permutation.from_cycles(cycle, 12)


def test_u_has_order_four():
    assert apply_word(SOLVED2, "U U U U") == SOLVED2
    assert apply_word(SOLVED3, "U U U U") == SOLVED3


def test_word_then_inverse_restores_any_state():
    rng = random.Random(0)
    for _ in range(50):
        scramble = random_word(rng, 15)
        state = apply_word(SOLVED3, scramble)
        w = random_word(rng, 10)
        assert apply_word(state, w.then(w.inverse())) == state


def test_word_parsing_and_inverse():
    w = MoveWord.parse("U R' F2")
    assert str(w) == "U R' F2"
    assert str(w.inverse()) == "F2 R U'"
    with pytest.raises(WordError):
        MoveWord.parse("X")
    with pytest.raises(WordError):
        MoveWord.parse("U3")
    with pytest.raises(WordError):
        MoveWord.parse("u")


def test_corner_permutation_is_antihomomorphism_on_words():
    # chronological concatenation composes corner actions in reverse
    rng = random.Random(1)
    for _ in range(100):
        w1, w2 = random_word(rng, 8), random_word(rng, 8)
        lhs = corner_permutation(apply_word(SOLVED2, w1.then(w2)))
        p1 = corner_permutation(apply_word(SOLVED2, w1))
        p2 = corner_permutation(apply_word(SOLVED2, w2))
        assert lhs == p2 * p1


def test_corner_orientation_after_f():
    assert corner_orientation(apply_word(SOLVED2, "F")) == (1, 2, 0, 0, 2, 1, 0, 0)


def test_orientation_vectors_of_f_then_r():
    state = apply_word(SOLVED3, "F R")
    assert edge_orientation(state) == (0, 1, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0)
    assert corner_orientation(state) == (1, 2, 0, 1, 2, 2, 0, 1)


def test_solved_orientations_are_zero():
    assert corner_orientation(SOLVED2) == (0,) * 8
    assert edge_orientation(SOLVED3) == (0,) * 12


def test_invariants_on_random_words():
    rng = random.Random(2)
    for _ in range(300):
        w = random_word(rng, rng.randrange(1, 40))
        assert invariant_s(apply_word(SOLVED2, w)) == 0
        st = apply_word(SOLVED3, w)
        assert invariant_s(st) == 0
        assert invariant_t(st) == 0


def test_invariant_of_hundred_move_word():
    rng = random.Random(3)
    st = apply_word(SOLVED2, random_word(rng, 100))
    assert invariant_s(st) == 0


def test_single_twist_gives_invariant_one():
    assert invariant_s(twist_corner(SOLVED2, 1, 1)) == 1
    assert invariant_s(twist_corner(SOLVED2, 5, 2)) == 2
    assert invariant_t(flip_edge(SOLVED3, 7)) == 1


def test_twist_three_times_is_identity():
    st = twist_corner(twist_corner(twist_corner(SOLVED2, 4, 1), 4, 1), 4, 1)
    assert st == SOLVED2
    assert flip_edge(flip_edge(SOLVED3, 2), 2) == SOLVED3


def test_basis_independence_of_invariants():
    rng = random.Random(4)
    for _ in range(100):
        w = random_word(rng, rng.randrange(1, 25))
        b1, b2 = random_basis(rng), random_basis(rng)
        st3 = apply_word(SOLVED3, w)
        assert invariant_s(st3, b1) == invariant_s(st3, b2)
        assert invariant_t(st3, b1) == invariant_t(st3, b2)
        twisted = twist_corner(SOLVED2, rng.randrange(1, 9), rng.randrange(1, 3))
        assert invariant_s(twisted, b1) == invariant_s(twisted, b2)


def test_orientation_depends_on_basis_but_sum_does_not():
    rng = random.Random(5)
    state = apply_word(SOLVED3, "F R")
    seen = set()
    for _ in range(20):
        basis = random_basis(rng)
        vec = edge_orientation(state, basis)
        seen.add(vec)
        assert sum(vec) % 2 == invariant_t(state)
    assert len(seen) > 1


def test_corrupted_state_detection():
    bad = CubeState(2, (0,) * 24)
    with pytest.raises(CorruptedState):
        corner_permutation(bad)
    with pytest.raises(CorruptedState):
        corner_orientation(bad)
    bad3 = CubeState(3, (0,) * 48)
    with pytest.raises(CorruptedState):
        edge_permutation(bad3)


def test_edges_only_on_3x3():
    with pytest.raises(ValueError):
        edge_permutation(SOLVED2)


def test_json_round_trip_bit_exact():
    rng = random.Random(6)
    for _ in range(20):
        st = apply_word(SOLVED3, random_word(rng, 12))
        text = st.to_json()
        assert CubeState.from_json(text) == st
        assert CubeState.from_json(text).to_json() == text


def test_solved_state_shape():
    assert len(SOLVED2.stickers) == 24
    assert len(SOLVED3.stickers) == 48
    assert sorted(set(SOLVED3.stickers)) == [0, 1, 2, 3, 4, 5]
    with pytest.raises(ValueError):
        CubeState(4, (0,) * 96)
    with pytest.raises(ValueError):
        CubeState(2, (0,) * 48)


def test_center_facelets_never_stored_but_fixed():
    # every 3x3 generator table only moves the stored 48 stickers of its
    # own face layer; centers are implicit and untouched by construction
    for face in cube.FACES:
        table = cube.default_tables(3).face_tables[face]
        moved = [i for i, v in enumerate(table) if v != i]
        assert len(moved) == 20  # 8 face stickers + 12 side-layer stickers
