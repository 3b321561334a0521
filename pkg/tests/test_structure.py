import math
import random

import pytest

from cubereps import cube, structure
from cubereps.cube import CubeState, apply_word, random_word
from cubereps.perm import Permutation, chain_build, compose
from cubereps.structure import (
    G2Element,
    G3Element,
    SubgroupTag,
    UnreachableState,
    alpha,
    build_m,
    build_transpositions,
    edge_flip_pair_word,
    edge_three_cycle,
    encode_g2,
    encode_g3,
    g2_inv,
    g2_mul,
    g3_mul,
    membership,
    phi,
    psi,
    psi_word,
    section_g2_in_g3,
    section_p,
    section_s8,
    sign_embed,
    superflip,
    superflip_state,
    word_element_g2,
    word_element_g3,
)

SOLVED2 = CubeState.solved(2)
SOLVED3 = CubeState.solved(3)


def test_phi_on_words_and_elements():
    assert phi("U") == Permutation.from_cycles("(1342)", 8)
    el = word_element_g2("U")
    assert phi(el) == el.perm
    assert phi("").is_identity()


def test_transposition_words():
    ts = build_transpositions()
    assert phi(ts["t1"]) == Permutation.from_cycles("(34)", 8)
    # the other two words land in the same-face-diagonal and long-diagonal
    # classes, as conjugates of (34) by the corner action of l
    lw = phi("L")
    assert phi(ts["t2"]) == compose(compose(lw, phi(ts["t1"])), lw.inverse())
    assert phi(ts["t2"]) == Permutation.from_cycles("(14)", 8)
    assert phi(ts["t3"]) == Permutation.from_cycles("(45)", 8)
    for w in ts.values():
        assert phi(w.then(w)).is_identity()  # transpositions square to 1


def test_word_k_is_in_kernel():
    el = word_element_g2(structure.WORD_K)
    assert el.perm.is_identity()
    assert any(el.twist) and sum(el.twist) % 3 == 0
    assert membership(SubgroupTag.K, el)


def test_alpha_of_h_is_edge_three_cycle():
    edges, corners = alpha(structure.WORD_H1)
    assert edges == Permutation.from_cycles("(abc)", 12)
    assert corners.is_identity()


def test_psi_matches_corner_actions():
    rng = random.Random(0)
    for _ in range(100):
        w = random_word(rng, rng.randrange(1, 20))
        renamed = psi_word(w)
        assert cube.corner_permutation(
            apply_word(SOLVED3, w)
        ) == cube.corner_permutation(apply_word(SOLVED2, renamed))
    # h on the 3x3 projects to the twist word k on the 2x2
    assert psi(word_element_g3(structure.WORD_H1)) == word_element_g2(structure.WORD_K)


def test_g2_mul_conjugation_data():
    k = G2Element((1, 2, 0, 0, 0, 0, 0, 0), Permutation.identity(8))
    n = section_s8(Permutation.from_cycles("(123)", 8))
    conj = g2_mul(g2_mul(n, k), g2_inv(n))
    assert conj.twist == (0, 1, 2, 0, 0, 0, 0, 0)
    comm = g2_mul(conj, g2_inv(k))
    assert comm.twist == (2, 2, 2, 0, 0, 0, 0, 0)
    assert comm.perm.is_identity()


def test_g2_mul_identity_and_inverse():
    rng = random.Random(1)
    for _ in range(50):
        x = word_element_g2(random_word(rng, 10))
        assert g2_mul(G2Element.identity(), x) == x
        assert g2_mul(x, g2_inv(x)).is_identity()


def test_encode_multiplicative():
    rng = random.Random(2)
    for _ in range(300):
        w1, w2 = random_word(rng, 10), random_word(rng, 10)
        lhs2 = encode_g2(apply_word(SOLVED2, w1.then(w2)))
        assert lhs2 == g2_mul(
            encode_g2(apply_word(SOLVED2, w2)), encode_g2(apply_word(SOLVED2, w1))
        )
        lhs3 = encode_g3(apply_word(SOLVED3, w1.then(w2)))
        assert lhs3 == g3_mul(
            encode_g3(apply_word(SOLVED3, w2)), encode_g3(apply_word(SOLVED3, w1))
        )


def test_encode_rejects_unreachable_states():
    with pytest.raises(UnreachableState):
        encode_g2(cube.twist_corner(SOLVED2, 1, 1))
    with pytest.raises(UnreachableState):
        encode_g3(cube.flip_edge(SOLVED3, 3))
    assert encode_g2(SOLVED2).is_identity()


def test_g3_element_invariants():
    with pytest.raises(ValueError):
        G3Element((1,) + (0,) * 11, (0,) * 8, alpha(""))
    with pytest.raises(ValueError):
        G3Element(
            (0,) * 12,
            (0,) * 8,
            (Permutation.from_cycles("(ab)", 12), Permutation.identity(8)),
        )


def test_edge_three_cycle_outputs():
    for target in ["abf", "cab", "aek", "jkl"]:
        w = edge_three_cycle(target)
        el = word_element_g3(w)
        assert el.pair[0] == Permutation.from_cycles(f"({target})", 12)
        assert membership(SubgroupTag.N, el)
        assert el.pair[0].sign() == 1


def test_edge_three_cycle_base_case():
    el = word_element_g3(edge_three_cycle("abf"))
    assert el.pair[0].cycle_string(letters=True) == "(abf)"


def test_edge_three_cycle_rejects_bad_input():
    with pytest.raises(ValueError):
        edge_three_cycle("aab")


def test_stock_generates_alternating_group():
    targets = ["abf", "cab", "dab", "gbf", "hcg", "eaf", "iaf", "jbf", "kcg", "ldh"]
    perms = [word_element_g3(edge_three_cycle(t)).pair[0] for t in targets]
    assert chain_build(perms).order() == math.factorial(12) // 2


def test_word_m_flips_c_and_g():
    el = word_element_g3(build_m())
    assert membership(SubgroupTag.M, el)
    assert el.flip == (0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0)
    m2 = build_m().then(build_m())
    assert apply_word(SOLVED3, m2) == SOLVED3  # order two


def test_edge_flip_pair_words():
    for x in (2, 7):
        el = word_element_g3(edge_flip_pair_word(x))
        assert membership(SubgroupTag.M, el)
        assert el.flip == tuple(1 if i + 1 in (1, x) else 0 for i in range(12))


def test_section_g2_in_g3():
    rng = random.Random(3)
    for _ in range(200):
        x = word_element_g2(random_word(rng, 10))
        y = word_element_g2(random_word(rng, 10))
        assert section_g2_in_g3(g2_mul(x, y)) == g3_mul(
            section_g2_in_g3(x), section_g2_in_g3(y)
        )
        img = section_g2_in_g3(x)
        assert psi(img) == x
        assert membership(SubgroupTag.P, img)
        if x.perm.sign() == 1:
            assert img.pair[0].is_identity()  # even part fixes the edges
    r2 = section_g2_in_g3(word_element_g2("R"))
    assert r2.pair[0] == Permutation.from_cycles("(bc)", 12)
    assert r2.pair[1] == Permutation.from_cycles("(2486)", 8)
    assert section_g2_in_g3(G2Element.identity()).is_identity()


def test_sign_embed():
    assert sign_embed(Permutation.identity(8)).is_identity()
    assert sign_embed(Permutation.from_cycles("(12)", 8)) == Permutation.from_cycles(
        "(bc)", 12
    )


def test_section_p():
    pair = alpha("U R")
    assert alpha(section_p(pair)) == pair


def test_membership_table():
    k_el = word_element_g2(structure.WORD_K)
    assert membership(SubgroupTag.K, k_el)
    assert membership(SubgroupTag.L, k_el)  # twists are even words
    u = word_element_g2("U")
    assert not membership(SubgroupTag.K, u)
    assert not membership(SubgroupTag.L, u)
    assert membership(SubgroupTag.H, section_s8(Permutation.from_cycles("(12)", 8)))
    n_el = word_element_g3(edge_three_cycle("abf"))
    assert membership(SubgroupTag.N, n_el)
    assert not membership(SubgroupTag.M, n_el)
    assert membership(SubgroupTag.J, word_element_g3(build_m()))
    assert membership(SubgroupTag.S, section_g2_in_g3(u))
    assert membership(SubgroupTag.A12, n_el.pair[0])
    assert membership(SubgroupTag.TRIVIAL, G2Element.identity())
    assert membership(SubgroupTag.FULL, u)


def test_membership_type_errors():
    with pytest.raises(TypeError):
        membership(SubgroupTag.K, word_element_g3("U"))
    with pytest.raises(TypeError):
        membership(SubgroupTag.A8, Permutation.identity(12))


def test_superflip_is_central_and_reachable():
    sf = superflip()
    rng = random.Random(4)
    for _ in range(50):
        g = word_element_g3(random_word(rng, 10))
        assert g3_mul(g, sf) == g3_mul(sf, g)
    assert g3_mul(sf, sf).is_identity()
    assert encode_g3(superflip_state()) == sf


def test_conjugation_law_by_simulation():
    # the twist of g k g^-1 at the sticker level equals the permuted twist
    rng = random.Random(5)
    for _ in range(20):
        w = random_word(rng, rng.randrange(1, 12))
        twist = [rng.randrange(3) for _ in range(7)]
        twist.append((-sum(twist)) % 3)
        pg = cube.sticker_perm_of_word(w, 2)
        pk = tuple(range(24))
        for pos, amt in enumerate(twist, start=1):
            if amt:
                pk = cube.compose_sticker_perms(
                    cube.sticker_perm_of_twist(pos, amt, 2), pk
                )
        conj = cube.compose_sticker_perms(
            cube.compose_sticker_perms(pg, pk), cube.invert_sticker_perm(pg)
        )
        state = cube.state_of_sticker_perm(conj, 2)
        sigma = cube.corner_permutation(apply_word(SOLVED2, w))
        want = tuple(twist[sigma.inverse()(i + 1) - 1] for i in range(8))
        assert cube.corner_orientation(state) == want
        assert cube.corner_permutation(state).is_identity()
