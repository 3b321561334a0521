"""Group structure of the cube groups: homomorphisms, kernels, sections.

The 2x2 group is modeled as sum-zero corner twists extended by corner
permutations; the 3x3 group as sum-zero edge flips and corner twists
extended by a sign-matched pair of permutations.  Products are written
right-to-left (``a * b`` applies ``b`` first), matching the convention of
the permutation module; a chronological move word therefore maps to the
reversed product of its tokens, and ``word_element_g2`` /
``word_element_g3`` are the single place where that reversal happens.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import cube
from .cube import (
    CubeState,
    MoveTables,
    MoveWord,
    apply_word,
    commutator,
    corner_orientation,
    corner_permutation,
    edge_orientation,
    edge_permutation,
    product,
    word,
)
from .perm import EDGE_LETTERS, Permutation, compose


class UnreachableState(ValueError):
    """A sticker state outside the cube group (bad invariant or signs)."""


# ---------------------------------------------------------------------------
# Semidirect-product elements


def _permuted(vector: tuple[int, ...], perm: Permutation) -> tuple[int, ...]:
    """Entry i of the result is entry perm^-1(i) of the input."""
    inv = perm.inverse()
    return tuple(vector[inv(i + 1) - 1] for i in range(len(vector)))


@dataclass(frozen=True)
class G2Element:
    """(corner twists, corner permutation); twists sum to 0 mod 3."""

    twist: tuple[int, ...]
    perm: Permutation

    def __post_init__(self):
        if len(self.twist) != 8 or any(not 0 <= v < 3 for v in self.twist):
            raise ValueError("twist must be 8 values in Z_3")
        if sum(self.twist) % 3:
            raise ValueError("twist entries must sum to zero")
        if self.perm.degree != 8:
            raise ValueError("corner permutation must have degree 8")

    @classmethod
    def identity(cls) -> "G2Element":
        return cls((0,) * 8, Permutation.identity(8))

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.twist)


def g2_mul(x: G2Element, y: G2Element) -> G2Element:
    """(k, s)(k', s') = (k + s.k', ss') where (s.k')_i = k'_{s^-1(i)}."""
    moved = _permuted(y.twist, x.perm)
    twist = tuple((a + b) % 3 for a, b in zip(x.twist, moved))
    return G2Element(twist, compose(x.perm, y.perm))


def g2_inv(x: G2Element) -> G2Element:
    inv = x.perm.inverse()
    twist = tuple((-v) % 3 for v in _permuted(x.twist, inv))
    return G2Element(twist, inv)


@dataclass(frozen=True)
class G3Element:
    """(edge flips, corner twists, (edge perm, corner perm)).

    Flips and twists sum to zero; the two permutations have equal sign.
    """

    flip: tuple[int, ...]
    twist: tuple[int, ...]
    pair: tuple[Permutation, Permutation]

    def __post_init__(self):
        if len(self.flip) != 12 or any(not 0 <= v < 2 for v in self.flip):
            raise ValueError("flip must be 12 values in Z_2")
        if sum(self.flip) % 2:
            raise ValueError("flip entries must sum to zero")
        if len(self.twist) != 8 or sum(self.twist) % 3:
            raise ValueError("twist must be 8 values in Z_3 summing to zero")
        edges, corners = self.pair
        if edges.degree != 12 or corners.degree != 8:
            raise ValueError("pair must have degrees (12, 8)")
        if edges.sign() != corners.sign():
            raise ValueError("edge and corner permutations must have equal sign")

    @classmethod
    def identity(cls) -> "G3Element":
        return cls(
            (0,) * 12, (0,) * 8, (Permutation.identity(12), Permutation.identity(8))
        )

    def is_identity(self) -> bool:
        return (
            self.pair[0].is_identity()
            and self.pair[1].is_identity()
            and not any(self.flip)
            and not any(self.twist)
        )


def g3_mul(x: G3Element, y: G3Element) -> G3Element:
    flip = tuple(
        (a + b) % 2 for a, b in zip(x.flip, _permuted(y.flip, x.pair[0]))
    )
    twist = tuple(
        (a + b) % 3 for a, b in zip(x.twist, _permuted(y.twist, x.pair[1]))
    )
    return G3Element(
        flip, twist, (compose(x.pair[0], y.pair[0]), compose(x.pair[1], y.pair[1]))
    )


def g3_inv(x: G3Element) -> G3Element:
    e_inv, c_inv = x.pair[0].inverse(), x.pair[1].inverse()
    flip = tuple((-v) % 2 for v in _permuted(x.flip, e_inv))
    twist = tuple((-v) % 3 for v in _permuted(x.twist, c_inv))
    return G3Element(flip, twist, (e_inv, c_inv))


# ---------------------------------------------------------------------------
# Encoding states and words


def encode_g2(state: CubeState, basis=cube.REFERENCE_BASIS) -> G2Element:
    """Read a 2x2 state off as a group element; raises on unreachable states."""
    if state.size != 2:
        raise ValueError("encode_g2 expects a 2x2 state")
    if cube.invariant_s(state, basis):
        raise UnreachableState("corner orientation sum is nonzero")
    return G2Element(corner_orientation(state, basis), corner_permutation(state))


def encode_g3(state: CubeState, basis=cube.REFERENCE_BASIS) -> G3Element:
    if state.size != 3:
        raise ValueError("encode_g3 expects a 3x3 state")
    if cube.invariant_s(state, basis):
        raise UnreachableState("corner orientation sum is nonzero")
    if cube.invariant_t(state, basis):
        raise UnreachableState("edge orientation sum is nonzero")
    edges, corners = edge_permutation(state), corner_permutation(state)
    if edges.sign() != corners.sign():
        raise UnreachableState("edge and corner permutation signs differ")
    return G3Element(
        edge_orientation(state, basis),
        corner_orientation(state, basis),
        (edges, corners),
    )


def word_element_g2(
    w: MoveWord | str, tables: MoveTables | None = None
) -> G2Element:
    """Group element of a chronological word (the reversed token product)."""
    if isinstance(w, str):
        w = MoveWord.parse(w)
    return encode_g2(apply_word(CubeState.solved(2), w, tables))


def word_element_g3(
    w: MoveWord | str, tables: MoveTables | None = None
) -> G3Element:
    if isinstance(w, str):
        w = MoveWord.parse(w)
    return encode_g3(apply_word(CubeState.solved(3), w, tables))


# ---------------------------------------------------------------------------
# The quotient maps


def phi(g: G2Element | MoveWord | str) -> Permutation:
    """Corner permutation of a 2x2 element or word."""
    if isinstance(g, G2Element):
        return g.perm
    if isinstance(g, str):
        g = MoveWord.parse(g)
    return corner_permutation(apply_word(CubeState.solved(2), g))


def psi_word(w: MoveWord | str) -> MoveWord:
    """Rename a 3x3 word to the 2x2: tokens are unchanged, edges forgotten."""
    if isinstance(w, str):
        w = MoveWord.parse(w)
    return w


def psi(x: G3Element) -> G2Element:
    """Forget the edges of a 3x3 element."""
    return G2Element(x.twist, x.pair[1])


def alpha(g: G3Element | MoveWord | str) -> tuple[Permutation, Permutation]:
    """(edge permutation, corner permutation) of a 3x3 element or word."""
    if isinstance(g, G3Element):
        return g.pair
    if isinstance(g, str):
        g = MoveWord.parse(g)
    state = apply_word(CubeState.solved(3), g)
    return (edge_permutation(state), corner_permutation(state))


def beta(g: G3Element | MoveWord | str) -> Permutation:
    return alpha(g)[0]


# ---------------------------------------------------------------------------
# Constructive words
#
# The named elements below are spelled as chronological move words for the
# right-to-left products that define them, and each is pinned by a test on
# its image: phi(T1) = (34), alpha(H1) = ((abc), 1), beta(H2) = (cgh),
# beta(H3) = (bjg), m with flips exactly at c and g.

WORD_H1 = word("U2 R' U2 R U R' U R")  # beta = (abc), corners twist in place
WORD_H2 = word("F2 U' F2 U F U' F U")  # beta = (cgh)
WORD_H3 = word("R2 F' R2 F R F' R F")  # beta = (bjg)
WORD_K = WORD_H1  # on the 2x2: a nontrivial pure corner twist

# t1 = u^-1 g2 with g1 = r d r^-1 f^-1, g2 = g1 u g1 u^-1, spelled
# chronologically (rightmost factor of each product first)
WORD_T1 = word("U' F' R' D R U F' R' D R U'")


def build_transpositions() -> dict[str, MoveWord]:
    """Words t1, t2, t3 whose corner images are the three transposition
    classes: adjacent (34), same-face diagonal, long diagonal."""
    lw = word("L")
    t2 = product(lw, WORD_T1, lw.inverse())
    t3 = product(lw, lw, WORD_T1, lw.inverse(), lw.inverse())
    return {"t1": WORD_T1, "t2": t2, "t3": t3}


def build_m() -> MoveWord:
    """The edge-flip word m = [h3^-1, h1][h2, h1^-1]."""
    return product(
        commutator(WORD_H3.inverse(), WORD_H1), commutator(WORD_H2, WORD_H1.inverse())
    )


# ---------------------------------------------------------------------------
# Edge three-cycles in the corner-fixing kernel
#
# Seeds: for a face A and an adjacent face B, the word A2 B' A2 B A B' A B
# cycles three of A's edges while twisting corners in place.  Commutators
# of seeds fix the corners entirely, and the growing procedure below
# assembles a word with edge action (e1 x y) for every edge triple,
# starting from {a, b, f} and adding c, d, g, h, e, i, j, k, l in order.

_EDGE_OF_LETTER = {ch: i + 1 for i, ch in enumerate(EDGE_LETTERS)}

_GROWTH_SCHEDULE: list[tuple[str, str, str]] = [
    ("c", "a", "b"),
    ("d", "a", "b"),
    ("g", "b", "f"),
    ("h", "c", "g"),
    ("e", "a", "f"),
    ("i", "a", "f"),
    ("j", "b", "f"),
    ("k", "c", "g"),
    ("l", "d", "h"),
]

_STAGE = {"a": 0, "b": 0, "f": 0}
for _n, (_e1, _, _) in enumerate(_GROWTH_SCHEDULE, start=1):
    _STAGE[_e1] = _n

_ADJACENT = {
    "U": "FRBL",
    "D": "FLBR",
    "F": "URDL",
    "B": "ULDR",
    "L": "UFDB",
    "R": "UBDF",
}


def _cycle_of_perm(p: Permutation) -> tuple[int, ...] | None:
    cycles = p.cycles()
    if len(cycles) == 1 and len(cycles[0]) == 3:
        return cycles[0]
    return None


def _canonical(cycle: tuple[int, ...]) -> tuple[int, ...]:
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


def _cycle_perm(cycle: tuple[int, ...]) -> Permutation:
    return Permutation.from_cycles([cycle], 12)


class EdgeCycleWords:
    """Words in the corner-fixing kernel realizing edge three-cycles."""

    def __init__(self):
        self._seeds: dict[tuple[int, ...], MoveWord] = {}
        for main in cube.FACES:
            for side in _ADJACENT[main]:
                w = word(f"{main}2 {side}' {main}2 {side} {main} {side}' {main} {side}")
                cyc = _cycle_of_perm(beta(w))
                if cyc is None:
                    raise AssertionError(f"seed {main}/{side} is not a 3-cycle")
                self._seeds[_canonical(cyc)] = w
        self._stock: dict[tuple[int, ...], MoveWord] = {}

    def seed_word(self, cycle: tuple[int, ...]) -> MoveWord:
        """A corner-twisting word with the given edge 3-cycle."""
        key = _canonical(cycle)
        if key in self._seeds:
            return self._seeds[key]
        rev = _canonical((cycle[0], cycle[2], cycle[1]))
        if rev in self._seeds:
            return self._seeds[rev].inverse()
        raise KeyError(f"no seed realizes the cycle {cycle}")

    def three_cycle(self, targets: tuple[int, int, int] | str) -> MoveWord:
        """A word fixing the corners entirely whose edge action is the
        3-cycle (e1 x y) on the given labels (letters a..l or 1..12)."""
        if isinstance(targets, str):
            labels = tuple(_EDGE_OF_LETTER[ch] for ch in targets)
        else:
            labels = tuple(targets)
        if len(set(labels)) != 3:
            raise ValueError("need three distinct edge labels")
        return self._get(labels)

    def even_edge_word(self, sigma: Permutation) -> MoveWord:
        """A corner-fixing word with the given even edge action."""
        if sigma.degree != 12 or sigma.sign() != 1:
            raise ValueError("edge permutation must be even of degree 12")
        factors: list[tuple[int, ...]] = []
        current = sigma
        while not current.is_identity():
            a = next(i for i in range(1, 13) if current(i) != i)
            b = current(a)
            c = current(b)
            if c == a:
                c = next(
                    i for i in range(1, 13) if i not in (a, b) and current(i) != i
                )
            # (a c b) o current fixes a and does not enlarge the support
            factors.append((a, c, b))
            current = compose(_cycle_perm((a, c, b)), current)
        # sigma = delta_1^-1 o ... o delta_k^-1, so delta_k^-1 acts first
        out = MoveWord(())
        for cyc in reversed(factors):
            out = out.then(self.three_cycle(cyc).inverse())
        assert beta_of_factors(out) == sigma
        return out

    # -- growing procedure ---------------------------------------------

    def _get(self, cycle: tuple[int, ...]) -> MoveWord:
        key = _canonical(cycle)
        if key in self._stock:
            return self._stock[key]
        rev = _canonical((cycle[0], cycle[2], cycle[1]))
        if rev in self._stock:
            w = self._stock[rev].inverse()
            self._stock[key] = w
            return w
        w = self._build(cycle)
        self._stock[_canonical(cycle)] = w
        return w

    def _build(self, cycle: tuple[int, ...]) -> MoveWord:
        # rotate so the letter added latest in the growing order leads;
        # a rotated presentation is the same cycle, hence the same word
        latest = max(cycle, key=lambda v: _STAGE[EDGE_LETTERS[v - 1]])
        i = cycle.index(latest)
        cycle = cycle[i:] + cycle[:i]
        e1, x, y = (EDGE_LETTERS[v - 1] for v in cycle)
        if _STAGE[e1] == 0:
            # base: [h1, h'] with beta(h1) = (abc), beta(h') = (afe)
            base = commutator(
                self.seed_word(_labels("abc")), self.seed_word(_labels("afe"))
            )
            target = _cycle_perm(_labels("abf"))
            if _cycle_perm(cycle) == target:
                return base
            if _cycle_perm(cycle) == target.inverse():
                return base.inverse()
            raise AssertionError("base case must be a cycle on a, b, f")
        _, e2, e3 = next(row for row in _GROWTH_SCHEDULE if row[0] == e1)
        if x == e2 and y == e3:
            return self._case_two(e1, x, y)
        if x == e3 and y == e2:
            return self._case_two(e1, e2, e3).inverse()
        if x in (e2, e3):
            return self._case_one(e1, y, x, e2, e3).inverse()
        return self._case_one(e1, x, y, e2, e3)

    def _case_one(self, e1: str, x: str, y: str, e2: str, e3: str) -> MoveWord:
        """x is outside {e2, e3}; n = [h, n1] n2."""
        h = self.seed_word(_labels(e1 + e2 + e3))
        n1 = self._get(_labels(e2 + e3 + x))
        if y == e2:
            n2 = self._get(_labels(e2 + x + e3))
        elif y == e3:
            n2 = self._get(_labels(e2 + e3 + x))
        else:
            # (e2 e3)(x y) = (e2 x e3) o (e2 x y)
            n2 = product(self._get(_labels(e2 + x + e3)), self._get(_labels(e2 + x + y)))
        return product(commutator(h, n1), n2)

    def _case_two(self, e1: str, x: str, y: str) -> MoveWord:
        """(x, y) = (e2, e3); n = n1 [h, n1] with n1 = (x z y)."""
        h = self.seed_word(_labels(e1 + x + y))
        z = next(ch for ch in "abfcdghei" if ch not in (x, y) and _STAGE[ch] < _STAGE[e1])
        n1 = self._get(_labels(x + z + y))
        return product(n1, commutator(h, n1))


def _labels(letters: str) -> tuple[int, ...]:
    return tuple(_EDGE_OF_LETTER[ch] for ch in letters)


def beta_of_factors(w: MoveWord) -> Permutation:
    """Edge action of a word computed by simulation."""
    return edge_permutation(apply_word(CubeState.solved(3), w))


_EDGE_CYCLES: EdgeCycleWords | None = None


def edge_cycle_words() -> EdgeCycleWords:
    global _EDGE_CYCLES
    if _EDGE_CYCLES is None:
        _EDGE_CYCLES = EdgeCycleWords()
    return _EDGE_CYCLES


def edge_three_cycle(targets: tuple[int, int, int] | str) -> MoveWord:
    """Word in the corner-fixing kernel with edge action (e1 x y)."""
    return edge_cycle_words().three_cycle(targets)


def edge_flip_pair_word(x: int) -> MoveWord:
    """Word flipping edges a and x in place (the basis vectors q_x)."""
    if not 2 <= x <= 12:
        raise ValueError("x must be an edge position 2..12")
    m = build_m()
    c_pos, g_pos = 3, 7
    sigma = _even_perm_mapping({c_pos: 1, g_pos: x})
    conj = edge_cycle_words().even_edge_word(sigma)
    return product(conj, m, conj.inverse())


def _even_perm_mapping(constraints: dict[int, int]) -> Permutation:
    """An even degree-12 permutation satisfying the given point images."""
    image = [0] * 12
    used = set()
    for src, dst in constraints.items():
        image[src - 1] = dst
        used.add(dst)
    free_src = [i for i in range(1, 13) if not image[i - 1]]
    free_dst = [v for v in range(1, 13) if v not in used]
    for s, d in zip(free_src, free_dst):
        image[s - 1] = d
    p = Permutation(image)
    if p.sign() == 1:
        return p
    # swap two images outside the constraints to fix parity
    swap = [s for s in free_src if image[s - 1] not in constraints.values()]
    a, b = swap[0], swap[1]
    image[a - 1], image[b - 1] = image[b - 1], image[a - 1]
    return Permutation(image)


# ---------------------------------------------------------------------------
# Sections


def sign_embed(p8: Permutation) -> Permutation:
    """S_8 -> S_12 through the sign: odd maps to (bc), even to identity."""
    if p8.sign() == 1:
        return Permutation.identity(12)
    return Permutation.from_cycles("(bc)", 12)


def section_s8(sigma: Permutation) -> G2Element:
    """The orientation-preserving copy of S_8 inside the 2x2 group."""
    return G2Element((0,) * 8, sigma)


def section_p(pair: tuple[Permutation, Permutation]) -> G3Element:
    """The orientation-preserving copy of the pair group in the 3x3 group."""
    return G3Element((0,) * 12, (0,) * 8, pair)


def section_g2_in_g3(x: G2Element) -> G3Element:
    """Embed a 2x2 element in the 3x3 group: corners act as x, edges by
    the sign of its corner permutation (swap b and c when odd)."""
    return G3Element((0,) * 12, x.twist, (sign_embed(x.perm), x.perm))


def superflip() -> G3Element:
    """The central 3x3 element flipping all twelve edges in place."""
    return G3Element(
        (1,) * 12, (0,) * 8, (Permutation.identity(12), Permutation.identity(8))
    )


def superflip_state() -> CubeState:
    state = CubeState.solved(3)
    for position in range(1, 13):
        state = cube.flip_edge(state, position)
    return state


# ---------------------------------------------------------------------------
# Subgroup membership


class SubgroupTag(enum.Enum):
    K = "K"  # 2x2: corner twists in place
    L = "L"  # 2x2: words of even length
    H = "H"  # 2x2: orientation-preserving copy of S_8
    M = "M"  # 3x3: edge flips in place
    N = "N"  # 3x3: kernel of the corner-forgetting map
    J = "J"  # 3x3: all rotations in place
    S = "S"  # 3x3: sign-matched copy of S_8 in the pair group
    P = "P"  # pairs with equal signs
    A8 = "A8"
    A12 = "A12"
    FULL = "full"
    TRIVIAL = "trivial"


def membership(tag: SubgroupTag, element) -> bool:
    """Exact membership of an element in the named subgroup."""
    if tag is SubgroupTag.FULL:
        return isinstance(element, (G2Element, G3Element, Permutation))
    if tag is SubgroupTag.TRIVIAL:
        if isinstance(element, (G2Element, G3Element)):
            return element.is_identity()
        if isinstance(element, Permutation):
            return element.is_identity()
        raise TypeError(f"unsupported element type {type(element)!r}")
    if tag is SubgroupTag.K:
        _expect(element, G2Element, tag)
        return element.perm.is_identity()
    if tag is SubgroupTag.L:
        _expect(element, G2Element, tag)
        return element.perm.sign() == 1
    if tag is SubgroupTag.H:
        _expect(element, G2Element, tag)
        return not any(element.twist)
    if tag is SubgroupTag.M:
        _expect(element, G3Element, tag)
        return (
            element.pair[0].is_identity()
            and element.pair[1].is_identity()
            and not any(element.twist)
        )
    if tag is SubgroupTag.N:
        _expect(element, G3Element, tag)
        return element.pair[1].is_identity() and not any(element.twist)
    if tag is SubgroupTag.J:
        _expect(element, G3Element, tag)
        return element.pair[0].is_identity() and element.pair[1].is_identity()
    if tag is SubgroupTag.S:
        _expect(element, G3Element, tag)
        return (
            not any(element.flip)
            and not any(element.twist)
            and element.pair[0] == sign_embed(element.pair[1])
        )
    if tag is SubgroupTag.P:
        pair = element.pair if isinstance(element, G3Element) else element
        edges, corners = pair
        if edges.degree != 12 or corners.degree != 8:
            raise TypeError("P expects a (degree 12, degree 8) pair")
        return edges.sign() == corners.sign()
    if tag is SubgroupTag.A8:
        _expect(element, Permutation, tag)
        if element.degree != 8:
            raise TypeError("A8 expects a degree-8 permutation")
        return element.sign() == 1
    if tag is SubgroupTag.A12:
        _expect(element, Permutation, tag)
        if element.degree != 12:
            raise TypeError("A12 expects a degree-12 permutation")
        return element.sign() == 1
    raise TypeError(f"unsupported tag {tag!r}")


def _expect(element, kind, tag: SubgroupTag) -> None:
    if not isinstance(element, kind):
        raise TypeError(f"{tag.value} expects {kind.__name__}, got {type(element).__name__}")


# ---------------------------------------------------------------------------
# Degree-20 pairs, for stabilizer-chain work on the image of alpha


def pair_to_perm20(pair: tuple[Permutation, Permutation]) -> Permutation:
    """A sign-matched pair as one permutation of 20 points (edges 1..12,
    corners 13..20)."""
    edges, corners = pair
    image = list(edges.image) + [corners(i) + 12 for i in range(1, 9)]
    return Permutation(image)


def generator_words() -> dict[str, MoveWord]:
    return {f: word(f) for f in cube.FACES}
