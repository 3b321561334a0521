"""Sticker-level models of the 2x2 and 3x3 cubes.

A sticker is identified by the integer lattice position of its cubelet
(components in {-1,0,1}) together with its outward facelet normal.  The
facelet array orders faces U,D,F,B,L,R and, within a face, runs row-major
as seen facing that face (view "up" is: back for U, front for D, the top
of the cube for F/B/L/R).  The 3x3 array has 48 entries: centers never
move and are not stored.

Move words are chronological: ``"U R'"`` turns the top face, then the
right face.  Generator sticker permutations are derived once from the
rotation geometry at import time and frozen as module tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .perm import EDGE_LETTERS, Permutation

Vec = tuple[int, int, int]

FACES = "UDFBLR"

FACE_NORMAL: dict[str, Vec] = {
    "U": (0, 1, 0),
    "D": (0, -1, 0),
    "F": (0, 0, 1),
    "B": (0, 0, -1),
    "L": (-1, 0, 0),
    "R": (1, 0, 0),
}

FACE_RIGHT: dict[str, Vec] = {
    "U": (1, 0, 0),
    "D": (1, 0, 0),
    "F": (1, 0, 0),
    "B": (-1, 0, 0),
    "L": (0, 0, 1),
    "R": (0, 0, -1),
}


def _cross(a: Vec, b: Vec) -> Vec:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _add(*vs: Vec) -> Vec:
    return tuple(sum(c) for c in zip(*vs))  # type: ignore[return-value]


def _scale(v: Vec, k: int) -> Vec:
    return (k * v[0], k * v[1], k * v[2])


def _dot(a: Vec, b: Vec) -> int:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


# view "down" direction completing the (right, down, normal) frame
FACE_DOWN: dict[str, Vec] = {f: _cross(FACE_RIGHT[f], FACE_NORMAL[f]) for f in FACES}


def _rotate_cw(axis: Vec, v: Vec) -> Vec:
    """Rotate v by a quarter turn, clockwise as seen from outside along axis."""
    # -90 degrees about the unit axis: v -> (v . a) a - a x v
    d = _dot(axis, v)
    c = _cross(axis, v)
    return (d * axis[0] - c[0], d * axis[1] - c[1], d * axis[2] - c[2])


def _face_cells(size: int) -> list[tuple[int, int]]:
    if size == 2:
        return [(r, c) for r in range(2) for c in range(2)]
    return [(r, c) for r in range(3) for c in range(3) if (r, c) != (1, 1)]


def _build_layout(size: int):
    """Map sticker (cubelet position, normal) pairs to array indices."""
    index: dict[tuple[Vec, Vec], int] = {}
    stickers: list[tuple[Vec, Vec]] = []
    for face in FACES:
        n, r, d = FACE_NORMAL[face], FACE_RIGHT[face], FACE_DOWN[face]
        for row, col in _face_cells(size):
            if size == 2:
                rc, dc = 2 * col - 1, 2 * row - 1
            else:
                rc, dc = col - 1, row - 1
            pos = _add(n, _scale(r, rc), _scale(d, dc))
            index[(pos, n)] = len(stickers)
            stickers.append((pos, n))
    return index, stickers


_LAYOUT = {2: _build_layout(2), 3: _build_layout(3)}


def sticker_count(size: int) -> int:
    return 24 if size == 2 else 48


def _build_move_table(size: int, face: str) -> tuple[int, ...]:
    """Destination index of each sticker under a clockwise face turn."""
    index, stickers = _LAYOUT[size]
    axis = FACE_NORMAL[face]
    table = []
    for pos, nrm in stickers:
        if _dot(pos, axis) == 1:
            table.append(index[(_rotate_cw(axis, pos), _rotate_cw(axis, nrm))])
        else:
            table.append(index[(pos, nrm)])
    return tuple(table)


class MoveTables:
    """Per-face sticker permutations for one cube size.

    The default instances are derived from geometry; alternative tables can
    be injected to exercise negative controls in the verification suite.
    """

    def __init__(self, size: int, face_tables: dict[str, tuple[int, ...]]):
        self.size = size
        self.face_tables = dict(face_tables)
        n = sticker_count(size)
        # pre[token][j] = source index of the sticker that lands at j
        self._pre: dict[tuple[str, int], tuple[int, ...]] = {}
        for face, table in self.face_tables.items():
            power = list(range(n))
            for turns in (1, 2, 3):
                power = [table[p] for p in power]
                inv = [0] * n
                for i, j in enumerate(power):
                    inv[j] = i
                self._pre[(face, turns)] = tuple(inv)

    def apply_token(self, stickers: tuple[int, ...], face: str, turns: int):
        pre = self._pre[(face, turns)]
        return tuple(stickers[i] for i in pre)


def _default_tables(size: int) -> MoveTables:
    return MoveTables(size, {f: _build_move_table(size, f) for f in FACES})


MOVES2 = _default_tables(2)
MOVES3 = _default_tables(3)


def default_tables(size: int) -> MoveTables:
    if size == 2:
        return MOVES2
    if size == 3:
        return MOVES3
    raise ValueError(f"unsupported cube size {size}")


# ---------------------------------------------------------------------------
# Move words


class WordError(ValueError):
    """Raised for malformed move words."""


@dataclass(frozen=True)
class MoveWord:
    """A chronological sequence of face turns: (face, quarter turns 1..3)."""

    tokens: tuple[tuple[str, int], ...]

    @classmethod
    def parse(cls, text: str) -> "MoveWord":
        tokens = []
        for raw in text.split():
            face, suffix = raw[0], raw[1:]
            if face not in FACES:
                raise WordError(f"bad move token {raw!r}")
            if suffix == "":
                turns = 1
            elif suffix == "'":
                turns = 3
            elif suffix == "2":
                turns = 2
            else:
                raise WordError(f"bad move token {raw!r}")
            tokens.append((face, turns))
        return cls(tuple(tokens))

    def inverse(self) -> "MoveWord":
        return MoveWord(tuple((f, 4 - t) for f, t in reversed(self.tokens)))

    def then(self, other: "MoveWord") -> "MoveWord":
        """Chronological concatenation: self is applied first."""
        return MoveWord(self.tokens + other.tokens)

    def __str__(self) -> str:
        out = []
        for face, turns in self.tokens:
            out.append(face + {1: "", 2: "2", 3: "'"}[turns])
        return " ".join(out)

    def __len__(self) -> int:
        return len(self.tokens)


def word(text: str) -> MoveWord:
    return MoveWord.parse(text)


def commutator(x: MoveWord, y: MoveWord) -> MoveWord:
    """Word for x y x^-1 y^-1 read right-to-left (y^-1 applied first)."""
    return y.inverse().then(x.inverse()).then(y).then(x)


def product(*factors: MoveWord) -> MoveWord:
    """Word for the right-to-left product of factors (last applied first)."""
    out = MoveWord(())
    for w in reversed(factors):
        out = out.then(w)
    return out


# ---------------------------------------------------------------------------
# Cube states


class CorruptedState(ValueError):
    """A sticker assignment that matches no intact cubelet."""


@dataclass(frozen=True)
class CubeState:
    size: int
    stickers: tuple[int, ...]

    def __post_init__(self):
        if self.size not in (2, 3):
            raise ValueError(f"unsupported cube size {self.size}")
        if len(self.stickers) != sticker_count(self.size):
            raise ValueError("wrong sticker count")

    @classmethod
    def solved(cls, size: int) -> "CubeState":
        per_face = 4 if size == 2 else 8
        return cls(size, tuple(f for f in range(6) for _ in range(per_face)))

    def to_json(self) -> str:
        return json.dumps(
            {"size": self.size, "stickers": list(self.stickers)},
            sort_keys=True,
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "CubeState":
        data = json.loads(text)
        return cls(int(data["size"]), tuple(int(x) for x in data["stickers"]))


def apply_word(
    state: CubeState, w: MoveWord | str, tables: MoveTables | None = None
) -> CubeState:
    if isinstance(w, str):
        w = MoveWord.parse(w)
    tables = tables or default_tables(state.size)
    stickers = state.stickers
    for face, turns in w.tokens:
        stickers = tables.apply_token(stickers, face, turns)
    return CubeState(state.size, stickers)


# ---------------------------------------------------------------------------
# Cubelet positions, in the numbering of the corner/edge listings

CORNER_POS: dict[int, Vec] = {
    1: (-1, 1, 1),  # top-front-left
    2: (1, 1, 1),  # top-front-right
    3: (-1, 1, -1),  # top-back-left
    4: (1, 1, -1),  # top-back-right
    5: (-1, -1, 1),  # bottom-front-left
    6: (1, -1, 1),  # bottom-front-right
    7: (-1, -1, -1),  # bottom-back-left
    8: (1, -1, -1),  # bottom-back-right
}

EDGE_POS: dict[int, Vec] = {
    1: (0, 1, -1),  # a top-back
    2: (1, 1, 0),  # b top-right
    3: (0, 1, 1),  # c top-front
    4: (-1, 1, 0),  # d top-left
    5: (-1, 0, -1),  # e back-left
    6: (1, 0, -1),  # f back-right
    7: (1, 0, 1),  # g front-right
    8: (-1, 0, 1),  # h front-left
    9: (0, -1, -1),  # i bottom-back
    10: (1, -1, 0),  # j bottom-right
    11: (0, -1, 1),  # k bottom-front
    12: (-1, -1, 0),  # l bottom-left
}

_NORMAL_FACE = {v: f for f, v in FACE_NORMAL.items()}


def _corner_normals(pos: Vec) -> list[Vec]:
    return [
        (pos[0], 0, 0),
        (0, pos[1], 0),
        (0, 0, pos[2]),
    ]


def _edge_normals(pos: Vec) -> list[Vec]:
    out = []
    for i in range(3):
        if pos[i]:
            n = [0, 0, 0]
            n[i] = pos[i]
            out.append(tuple(n))
    return out


def _color_of_normal(n: Vec) -> int:
    return FACES.index(_NORMAL_FACE[n])


_SOLVED_CORNER_COLORS = {
    frozenset(_color_of_normal(n) for n in _corner_normals(pos)): home
    for home, pos in CORNER_POS.items()
}
_SOLVED_EDGE_COLORS = {
    frozenset(_color_of_normal(n) for n in _edge_normals(pos)): home
    for home, pos in EDGE_POS.items()
}


def _corner_sticker_colors(state: CubeState, pos: Vec) -> dict[Vec, int]:
    index = _LAYOUT[state.size][0]
    return {n: state.stickers[index[(pos, n)]] for n in _corner_normals(pos)}


def _edge_sticker_colors(state: CubeState, pos: Vec) -> dict[Vec, int]:
    index = _LAYOUT[3][0]
    return {n: state.stickers[index[(pos, n)]] for n in _edge_normals(pos)}


def corner_permutation(state: CubeState) -> Permutation:
    """Where each corner cubelet went: image[home] = current position."""
    image = [0] * 8
    for position, pos in CORNER_POS.items():
        colors = _corner_sticker_colors(state, pos)
        home = _SOLVED_CORNER_COLORS.get(frozenset(colors.values()))
        if home is None:
            raise CorruptedState(
                f"sticker triple at corner {position} matches no cubelet"
            )
        if image[home - 1]:
            raise CorruptedState(f"corner cubelet {home} appears twice")
        image[home - 1] = position
    return Permutation(image)


def edge_permutation(state: CubeState) -> Permutation:
    if state.size != 3:
        raise ValueError("edges exist only on the 3x3 cube")
    image = [0] * 12
    for position, pos in EDGE_POS.items():
        colors = _edge_sticker_colors(state, pos)
        home = _SOLVED_EDGE_COLORS.get(frozenset(colors.values()))
        if home is None:
            letter = EDGE_LETTERS[position - 1]
            raise CorruptedState(f"sticker pair at edge {letter} matches no cubelet")
        if image[home - 1]:
            raise CorruptedState(f"edge cubelet {EDGE_LETTERS[home-1]} appears twice")
        image[home - 1] = position
    return Permutation(image)


# ---------------------------------------------------------------------------
# Local orientation
#
# A corner basis marks one facelet direction per corner position; the local
# orientation at a position counts counterclockwise third-turns (about the
# outward corner diagonal, seen from outside) from the marked direction to
# the marked sticker of the cubelet sitting there.  Edge bases mark one of
# the two facelet directions; the local orientation is 0 or 1.


def _ccw_third_turn(corner: Vec, v: Vec) -> Vec:
    # +120 degrees about the outward diagonal: v -> (-v + axv + (a.v)a)/2
    a = corner
    c = _cross(a, v)
    d = _dot(a, v)
    return tuple((-v[i] + c[i] + d * a[i]) // 2 for i in range(3))  # type: ignore


@dataclass(frozen=True)
class OrientationBasis:
    """Marked facelet direction for every corner and edge position."""

    corner_marks: tuple[Vec, ...]  # one of the 3 normals at corner i+1
    edge_marks: tuple[Vec, ...]  # one of the 2 normals at edge i+1

    def __post_init__(self):
        for i, mark in enumerate(self.corner_marks):
            if mark not in _corner_normals(CORNER_POS[i + 1]):
                raise ValueError(f"bad corner mark at position {i + 1}")
        for i, mark in enumerate(self.edge_marks):
            if mark not in _edge_normals(EDGE_POS[i + 1]):
                raise ValueError(f"bad edge mark at position {i + 1}")


def reference_basis() -> OrientationBasis:
    """Marks the U/D sticker of every corner; for edges, the U/D sticker
    where present and the F/B sticker on the equator."""
    corners = tuple((0, pos[1], 0) for pos in CORNER_POS.values())
    edges = []
    for pos in EDGE_POS.values():
        if pos[1]:
            edges.append((0, pos[1], 0))
        else:
            edges.append((0, 0, pos[2]))
    return OrientationBasis(corners, tuple(edges))


REFERENCE_BASIS = reference_basis()


def corner_orientation(
    state: CubeState, basis: OrientationBasis = REFERENCE_BASIS
) -> tuple[int, ...]:
    """Z_3 twist of each corner position, relative to the basis marks."""
    out = []
    for position, pos in CORNER_POS.items():
        colors = _corner_sticker_colors(state, pos)
        home = _SOLVED_CORNER_COLORS.get(frozenset(colors.values()))
        if home is None:
            raise CorruptedState(
                f"sticker triple at corner {position} matches no cubelet"
            )
        marked_color = _color_of_normal(basis.corner_marks[home - 1])
        current = next(n for n, c in colors.items() if c == marked_color)
        direction = basis.corner_marks[position - 1]
        for twist in range(3):
            if direction == current:
                out.append(twist)
                break
            direction = _ccw_third_turn(pos, direction)
        else:
            raise CorruptedState(f"marked sticker unreachable at corner {position}")
    return tuple(out)


def edge_orientation(
    state: CubeState, basis: OrientationBasis = REFERENCE_BASIS
) -> tuple[int, ...]:
    """Z_2 flip of each edge position, relative to the basis marks."""
    if state.size != 3:
        raise ValueError("edges exist only on the 3x3 cube")
    out = []
    for position, pos in EDGE_POS.items():
        colors = _edge_sticker_colors(state, pos)
        home = _SOLVED_EDGE_COLORS.get(frozenset(colors.values()))
        if home is None:
            letter = EDGE_LETTERS[position - 1]
            raise CorruptedState(f"sticker pair at edge {letter} matches no cubelet")
        marked_color = _color_of_normal(basis.edge_marks[home - 1])
        current = next(n for n, c in colors.items() if c == marked_color)
        out.append(0 if current == basis.edge_marks[position - 1] else 1)
    return tuple(out)


def invariant_s(state: CubeState, basis: OrientationBasis = REFERENCE_BASIS) -> int:
    """Sum of corner twists in Z_3; basis-independent, 0 on reachable states."""
    return sum(corner_orientation(state, basis)) % 3


def invariant_t(state: CubeState, basis: OrientationBasis = REFERENCE_BASIS) -> int:
    """Sum of edge flips in Z_2; basis-independent, 0 on reachable states."""
    return sum(edge_orientation(state, basis)) % 2


# ---------------------------------------------------------------------------
# Synthetic states (twists and flips in place) and sticker permutations.
# These drive the conjugation-law checks without going through move words.


def twist_corner(state: CubeState, position: int, amount: int) -> CubeState:
    """Rotate the cubelet at a corner position in place, counterclockwise."""
    index = _LAYOUT[state.size][0]
    pos = CORNER_POS[position]
    stickers = list(state.stickers)
    for n in _corner_normals(pos):
        target = n
        for _ in range(amount % 3):
            target = _ccw_third_turn(pos, target)
        stickers[index[(pos, target)]] = state.stickers[index[(pos, n)]]
    return CubeState(state.size, tuple(stickers))


def flip_edge(state: CubeState, position: int) -> CubeState:
    """Flip the edge cubelet at a position in place."""
    index = _LAYOUT[3][0]
    pos = EDGE_POS[position]
    n1, n2 = _edge_normals(pos)
    stickers = list(state.stickers)
    stickers[index[(pos, n1)]] = state.stickers[index[(pos, n2)]]
    stickers[index[(pos, n2)]] = state.stickers[index[(pos, n1)]]
    return CubeState(state.size, tuple(stickers))


def sticker_perm_of_word(
    w: MoveWord | str, size: int, tables: MoveTables | None = None
) -> tuple[int, ...]:
    """The whole-word sticker permutation: entry i is where sticker i goes."""
    if isinstance(w, str):
        w = MoveWord.parse(w)
    tables = tables or default_tables(size)
    n = sticker_count(size)
    perm = list(range(n))
    for face, turns in w.tokens:
        table = tables.face_tables[face]
        step = list(range(n))
        for _ in range(turns):
            step = [table[p] for p in step]
        perm = [step[p] for p in perm]
    return tuple(perm)


def sticker_perm_of_twist(position: int, amount: int, size: int) -> tuple[int, ...]:
    index, stickers = _LAYOUT[size]
    pos = CORNER_POS[position]
    perm = list(range(len(stickers)))
    for n in _corner_normals(pos):
        target = n
        for _ in range(amount % 3):
            target = _ccw_third_turn(pos, target)
        perm[index[(pos, n)]] = index[(pos, target)]
    return tuple(perm)


def sticker_perm_of_flip(position: int) -> tuple[int, ...]:
    index, stickers = _LAYOUT[3]
    pos = EDGE_POS[position]
    n1, n2 = _edge_normals(pos)
    perm = list(range(len(stickers)))
    perm[index[(pos, n1)]] = index[(pos, n2)]
    perm[index[(pos, n2)]] = index[(pos, n1)]
    return tuple(perm)


def compose_sticker_perms(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Permutation doing q first, then p (chronological order q, p)."""
    return tuple(p[q[i]] for i in range(len(q)))


def invert_sticker_perm(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def state_of_sticker_perm(perm: tuple[int, ...], size: int) -> CubeState:
    solved = CubeState.solved(size)
    new = [0] * len(perm)
    for i, j in enumerate(perm):
        new[j] = solved.stickers[i]
    return CubeState(size, tuple(new))


def random_word(rng, length: int) -> MoveWord:
    """Uniform random word over the 18 face-turn tokens."""
    tokens = tuple(
        (FACES[rng.randrange(6)], rng.randrange(1, 4)) for _ in range(length)
    )
    return MoveWord(tokens)


def random_basis(rng) -> OrientationBasis:
    corners = tuple(
        _corner_normals(pos)[rng.randrange(3)] for pos in CORNER_POS.values()
    )
    edges = tuple(_edge_normals(pos)[rng.randrange(2)] for pos in EDGE_POS.values())
    return OrientationBasis(corners, edges)
