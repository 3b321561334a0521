"""Sticker states, move words, and what a move does to cubelets.

Run:  python demos/01_cube_basics.py
"""

from cubereps import (
    CubeState,
    apply_word,
    corner_orientation,
    corner_permutation,
    edge_orientation,
    edge_permutation,
    invariant_s,
    invariant_t,
    word,
)

solved = CubeState.solved(3)
print("A solved 3x3 cube stores 48 stickers (centers never move):")
print(" ", solved.to_json())

# Each face turn permutes corner positions 1..8 and edge positions a..l.
for face in "UDFBLR":
    state = apply_word(solved, face)
    print(
        f"{face}: corners {corner_permutation(state).cycle_string():<8}"
        f" edges {edge_permutation(state).cycle_string(letters=True)}"
    )

# Words are chronological: "F R" turns the front face, then the right face.
state = apply_word(solved, "F R")
print("\nAfter F then R:")
print("  corner twists:", corner_orientation(state))
print("  edge flips:   ", edge_orientation(state))

# The twist sum mod 3 and the flip sum mod 2 are invariants of the moves:
# no sequence of face turns can twist a single corner or flip a single edge.
print("\nInvariants of the scrambled state:")
scramble = word("R U R' U' F2 L D B' R2 U'")
state = apply_word(solved, scramble)
print("  s =", invariant_s(state), " t =", invariant_t(state))

from cubereps.cube import flip_edge, twist_corner

broken = twist_corner(CubeState.solved(2), 1, 1)
print("\nTwisting one corner by hand is visible in the invariant:")
print("  s of a single-twist state =", invariant_s(broken))
print("  t of a single-flip state  =", invariant_t(flip_edge(solved, 5)))

# Words invert token by token, in reverse order.
w = word("U R' F2")
print("\nA word and its inverse:", w, "|", w.inverse())
assert apply_word(apply_word(solved, w), w.inverse()) == solved
