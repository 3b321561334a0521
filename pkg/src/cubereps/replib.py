"""Exact monomial representations and minimal faithful dimensions.

Monomial maps are stored as a permutation plus root-of-unity exponents,
never as floating matrices; their real (conjugate-monomial) forms keep a
unit root and a conjugation flag per rotation plane.  Faithfulness,
character norms and Frobenius-Schur indicators are computed exactly in
cyclotomic integers.  The headline constructions are the degree-8 and
degree-20 monomial representations of the cube groups, their realified
forms of dimensions 16 and 28, and the order-648 example whose minimal
real dimension (6) is smaller than the realification of its minimal
complex dimension (8).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .abelian import FiniteAbelianGroup, mdim_real_abelian, zk0m
from .cyclotomic import CyclotomicInt
from .perm import Permutation, compose
from .structure import (
    G2Element,
    G3Element,
    pair_to_perm20,
    word_element_g2,
    word_element_g3,
)


def _permuted(vector: tuple[int, ...], perm: Permutation) -> tuple[int, ...]:
    inv = perm.inverse()
    return tuple(vector[inv(i + 1) - 1] for i in range(len(vector)))


@dataclass(frozen=True)
class MonomialMap:
    """A monomial matrix: basis vector v_j goes to w^(exps[p(j)-1]) v_p(j).

    Row i holds its single nonzero entry w^exps[i-1] in column p^-1(i);
    products compose permutations and add exponents after permuting.
    """

    root_order: int
    perm: Permutation
    exps: tuple[int, ...]

    def __post_init__(self):
        if len(self.exps) != self.perm.degree:
            raise ValueError("one exponent per coordinate required")
        if any(not 0 <= e < self.root_order for e in self.exps):
            raise ValueError("exponents must be reduced mod the root order")

    @property
    def degree(self) -> int:
        return self.perm.degree

    @classmethod
    def identity(cls, degree: int, root_order: int) -> "MonomialMap":
        return cls(root_order, Permutation.identity(degree), (0,) * degree)

    def __mul__(self, other: "MonomialMap") -> "MonomialMap":
        if self.root_order != other.root_order:
            raise ValueError("mixed root orders")
        moved = _permuted(other.exps, self.perm)
        exps = tuple((a + b) % self.root_order for a, b in zip(self.exps, moved))
        return MonomialMap(self.root_order, compose(self.perm, other.perm), exps)

    def inverse(self) -> "MonomialMap":
        inv = self.perm.inverse()
        exps = tuple((-e) % self.root_order for e in _permuted(self.exps, inv))
        return MonomialMap(self.root_order, inv, exps)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.exps)

    def trace(self) -> CyclotomicInt:
        total = CyclotomicInt.zero(self.root_order)
        for i in range(1, self.degree + 1):
            if self.perm(i) == i:
                total = total + CyclotomicInt.root_power(self.root_order, self.exps[i - 1])
        return total

    def matrix(self) -> list[list[CyclotomicInt]]:
        zero = CyclotomicInt.zero(self.root_order)
        out = [[zero] * self.degree for _ in range(self.degree)]
        inv = self.perm.inverse()
        for i in range(1, self.degree + 1):
            out[i - 1][inv(i) - 1] = CyclotomicInt.root_power(
                self.root_order, self.exps[i - 1]
            )
        return out

    def matrix_text(self) -> str:
        rows = []
        for row in self.matrix():
            cells = []
            for entry in row:
                if entry.is_zero():
                    cells.append(".")
                elif entry == 1:
                    cells.append("1")
                elif entry == -1:
                    cells.append("-1")
                else:
                    cells.append(f"w^{_root_exponent(entry)}")
            rows.append(" ".join(f"{c:>4}" for c in cells))
        return "\n".join(rows)


def _root_exponent(value: CyclotomicInt) -> int:
    for k in range(value.order):
        if value == CyclotomicInt.root_power(value.order, k):
            return k
    raise ValueError(f"{value!r} is not a root of unity")


class MonomialRep:
    """A homomorphism into monomial matrices, given elementwise.

    ``of`` maps group elements to MonomialMap; ``generators`` holds the
    images of the named generators; ``embeddings`` lists, per coordinate
    range, the modulus of the twist data stored there and the multiplier
    embedding it into Z_root_order (used by the structural faithfulness
    check).
    """

    def __init__(self, degree, root_order, generators, of, embeddings):
        self.degree = degree
        self.root_order = root_order
        self.generators = dict(generators)
        self.of = of
        self.embeddings = tuple(embeddings)

    def to_json(self) -> str:
        payload = {
            "degree": self.degree,
            "root_order": self.root_order,
            "generators": {
                name: {"perm": list(img.perm.image), "exps": list(img.exps)}
                for name, img in sorted(self.generators.items())
            },
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def build_rep_g2() -> MonomialRep:
    """The faithful degree-8 monomial representation of the 2x2 group:
    corner twists as diagonal cube roots of unity, corner permutations as
    permutation matrices."""

    def of(x: G2Element) -> MonomialMap:
        return MonomialMap(3, x.perm, x.twist)

    generators = {f: of(word_element_g2(f)) for f in "UDFBLR"}
    return MonomialRep(8, 3, generators, of, [(3, 1, 8)])


def build_rep_g3() -> MonomialRep:
    """The faithful degree-20 monomial representation of the 3x3 group:
    edge flips as diagonal signs (w6^3), corner twists as cube roots
    (w6^2), the sign-matched permutation pair acting on coordinates."""

    def of(x: G3Element) -> MonomialMap:
        exps = tuple(3 * v for v in x.flip) + tuple(2 * v for v in x.twist)
        return MonomialMap(6, pair_to_perm20(x.pair), exps)

    generators = {f: of(word_element_g3(f)) for f in "UDFBLR"}
    return MonomialRep(20, 6, generators, of, [(2, 3, 12), (3, 2, 8)])


def zeroed_corner_rep() -> MonomialRep:
    """Negative control: the 2x2 representation with corner exponents
    forced to zero; its kernel contains every pure twist."""

    def of(x: G2Element) -> MonomialMap:
        return MonomialMap(3, x.perm, (0,) * 8)

    generators = {f: of(word_element_g2(f)) for f in "UDFBLR"}
    return MonomialRep(8, 3, generators, of, [(3, 0, 8)])


def faithful_structural(rep: MonomialRep) -> bool:
    """Exact kernel-triviality for semidirect monomial representations.

    The image is the identity matrix only when the permutation part is
    trivial and every exponent vanishes; the representation is faithful
    exactly when each twist modulus embeds injectively into the root
    group, i.e. multiplication by the stated multiplier is injective
    mod root_order.
    """
    for modulus, multiplier, _count in rep.embeddings:
        images = {(multiplier * t) % rep.root_order for t in range(modulus)}
        if len(images) != modulus:
            return False
    return True


def faithful_enumerated(rep_of, elements) -> bool:
    """Only the identity element maps to the identity matrix."""
    hits = 0
    for x in elements:
        if rep_of(x).is_identity():
            hits += 1
    return hits == 1


def character_norm(rep_of, elements) -> int:
    """<chi, chi> = (1/|G|) sum chi(g) conj(chi(g)), exactly; 1 means
    irreducible."""
    total = None
    for x in elements:
        chi = rep_of(x).trace()
        term = chi * chi.conjugate()
        total = term if total is None else total + term
    value = total.as_integer()
    if value % len(elements):
        raise ArithmeticError("character norm is not an integer")
    return value // len(elements)


def frobenius_schur(rep_of, elements, mul) -> int:
    """(1/|G|) sum chi(g^2): 1 real, 0 complex, -1 quaternionic."""
    total = None
    for x in elements:
        chi = rep_of(mul(x, x)).trace()
        total = chi if total is None else total + chi
    value = total.as_integer()
    if value % len(elements):
        raise ArithmeticError("indicator sum is not an integer")
    return value // len(elements)


# ---------------------------------------------------------------------------
# Real (conjugate-monomial) forms


@dataclass(frozen=True)
class ConjMonomialMap:
    """An orthogonal map in block form: sign_count one-dimensional blocks
    with entries +-1 and rot_count two-dimensional blocks, each acting as
    z -> w^e z or z -> w^e conj(z) on its plane (flag set means conjugate).
    """

    root_order: int
    sign_perm: Permutation
    signs: tuple[int, ...]
    rot_perm: Permutation
    rot_exps: tuple[int, ...]
    flags: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != self.sign_perm.degree:
            raise ValueError("one sign per sign block")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")
        if not (
            len(self.rot_exps) == len(self.flags) == self.rot_perm.degree
        ):
            raise ValueError("one exponent and flag per rotation block")

    @property
    def real_dimension(self) -> int:
        return self.sign_perm.degree + 2 * self.rot_perm.degree

    @classmethod
    def identity(cls, sign_count: int, rot_count: int, root_order: int):
        return cls(
            root_order,
            Permutation.identity(sign_count),
            (1,) * sign_count,
            Permutation.identity(rot_count),
            (0,) * rot_count,
            (0,) * rot_count,
        )

    def __mul__(self, other: "ConjMonomialMap") -> "ConjMonomialMap":
        if self.root_order != other.root_order:
            raise ValueError("mixed root orders")
        signs = tuple(
            a * b for a, b in zip(self.signs, _permuted(other.signs, self.sign_perm))
        )
        routed_exps = _permuted(other.rot_exps, self.rot_perm)
        routed_flags = _permuted(other.flags, self.rot_perm)
        exps = tuple(
            (e1 + (e2 if not f1 else -e2)) % self.root_order
            for e1, f1, e2 in zip(self.rot_exps, self.flags, routed_exps)
        )
        flags = tuple(f1 ^ f2 for f1, f2 in zip(self.flags, routed_flags))
        return ConjMonomialMap(
            self.root_order,
            compose(self.sign_perm, other.sign_perm),
            signs,
            compose(self.rot_perm, other.rot_perm),
            exps,
            flags,
        )

    def is_identity(self) -> bool:
        return (
            self.sign_perm.is_identity()
            and self.rot_perm.is_identity()
            and all(s == 1 for s in self.signs)
            and not any(self.rot_exps)
            and not any(self.flags)
        )

    def block_text(self) -> str:
        parts = []
        inv_s = self.sign_perm.inverse()
        for i in range(1, self.sign_perm.degree + 1):
            src = inv_s(i)
            val = "1" if self.signs[i - 1] == 1 else "-1"
            parts.append(f"V{i} <- {val}*V{src}")
        inv_r = self.rot_perm.inverse()
        for i in range(1, self.rot_perm.degree + 1):
            src = inv_r(i)
            op = f"w^{self.rot_exps[i-1]}"
            if self.flags[i - 1]:
                op = f"conj o {op}"
            parts.append(f"W{i} <- {op}*W{src}")
        return "; ".join(parts)


class ConjMonomialRep:
    """A homomorphism into conjugate-monomial block maps."""

    def __init__(self, sign_count, rot_count, root_order, generators, of):
        self.sign_count = sign_count
        self.rot_count = rot_count
        self.root_order = root_order
        self.generators = dict(generators)
        self.of = of

    @property
    def real_dimension(self) -> int:
        return self.sign_count + 2 * self.rot_count

    def to_json(self) -> str:
        payload = {
            "sign_blocks": self.sign_count,
            "rotation_blocks": self.rot_count,
            "root_order": self.root_order,
            "generators": {
                name: {
                    "sign_perm": list(img.sign_perm.image),
                    "signs": list(img.signs),
                    "rot_perm": list(img.rot_perm.image),
                    "exps": list(img.rot_exps),
                    "flags": list(img.flags),
                }
                for name, img in sorted(self.generators.items())
            },
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def realify(rep: MonomialRep, real_coords: set[int], generator_elements) -> ConjMonomialRep:
    """Restrict scalars: designated real coordinates become sign blocks,
    all others become rotation planes (the coordinate plus its conjugate).

    ``real_coords`` is a set of 1-based coordinates on which every group
    element acts by +-1; the group permutation must preserve the split,
    which is validated on the given generator elements.
    """
    real = sorted(real_coords)
    rot = [i for i in range(1, rep.degree + 1) if i not in real_coords]
    real_index = {c: i + 1 for i, c in enumerate(real)}
    rot_index = {c: i + 1 for i, c in enumerate(rot)}
    half = rep.root_order // 2

    def of(x) -> ConjMonomialMap:
        img = rep.of(x)
        sign_image = [0] * len(real)
        rot_image = [0] * len(rot)
        signs = [1] * len(real)
        exps = [0] * len(rot)
        for src in range(1, rep.degree + 1):
            dst = img.perm(src)
            e = img.exps[dst - 1]
            if src in real_index:
                if dst not in real_index or e not in (0, half):
                    raise ValueError("group action does not preserve the split")
                sign_image[real_index[src] - 1] = real_index[dst]
                signs[real_index[dst] - 1] = 1 if e == 0 else -1
            else:
                if dst not in rot_index:
                    raise ValueError("group action does not preserve the split")
                rot_image[rot_index[src] - 1] = rot_index[dst]
                exps[rot_index[dst] - 1] = e
        return ConjMonomialMap(
            rep.root_order,
            Permutation(sign_image),
            tuple(signs),
            Permutation(rot_image),
            tuple(exps),
            (0,) * len(rot),
        )

    generators = {name: of(x) for name, x in generator_elements.items()}
    return ConjMonomialRep(len(real), len(rot), rep.root_order, generators, of)


@dataclass(frozen=True)
class DecoratedPerm:
    """Orientation flags on rotation planes plus the two block permutations;
    composes as flags twisted by the rotation permutation."""

    flags: tuple[int, ...]
    sigma_p: Permutation
    sigma_q: Permutation

    def __mul__(self, other: "DecoratedPerm") -> "DecoratedPerm":
        moved = _permuted(other.flags, self.sigma_q)
        flags = tuple((a + b) % 2 for a, b in zip(self.flags, moved))
        return DecoratedPerm(
            flags,
            compose(self.sigma_p, other.sigma_p),
            compose(self.sigma_q, other.sigma_q),
        )

    def is_identity(self) -> bool:
        return (
            self.sigma_p.is_identity()
            and self.sigma_q.is_identity()
            and not any(self.flags)
        )


def decorated_perm(image: ConjMonomialMap) -> DecoratedPerm:
    """Forget rotation angles and signs, keeping the block permutations and
    the orientation-reversal flags."""
    return DecoratedPerm(image.flags, image.sign_perm, image.rot_perm)


# ---------------------------------------------------------------------------
# Minimal permutation degree and the lower-bound machinery


def mu(descriptor) -> int:
    """Minimal permutation degree for symmetric and alternating groups and
    their direct products (degree is additive for products of alternating
    groups)."""
    kind = descriptor[0]
    if kind == "trivial":
        return 1
    if kind == "S":
        n = descriptor[1]
        if n < 1:
            raise ValueError("bad symmetric group")
        return n if n >= 2 else 1
    if kind == "A":
        n = descriptor[1]
        small = {1: 1, 2: 1, 3: 3, 4: 4}
        if n in small:
            return small[n]
        return n
    if kind == "x":
        factors = descriptor[1]
        if not all(f[0] == "A" for f in factors):
            raise ValueError("products are supported for alternating factors")
        return sum(mu(f) for f in factors)
    raise ValueError(f"unsupported descriptor {descriptor!r}")


def lower_bound_complex_split(abelian: FiniteAbelianGroup, complement) -> int:
    """Any faithful complex representation of a split extension of an
    abelian group by a faithfully-acting complement has dimension at least
    the complement's minimal permutation degree."""
    return mu(complement)


def g2_real_case_analysis() -> dict[str, int]:
    """The two-case real lower bound for the 2x2 group: either the
    complement embeds by rotation planes (dimension 2*8) or by sign lines
    plus the planes forced by the twist group (8 + 2*7); the bound is the
    smaller of the two."""
    twist_group, _ = zk0m(3, 8)
    q_case = 2 * mu(("S", 8))
    p_case = mu(("S", 8)) + 2 * twist_group.large_count
    return {"q_case": q_case, "p_case": p_case, "bound": min(q_case, p_case)}


_P_QUOTIENT_MU = {
    "1": mu(("x", [("A", 8), ("A", 12)])),  # P itself embeds no smaller
    "1 x A8": 12,  # quotient is S12
    "A12 x 1": 8,  # quotient is S8
    "A8 x A12": 2,  # quotient is Z2
    "P": 0,  # trivial quotient
}

_P_KERNEL_ROWS = [
    ("1", "1"),
    ("1 x A8", "A12 x 1"),
    ("A12 x 1", "1 x A8"),
    ("1", "A8 x A12"),
    ("A8 x A12", "1"),
    ("1", "P"),
    ("P", "1"),
]


def g3_real_case_table() -> dict:
    """The seven-row kernel case table for real representations of the 3x3
    group and its refinement.

    Each row lists the kernels of the two block-permutation maps, the
    forced counts p and q of one- and two-dimensional pieces, and the
    bound p + 2q.  The two rows with twenty sign lines are refined by the
    invariant-factor count of the rotation group to 20 + 2*14 = 48; the
    final bound is the row minimum, 28.
    """
    rows = []
    for kp, kq in _P_KERNEL_ROWS:
        p, q = _P_QUOTIENT_MU[kp], _P_QUOTIENT_MU[kq]
        rows.append((kp, kq, p, q, p + 2 * q))
    refined = {}
    for idx in (3, 5):
        kp, kq, p, q, _ = rows[idx]
        refined[idx] = 20 + 2 * 14
    effective = [refined.get(i, row[4]) for i, row in enumerate(rows)]
    return {"rows": rows, "refined": refined, "bound": min(effective)}


def subgroup_real_lower_bound(abelian: FiniteAbelianGroup) -> int:
    """A faithful representation restricts faithfully to every subgroup, so
    the real dimension of any group containing A is at least mdim_R(A)."""
    return mdim_real_abelian(abelian)


# ---------------------------------------------------------------------------
# The order-648 exceptional example


@dataclass(frozen=True)
class TwistPerm:
    """An element of the split extension of sum-zero Z_3 vectors by S_4."""

    twist: tuple[int, int, int, int]
    perm: Permutation


def exceptional_mul(x: TwistPerm, y: TwistPerm) -> TwistPerm:
    moved = _permuted(y.twist, x.perm)
    return TwistPerm(
        tuple((a + b) % 3 for a, b in zip(x.twist, moved)),
        compose(x.perm, y.perm),
    )


# the three sum-difference forms attached to the pair partitions of
# {1,2,3,4}; coordinate permutations permute them up to sign
_PAIR_FORMS = (
    (1, 1, -1, -1),
    (1, -1, 1, -1),
    (1, -1, -1, 1),
)


def _form_value(form, twist) -> int:
    return sum(f * t for f, t in zip(form, twist)) % 3


class ExceptionalExample:
    """The split extension of sum-zero Z_3^4 by S_4, of order 648, with its
    degree-4 complex monomial representation and its 6-dimensional real
    form built through the isomorphism of S_4 with sum-zero sign flips
    extended by S_3."""

    def __init__(self):
        twists = [
            t for t in itertools.product(range(3), repeat=4) if sum(t) % 3 == 0
        ]
        perms = [Permutation(p) for p in itertools.permutations(range(1, 5))]
        self.elements = [TwistPerm(t, p) for t in twists for p in perms]
        self.identity = TwistPerm((0, 0, 0, 0), Permutation.identity(4))
        self.mul = exceptional_mul

        def rep4_of(x: TwistPerm) -> MonomialMap:
            return MonomialMap(3, x.perm, x.twist)

        self.rep4 = MonomialRep(
            4,
            3,
            {
                "transposition": rep4_of(TwistPerm((0, 0, 0, 0), Permutation.from_cycles("(12)", 4))),
                "four_cycle": rep4_of(TwistPerm((0, 0, 0, 0), Permutation.from_cycles("(1234)", 4))),
                "twist": rep4_of(TwistPerm((1, 2, 0, 0), Permutation.identity(4))),
            },
            rep4_of,
            [(3, 1, 4)],
        )

        # block data of each permutation: how it permutes the three pair
        # partitions and whether it reverses each plane's orientation
        self._block_of_perm = {}
        for p in perms:
            self._block_of_perm[p.image] = self._solve_blocks(p)

        def rep6_of(x: TwistPerm) -> ConjMonomialMap:
            tau, flags = self._block_of_perm[x.perm.image]
            rotation = ConjMonomialMap(
                3,
                Permutation.identity(0),
                (),
                Permutation.identity(3),
                tuple(_form_value(f, x.twist) for f in _PAIR_FORMS),
                (0, 0, 0),
            )
            block = ConjMonomialMap(
                3, Permutation.identity(0), (), tau, (0, 0, 0), flags
            )
            return rotation * block

        self.rep6 = ConjMonomialRep(
            0,
            3,
            3,
            {
                "transposition": rep6_of(TwistPerm((0, 0, 0, 0), Permutation.from_cycles("(12)", 4))),
                "four_cycle": rep6_of(TwistPerm((0, 0, 0, 0), Permutation.from_cycles("(1234)", 4))),
                "twist": rep6_of(TwistPerm((1, 2, 0, 0), Permutation.identity(4))),
            },
            rep6_of,
        )

    @staticmethod
    def _solve_blocks(p: Permutation) -> tuple[Permutation, tuple[int, int, int]]:
        """Find the unique block permutation tau and flags satisfying
        form_i(p.m) = (+-1) form_{tau^-1(i)}(m) for every sum-zero m; the
        flag at destination block i records the minus sign (an
        orientation-reversing plane map)."""
        twists = [
            t for t in itertools.product(range(3), repeat=4) if sum(t) % 3 == 0
        ]
        tau_inverse = [0, 0, 0]
        flags = [0, 0, 0]
        for i, form in enumerate(_PAIR_FORMS):
            matches = []
            for j, other in enumerate(_PAIR_FORMS):
                for sign in (1, 2):  # 2 is -1 mod 3
                    if all(
                        _form_value(form, _permuted(t, p))
                        == (sign * _form_value(other, t)) % 3
                        for t in twists
                    ):
                        matches.append((j, sign))
            # the six signed forms are pairwise distinct functions
            if len(matches) != 1:
                raise AssertionError("block action of S4 is not well defined")
            j, sign = matches[0]
            tau_inverse[i] = j + 1
            flags[i] = 0 if sign == 1 else 1
        tau = Permutation(tau_inverse).inverse()
        return tau, tuple(flags)
