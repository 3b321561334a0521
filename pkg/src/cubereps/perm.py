"""Exact permutation arithmetic and deterministic stabilizer chains.

Points are labeled 1..n throughout, matching the usual cube-corner
numbering; the twelve edge letters a..l are accepted in cycle notation
as aliases for 1..12.

Composition is right-to-left function application: ``(p * q)(i) ==
p(q(i))``, so ``q`` acts first.  Orders and membership tests are exact;
group orders are plain Python integers and never overflow.
"""

from __future__ import annotations

from typing import Iterable, Sequence

EDGE_LETTERS = "abcdefghijkl"

_LETTER_VALUE = {ch: i + 1 for i, ch in enumerate(EDGE_LETTERS)}


class PermError(ValueError):
    """Raised for malformed permutations or cycle notation."""


class Permutation:
    """A bijection of {1..n}; ``image[i-1]`` is where point ``i`` goes."""

    __slots__ = ("image",)

    def __init__(self, image: Iterable[int]):
        image = tuple(image)
        if sorted(image) != list(range(1, len(image) + 1)):
            raise PermError(f"not a bijection of 1..{len(image)}: {image!r}")
        self.image = image

    @property
    def degree(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @classmethod
    def from_cycles(cls, cycles, degree: int) -> "Permutation":
        """Build a permutation from cycle notation.

        ``cycles`` is either a string like ``"(1342)"`` / ``"(abcd)(5687)"``
        or an iterable of label sequences.  The cycle ``(1342)`` maps
        1 to 3, 3 to 4, 4 to 2 and 2 to 1 (each entry goes to its
        successor).  Labels are digits 1..9, letters a..l, or
        space/comma separated decimal numbers.
        """
        if isinstance(cycles, str):
            cycles = parse_cycle_text(cycles)
        image = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = [int(x) for x in cycle]
            for label in cycle:
                if not 1 <= label <= degree:
                    raise PermError(f"label {label} out of range 1..{degree}")
                if label in seen:
                    raise PermError(f"duplicate label {label} across cycles")
                seen.add(label)
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                image[a - 1] = b
        return cls(image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = Permutation.identity(self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.image):
            inv[j - 1] = i + 1
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.image))

    def sign(self) -> int:
        """+1 for even permutations, -1 for odd ones."""
        n_cycles = len(self.cycles(include_fixed=True))
        return -1 if (self.degree - n_cycles) % 2 else 1

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        out = []
        seen = [False] * self.degree
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            j = self(start)
            while j != start:
                seen[j - 1] = True
                cycle.append(j)
                j = self(j)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_string(self, letters: bool = False) -> str:
        """Cycle notation, e.g. ``"(1342)"``; ``"()"`` for the identity.

        With ``letters=True`` labels print as edge letters a..l.
        """
        cycles = self.cycles()
        if not cycles:
            return "()"
        parts = []
        for cycle in cycles:
            if letters:
                if any(x > 12 for x in cycle):
                    raise PermError("letter notation only covers labels 1..12")
                parts.append("(" + "".join(EDGE_LETTERS[x - 1] for x in cycle) + ")")
            elif self.degree <= 9:
                parts.append("(" + "".join(str(x) for x in cycle) + ")")
            else:
                parts.append("(" + " ".join(str(x) for x in cycle) + ")")
        return "".join(parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"Permutation({list(self.image)})"


def parse_cycle_text(text: str) -> list[list[int]]:
    """Parse ``"(1342)(abcd)"`` style cycle notation into label lists.

    Inside a cycle, labels are either single characters (digits 1..9 or
    letters a..l) or, when separators are present, space/comma separated
    decimal numbers.  Whitespace between cycles is ignored.
    """
    cycles: list[list[int]] = []
    rest = text.strip()
    while rest:
        if not rest.startswith("("):
            raise PermError(f"expected '(' in cycle notation: {text!r}")
        end = rest.find(")")
        if end < 0:
            raise PermError(f"unbalanced parenthesis in {text!r}")
        body = rest[1:end].strip()
        rest = rest[end + 1 :].lstrip()
        if not body:
            continue
        cycle: list[int] = []
        if any(sep in body for sep in (" ", ",")):
            for token in body.replace(",", " ").split():
                cycle.append(_parse_label(token))
        else:
            for ch in body:
                cycle.append(_parse_label(ch))
        cycles.append(cycle)
    return cycles


def _parse_label(token: str) -> int:
    if token in _LETTER_VALUE:
        return _LETTER_VALUE[token]
    if token.isdigit() and int(token) >= 1:
        return int(token)
    raise PermError(f"bad cycle label {token!r}")


def perm_from_cycles(cycles, degree: int) -> Permutation:
    return Permutation.from_cycles(cycles, degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Right-to-left composition: ``compose(p, q)(i) == p(q(i))``."""
    if p.degree != q.degree:
        raise PermError(f"degree mismatch: {p.degree} vs {q.degree}")
    qi = q.image
    pi = p.image
    return Permutation(pi[qi[i] - 1] for i in range(len(pi)))


def sign(p: Permutation) -> int:
    return p.sign()


def conjugate(g: Permutation, x: Permutation) -> Permutation:
    """g * x * g^-1."""
    return compose(compose(g, x), g.inverse())


# ---------------------------------------------------------------------------
# Deterministic Schreier-Sims stabilizer chains.
#
# Internals work on 0-based image tuples for speed.  Transversal entries are
# never replaced once written, so every Schreier generator is examined
# exactly once and the construction is deterministic.


def _mul0(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(p[q[i]] for i in range(len(p)))


def _inv0(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class StabilizerChain:
    """Stabilizer chain for the group generated by the input permutations.

    Deterministic (base points are the smallest moved points, generators
    processed in order), with exact membership and exact order.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self._identity = tuple(range(degree))
        self.base: list[int] = []  # 0-based internally
        self._gens: list[list[tuple[int, ...]]] = []  # strong gens per level
        self._transversal: list[dict[int, tuple[int, ...]]] = []
        # processed (orbit point, generator) pairs; sound to skip because
        # transversal entries are never replaced once written
        self._done_pairs: list[set[tuple]] = []

    @classmethod
    def from_generators(cls, generators: Sequence[Permutation]) -> "StabilizerChain":
        if not generators:
            raise PermError("need at least one generator (use an identity)")
        degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise PermError("generators must share one degree")
        chain = cls(degree)
        for g in generators:
            residue, level = chain._sift(tuple(v - 1 for v in g.image))
            if residue == chain._identity:
                continue
            chain._insert(residue, level)
            for j in range(min(level, len(chain.base) - 1), -1, -1):
                chain._complete(j)
        return chain

    def order(self) -> int:
        n = 1
        for trans in self._transversal:
            n *= len(trans)
        return n

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        residue = self._sift(tuple(v - 1 for v in p.image))[0]
        return residue == self._identity

    def base_points(self) -> list[int]:
        return [b + 1 for b in self.base]

    # -- internals ----------------------------------------------------

    def _sift(self, g: tuple[int, ...], start: int = 0) -> tuple[tuple[int, ...], int]:
        """Reduce g through levels >= start; return (residue, stop level)."""
        for level in range(start, len(self.base)):
            img = g[self.base[level]]
            rep = self._transversal[level].get(img)
            if rep is None:
                return g, level
            g = _mul0(_inv0(rep), g)
        return g, len(self.base)

    def _insert(self, residue: tuple[int, ...], level: int) -> None:
        """Record a sifted non-identity residue as a strong generator.

        The residue fixes base[:level]; a new base point is opened when it
        fixes every existing base point.
        """
        if level == len(self.base):
            point = min(i for i, v in enumerate(residue) if v != i)
            self.base.append(point)
            self._gens.append([])
            self._transversal.append({point: self._identity})
            self._done_pairs.append(set())
        self._gens[level].append(residue)

    def _extend_orbit(self, level: int) -> None:
        """Grow the orbit of base[level] under all strong generators at
        levels >= level, keeping existing transversal entries."""
        trans = self._transversal[level]
        gens = [g for lvl in range(level, len(self.base)) for g in self._gens[lvl]]
        frontier = list(trans.keys())
        while frontier:
            point = frontier.pop()
            rep = trans[point]
            for g in gens:
                img = g[point]
                if img not in trans:
                    trans[img] = _mul0(g, rep)
                    frontier.append(img)

    def _complete(self, level: int) -> None:
        """Make `level` complete, assuming all deeper levels are complete.

        Every Schreier generator of this level must sift to the identity
        through the deeper chain; residues become new strong generators and
        the affected deeper levels are re-completed first.
        """
        while True:
            self._extend_orbit(level)
            trans = self._transversal[level]
            done = self._done_pairs[level]
            gens = [
                g for lvl in range(level, len(self.base)) for g in self._gens[lvl]
            ]
            restart = False
            for point in sorted(trans):
                rep = trans[point]
                for g in gens:
                    if (point, g) in done:
                        continue
                    done.add((point, g))
                    target = trans[g[point]]
                    schreier = _mul0(_inv0(target), _mul0(g, rep))
                    if schreier == self._identity:
                        continue
                    residue, lvl = self._sift(schreier, level + 1)
                    if residue == self._identity:
                        continue
                    self._insert(residue, lvl)
                    for j in range(min(lvl, len(self.base) - 1), level, -1):
                        self._complete(j)
                    restart = True
                    break
                if restart:
                    break
            if not restart:
                return


def chain_build(generators: Sequence[Permutation]) -> StabilizerChain:
    return StabilizerChain.from_generators(generators)


def chain_order(chain: StabilizerChain) -> int:
    return chain.order()


def chain_contains(chain: StabilizerChain, p: Permutation) -> bool:
    return chain.contains(p)
