"""Artin group words, Garside normal forms and the projection to the Weyl group.

Simple elements of the Artin monoid are identified with Weyl group elements.
A simple element is stored as the pair (matrix, inverse matrix) of integer
matrices in the simple-root basis, which makes both descent sets cheap:

* right descents of ``x``: nodes ``i`` with ``x(l_i) < 0``
* left descents of ``x``:  nodes ``i`` with ``x^-1(l_i) < 0``

The normal form of an element is ``Delta^p x_1 ... x_k`` with every pair
``(x_j, x_{j+1})`` left-weighted, ``x_1 != Delta`` and ``x_k != 1``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import DiagramMismatch
from .rootsystem import DynkinDiagram, WeylElement, generate_roots, parse_diagram_name

MAX_RANK = 8


@dataclass(frozen=True)
class ArtinWord:
    """A word in the generators ``R_i`` and their inverses."""

    diagram: DynkinDiagram
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for node, sign in self.letters:
            if node not in self.diagram.nodes:
                raise ValueError(f"generator {node} is not a node of {self.diagram.name}")
            if sign not in (1, -1):
                raise ValueError(f"exponent {sign} must be +1 or -1")

    @classmethod
    def from_ints(cls, diagram: DynkinDiagram, ints: Iterable[int]) -> "ArtinWord":
        letters = []
        for k in ints:
            k = int(k)
            if k == 0:
                raise ValueError("0 is not a generator")
            letters.append((abs(k), 1 if k > 0 else -1))
        return cls(diagram, tuple(letters))

    def to_ints(self) -> list[int]:
        return [node * sign for node, sign in self.letters]

    def __mul__(self, other: "ArtinWord") -> "ArtinWord":
        _same_diagram(self, other)
        return ArtinWord(self.diagram, self.letters + other.letters)

    def __pow__(self, k: int) -> "ArtinWord":
        if k < 0:
            return self.inverse() ** (-k)
        return ArtinWord(self.diagram, self.letters * k)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "ArtinWord":
        return ArtinWord(self.diagram, tuple((n, -s) for n, s in reversed(self.letters)))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"R{n}" if s > 0 else f"R{n}^-1" for n, s in self.letters)


def parse_word(diagram: DynkinDiagram, text: str | Sequence[int]) -> ArtinWord:
    """``"1 2 -1"`` or ``"1,2,-1"`` or ``[1, 2, -1]`` -> word."""
    if isinstance(text, str):
        ints = [int(tok) for tok in text.replace(",", " ").split()]
    else:
        ints = list(text)
    return ArtinWord.from_ints(diagram, ints)


def _same_diagram(u: ArtinWord, v: ArtinWord) -> None:
    if u.diagram != v.diagram:
        raise DiagramMismatch(f"{u.diagram.name} vs {v.diagram.name}")


class _Simple:
    __slots__ = ("m", "inv", "key")

    def __init__(self, m: np.ndarray, inv: np.ndarray):
        self.m = m
        self.inv = inv
        self.key = m.tobytes()

    def __eq__(self, other) -> bool:
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)


class Garside:
    """Simple-element arithmetic for one diagram."""

    def __init__(self, diagram: DynkinDiagram):
        if diagram.rank > MAX_RANK:
            raise ValueError(f"normal forms are limited to rank {MAX_RANK}")
        self.diagram = diagram
        system = generate_roots(diagram)
        self.system = system
        n = diagram.rank
        self.n = n
        self.gens = []
        for node in diagram.nodes:
            s = np.array([[int(x) for x in row] for row in system.reflection_matrix(node)], dtype=np.int64)
            self.gens.append(s)
        eye = np.eye(n, dtype=np.int64)
        self.identity = _Simple(eye, eye)
        x = self.identity
        while True:
            free = [k for k in range(n) if k not in self.right_descents(x)]
            if not free:
                break
            x = self.times_gen(x, free[0])
        self.delta = x
        self.delta_len = self.length(x)

    def right_descents(self, x: _Simple) -> set[int]:
        return {k for k in range(self.n) if x.m[:, k].min() < 0}

    def left_descents(self, x: _Simple) -> set[int]:
        return {k for k in range(self.n) if x.inv[:, k].min() < 0}

    def times_gen(self, x: _Simple, k: int) -> _Simple:
        s = self.gens[k]
        return _Simple(x.m @ s, s @ x.inv)

    def gen_times(self, k: int, x: _Simple) -> _Simple:
        s = self.gens[k]
        return _Simple(s @ x.m, x.inv @ s)

    def gen(self, k: int) -> _Simple:
        s = self.gens[k]
        return _Simple(s.copy(), s.copy())

    def tau(self, x: _Simple) -> _Simple:
        d = self.delta.m
        return _Simple(d @ x.m @ d, d @ x.inv @ d)

    def length(self, x: _Simple) -> int:
        return len(self.reduced_word(x))

    def reduced_word(self, x: _Simple) -> tuple[int, ...]:
        """Lexicographically least reduced word, as diagram nodes."""
        word = []
        while True:
            ld = self.left_descents(x)
            if not ld:
                return tuple(word)
            k = min(ld)
            word.append(self.diagram.nodes[k])
            x = self.gen_times(k, x)

    def normalize_pair(self, x: _Simple, y: _Simple) -> tuple[_Simple, _Simple]:
        """Move letters from the front of ``y`` to the back of ``x`` while ``x`` stays simple."""
        while True:
            movable = self.left_descents(y) - self.right_descents(x)
            if not movable:
                return x, y
            k = min(movable)
            x = self.times_gen(x, k)
            y = self.gen_times(k, y)


@lru_cache(maxsize=None)
def _garside(type_tag: str, rank: int) -> Garside:
    from .rootsystem import build_diagram

    return Garside(build_diagram(type_tag, rank))


def garside_for(diagram: DynkinDiagram) -> Garside:
    return _garside(diagram.type_tag, diagram.rank)


@dataclass(frozen=True)
class NormalForm:
    """Left-greedy normal form ``Delta^infimum * factors``.

    Each factor is given by its lexicographically least reduced word.
    """

    diagram_name: str
    infimum: int
    factors: tuple[tuple[int, ...], ...]

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors

    def to_json(self) -> dict:
        return {
            "diagram": self.diagram_name,
            "infimum": self.infimum,
            "factors": [list(f) for f in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict) -> "NormalForm":
        return cls(data["diagram"], int(data["infimum"]), tuple(tuple(f) for f in data["factors"]))


def _append(g: Garside, factors: list[_Simple], y: _Simple) -> None:
    factors.append(y)
    for k in range(len(factors) - 1, 0, -1):
        x, z = g.normalize_pair(factors[k - 1], factors[k])
        if x == factors[k - 1]:
            break
        factors[k - 1], factors[k] = x, z


def _normal_form_raw(word: ArtinWord) -> tuple[Garside, int, list[_Simple]]:
    g = garside_for(word.diagram)
    p = 0
    factors: list[_Simple] = []
    for node, sign in word.letters:
        k = word.diagram.index(node)
        if sign > 0:
            _append(g, factors, g.gen(k))
        else:
            # R_k^-1 = Delta^-1 * (w0 s_k)
            p -= 1
            factors = [g.tau(x) for x in factors]
            y = g.times_gen(g.delta, k)
            _append(g, factors, y)
        while factors and factors[0] == g.delta:
            factors.pop(0)
            p += 1
        while factors and factors[-1] == g.identity:
            factors.pop()
    return g, p, factors


def normal_form(word: ArtinWord) -> NormalForm:
    g, p, factors = _normal_form_raw(word)
    return NormalForm(word.diagram.name, p, tuple(g.reduced_word(x) for x in factors))


def is_left_weighted(diagram: DynkinDiagram, nf: NormalForm) -> bool:
    """Check the normal-form invariants of ``nf``."""
    g = garside_for(diagram)
    elems = []
    for word in nf.factors:
        x = g.identity
        for node in word:
            x = g.times_gen(x, diagram.index(node))
        elems.append(x)
    if any(x == g.identity or x == g.delta for x in elems):
        return False
    for x, y in zip(elems, elems[1:]):
        if not g.left_descents(y) <= g.right_descents(x):
            return False
    return True


def words_equal(u: ArtinWord, v: ArtinWord) -> bool:
    _same_diagram(u, v)
    return normal_form(u) == normal_form(v)


def project_to_weyl(word: ArtinWord) -> WeylElement:
    """Image under ``R_i -> r_i``."""
    return generate_roots(word.diagram).weyl_element(node for node, _ in word.letters)


def lattice_action(word: ArtinWord, vector: Sequence) -> tuple:
    """Act on a vector in simple-root coordinates through the Weyl group."""
    return project_to_weyl(word)(vector)


def braid_relation(diagram: DynkinDiagram, i: int, j: int, m: int | None = None) -> tuple[ArtinWord, ArtinWord]:
    """The two alternating words of length ``m_ij``."""
    if m is None:
        m = diagram.m(i, j)
    left = tuple((i if k % 2 == 0 else j, 1) for k in range(m))
    right = tuple((j if k % 2 == 0 else i, 1) for k in range(m))
    return ArtinWord(diagram, left), ArtinWord(diagram, right)


def random_word(diagram: DynkinDiagram, length: int, rng: random.Random, allow_inverses: bool = True) -> ArtinWord:
    letters = []
    for _ in range(length):
        node = rng.choice(diagram.nodes)
        sign = rng.choice((1, -1)) if allow_inverses else 1
        letters.append((node, sign))
    return ArtinWord(diagram, tuple(letters))


def word_from_json(data: dict) -> ArtinWord:
    return ArtinWord.from_ints(parse_diagram_name(data["diagram"]), data["word"])


def word_to_json(word: ArtinWord) -> dict:
    return {"diagram": word.diagram.name, "word": word.to_ints()}
