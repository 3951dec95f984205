"""Finite-type Dynkin diagrams, root systems and Weyl group elements.

Everything here is exact: vectors are tuples of :class:`fractions.Fraction`
(or ints) in the basis of simple roots, and matrices act on column vectors in
that basis.

Node ordering per type (nodes are numbered from 1):

* ``A_n``  chain ``1 - 2 - ... - n``
* ``B_n``  chain with ``m(n-1, n) = 4``; node ``n`` is short
* ``C_n``  chain with ``m(n-1, n) = 4``; node ``n`` is long
* ``D_n``  chain ``1 - ... - (n-1)``, node ``n`` attached to ``n-2``
* ``E_n``  chain ``1 - ... - (n-1)``, node ``n`` attached to ``3``
* ``F_4``  ``1 - 2 = 3 - 4``; nodes 1, 2 long
* ``G_2``  ``1 = 2``; node 1 short
* ``A1xA1`` two orthogonal nodes (the only reducible diagram admitted)

Long roots have squared length 2; short roots have squared length 1
(types B, C, F) or 2/3 (type G).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import InvalidTypeRank, UnrecognizedGraph

Vector = tuple
Matrix = tuple

PRODUCT_TAG = "A1xA1"
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}


def _chain(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(1, n)]


def _standard_shape(type_tag: str, rank: int) -> tuple[dict[tuple[int, int], int], list[Fraction]]:
    """Edge labels (m > 2 only) and squared root lengths for a standard diagram."""
    two, one = Fraction(2), Fraction(1)
    if type_tag == PRODUCT_TAG:
        if rank != 2:
            raise InvalidTypeRank(f"{PRODUCT_TAG} has rank 2, not {rank}")
        return {}, [two, two]
    if type_tag in _MIN_RANK:
        if rank < _MIN_RANK[type_tag]:
            raise InvalidTypeRank(f"{type_tag}_{rank} is not of finite type")
    elif type_tag == "E":
        if rank not in (6, 7, 8):
            raise InvalidTypeRank(f"E_{rank} is not of finite type")
    elif type_tag == "F":
        if rank != 4:
            raise InvalidTypeRank(f"F_{rank} is not of finite type")
    elif type_tag == "G":
        if rank != 2:
            raise InvalidTypeRank(f"G_{rank} is not of finite type")
    else:
        raise InvalidTypeRank(f"unknown type {type_tag!r}")

    if type_tag == "A":
        return {e: 3 for e in _chain(rank)}, [two] * rank
    if type_tag in ("B", "C"):
        edges = {e: 3 for e in _chain(rank)}
        edges[(rank - 1, rank)] = 4
        if type_tag == "B":
            lengths = [two] * (rank - 1) + [one]
        else:
            lengths = [one] * (rank - 1) + [two]
        return edges, lengths
    if type_tag == "D":
        edges = {e: 3 for e in _chain(rank - 1)}
        edges[(rank - 2, rank)] = 3
        return edges, [two] * rank
    if type_tag == "E":
        edges = {e: 3 for e in _chain(rank - 1)}
        edges[(3, rank)] = 3
        return edges, [two] * rank
    if type_tag == "F":
        return {(1, 2): 3, (2, 3): 4, (3, 4): 3}, [two, two, one, one]
    # G_2
    return {(1, 2): 6}, [Fraction(2, 3), two]


@dataclass(frozen=True)
class DynkinDiagram:
    """A finite-type Dynkin diagram with its Coxeter labels ``m_ij``."""

    type_tag: str
    rank: int
    nodes: tuple[int, ...]
    labels: Mapping[tuple[int, int], int] = field(hash=False, compare=False)
    lengths: tuple[Fraction, ...] = field(repr=False)

    def __post_init__(self):
        for (i, j), m in self.labels.items():
            if m not in (2, 3, 4, 6):
                raise ValueError(f"label m_{i}{j} = {m} not in {{2,3,4,6}}")
            if self.labels.get((j, i)) != m:
                raise ValueError(f"labels not symmetric at ({i}, {j})")

    @property
    def name(self) -> str:
        return self.type_tag if self.type_tag == PRODUCT_TAG else f"{self.type_tag}{self.rank}"

    @property
    def simply_laced(self) -> bool:
        return all(m in (2, 3) for m in self.labels.values())

    def m(self, i: int, j: int) -> int:
        return self.labels[(i, j)]

    def index(self, node: int) -> int:
        return self.nodes.index(node)

    def edges(self) -> list[tuple[int, int, int]]:
        return [(i, j, m) for (i, j), m in sorted(self.labels.items()) if i < j and m > 2]

    def neighbors(self, node: int) -> list[int]:
        return [j for j in self.nodes if j != node and self.labels[(node, j)] > 2]


def build_diagram(type_tag: str, rank: int) -> DynkinDiagram:
    """Build the standard diagram of the given finite type.

    >>> build_diagram("A", 2).m(1, 2)
    3
    """
    type_tag = type_tag.strip()
    if type_tag.upper() == PRODUCT_TAG.upper():
        type_tag = PRODUCT_TAG
    else:
        type_tag = type_tag.upper()
    edges, lengths = _standard_shape(type_tag, rank)
    nodes = tuple(range(1, rank + 1))
    labels = {}
    for i, j in itertools.permutations(nodes, 2):
        m = edges.get((min(i, j), max(i, j)), 2)
        labels[(i, j)] = m
    return DynkinDiagram(type_tag, rank, nodes, labels, tuple(lengths))


def parse_diagram_name(name: str) -> DynkinDiagram:
    """``"A2"``, ``"E6"``, ``"A1xA1"`` (also ``"A_2"``) -> diagram."""
    text = name.strip().replace("_", "")
    if text.upper() in ("A1XA1", "A1×A1"):
        return build_diagram(PRODUCT_TAG, 2)
    if len(text) < 2 or not text[1:].isdigit():
        raise InvalidTypeRank(f"cannot parse diagram name {name!r}")
    return build_diagram(text[0], int(text[1:]))


def gram_matrix(diagram: DynkinDiagram) -> Matrix:
    """Symmetrized Cartan form on the simple roots (long roots of length^2 2)."""
    n = diagram.rank
    d = diagram.lengths
    rows = []
    for a, i in enumerate(diagram.nodes):
        row = []
        for b, j in enumerate(diagram.nodes):
            if a == b:
                row.append(d[a])
                continue
            m = diagram.labels[(i, j)]
            short = min(d[a], d[b])
            if m == 2:
                row.append(Fraction(0))
            elif m == 3:
                row.append(-d[a] / 2)
            elif m == 4:
                row.append(-short)
            else:
                row.append(-short * Fraction(3, 2))
        rows.append(tuple(row))
    assert len(rows) == n
    return tuple(rows)


@dataclass(frozen=True, order=True)
class Root:
    """A root written in the simple-root basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if any(c > 0 for c in self.coords) and any(c < 0 for c in self.coords):
            raise ValueError(f"root coordinates {self.coords} have mixed signs")
        if not any(self.coords):
            raise ValueError("zero vector is not a root")

    @property
    def sign(self) -> int:
        return 1 if any(c > 0 for c in self.coords) else -1

    @property
    def positive(self) -> bool:
        return self.sign > 0

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coords))

    def support(self) -> frozenset[int]:
        """Indices (0-based) of nonzero coordinates."""
        return frozenset(k for k, c in enumerate(self.coords) if c)


def root_sort_key(root: Root) -> tuple:
    return (abs(root.height), tuple(-abs(c) for c in root.coords))


def is_root_vector(v: Sequence) -> bool:
    return any(v) and not (any(c > 0 for c in v) and any(c < 0 for c in v))


def _inner(gram: Matrix, u: Sequence, v: Sequence) -> Fraction:
    total = Fraction(0)
    for a, ua in enumerate(u):
        if ua:
            row = gram[a]
            for b, vb in enumerate(v):
                if vb:
                    total += ua * row[b] * vb
    return total


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(a == b)) for b in range(n)) for a in range(n))


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    cols = list(zip(*y))
    return tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols) for row in x)


def mat_vec(x: Matrix, v: Sequence) -> tuple:
    return tuple(sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in x)


def mat_transpose(x: Matrix) -> Matrix:
    return tuple(zip(*x))


@dataclass(frozen=True)
class WeylElement:
    """An element of a Weyl group, kept with a word that produces it.

    ``matrix`` is the ordered product ``S[word[0]] @ S[word[1]] @ ...``, so
    the last letter acts first.
    """

    diagram: DynkinDiagram
    word: tuple[int, ...] = field(compare=False)
    matrix: Matrix

    def __call__(self, v: Sequence) -> tuple:
        return mat_vec(self.matrix, v)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.diagram, self.word + other.word, mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElement":
        system = generate_roots(self.diagram)
        return system.weyl_element(tuple(reversed(self.word)))

    def is_identity(self) -> bool:
        return self.matrix == identity_matrix(len(self.matrix))


class RootSystem:
    """Positive roots and inner product of a finite-type diagram."""

    def __init__(self, diagram: DynkinDiagram):
        self.diagram = diagram
        self.rank = diagram.rank
        self.gram: Matrix = gram_matrix(diagram)
        n = self.rank
        # cartan[i][j] = 2<l_i, l_j>/<l_j, l_j>, so r_j(l_i) = l_i - cartan[i][j] l_j
        cartan = []
        for a in range(n):
            row = []
            for b in range(n):
                c = 2 * self.gram[a][b] / self.gram[b][b]
                assert c.denominator == 1
                row.append(int(c))
            cartan.append(tuple(row))
        self.cartan: tuple[tuple[int, ...], ...] = tuple(cartan)
        self.positive: tuple[Root, ...] = tuple(sorted(self._close(), key=root_sort_key))
        self._positive_set = frozenset(self.positive)
        self._reflections = tuple(self._simple_reflection_matrix(k) for k in range(n))

    def _reflect_int(self, k: int, v: tuple[int, ...]) -> tuple[int, ...]:
        pairing = sum(v[a] * self.cartan[a][k] for a in range(self.rank))
        if not pairing:
            return v
        out = list(v)
        out[k] -= pairing
        return tuple(out)

    def _close(self) -> set[Root]:
        simple = [tuple(int(a == k) for a in range(self.rank)) for k in range(self.rank)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for v in frontier:
                for k in range(self.rank):
                    w = self._reflect_int(k, v)
                    if w[k] < 0 and all(c <= 0 for c in w):
                        continue
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return {Root(v) for v in seen}

    # -- basic geometry ---------------------------------------------------

    def simple_root(self, node: int) -> Root:
        k = self.diagram.index(node)
        return Root(tuple(int(a == k) for a in range(self.rank)))

    def inner(self, u: Sequence, v: Sequence) -> Fraction:
        return _inner(self.gram, _coords(u), _coords(v))

    def reflect(self, root, v: Sequence) -> tuple:
        """Reflect ``v`` in the hyperplane orthogonal to ``root``."""
        r = _coords(root)
        v = _coords(v)
        c = 2 * self.inner(v, r) / self.inner(r, r)
        return tuple(Fraction(a) - c * b for a, b in zip(v, r))

    def is_root(self, v: Sequence) -> bool:
        v = tuple(int(c) for c in _coords(v))
        if not is_root_vector(v):
            return False
        r = Root(v)
        return (r if r.positive else -r) in self._positive_set

    def all_roots(self) -> list[Root]:
        return list(self.positive) + [-r for r in self.positive]

    def _simple_reflection_matrix(self, k: int) -> Matrix:
        n = self.rank
        cols = []
        for a in range(n):
            e = tuple(int(b == a) for b in range(n))
            cols.append(self._reflect_int(k, e))
        return tuple(tuple(Fraction(cols[b][a]) for b in range(n)) for a in range(n))

    def reflection_matrix(self, node: int) -> Matrix:
        return self._reflections[self.diagram.index(node)]

    def weyl_element(self, word: Iterable[int]) -> WeylElement:
        word = tuple(word)
        m = identity_matrix(self.rank)
        for node in word:
            m = mat_mul(m, self.reflection_matrix(node))
        return WeylElement(self.diagram, word, m)

    def root_of_reflection(self, w: WeylElement) -> Root | None:
        """The positive root whose reflection is ``w``, if ``w`` is a reflection."""
        for r in self.positive:
            if all(self.reflect(r, e) == w(e) for e in _basis(self.rank)):
                return r
        return None

    def apply(self, w: WeylElement, root: Root) -> Root:
        image = w(root.coords)
        return Root(tuple(int(c) for c in image))

    def longest_word(self) -> tuple[int, ...]:
        """A reduced word for the longest element (greedy right extension)."""
        word: list[int] = []
        m = identity_matrix(self.rank)
        while True:
            for node in self.diagram.nodes:
                k = self.diagram.index(node)
                col = [row[k] for row in m]
                if all(c >= 0 for c in col):
                    word.append(node)
                    m = mat_mul(m, self._reflections[k])
                    break
            else:
                return tuple(word)

    def highest_root(self) -> Root:
        return max(self.positive, key=lambda r: (r.height, r.coords))


def _coords(v) -> tuple:
    return v.coords if isinstance(v, Root) else tuple(v)


def _basis(n: int) -> list[tuple[int, ...]]:
    return [tuple(int(a == b) for b in range(n)) for a in range(n)]


_SYSTEMS: dict[tuple[str, int], RootSystem] = {}


def generate_roots(diagram: DynkinDiagram) -> RootSystem:
    """Root system of ``diagram``; cached per (type, rank)."""
    key = (diagram.type_tag, diagram.rank)
    system = _SYSTEMS.get(key)
    if system is None:
        system = _SYSTEMS[key] = RootSystem(diagram)
    return system


def reflect(system: RootSystem, root, v: Sequence) -> tuple:
    return system.reflect(root, v)


def roots_sent_negative(w: WeylElement, system: RootSystem) -> set[Root]:
    return {r for r in system.positive if not system.apply(w, r).positive}


def rank2_positive_roots(system: RootSystem, i: int, j: int) -> set[Root]:
    """Positive roots in the span of the simple roots at nodes ``i`` and ``j``."""
    if i == j:
        raise ValueError("rank-2 subsystem needs two distinct nodes")
    allowed = {system.diagram.index(i), system.diagram.index(j)}
    return {r for r in system.positive if r.support() <= allowed}


def verify_coxeter(diagram: DynkinDiagram) -> dict:
    """Check ``r_i^2 = 1`` and ``(r_i r_j)^m_ij = 1`` with exact matrices.

    Also records whether ``m_ij`` is the exact order of ``r_i r_j``.
    """
    system = generate_roots(diagram)
    ident = identity_matrix(system.rank)
    relations = []
    for i in diagram.nodes:
        r = system.reflection_matrix(i)
        relations.append({"relation": f"r{i}^2", "nodes": [i], "holds": mat_mul(r, r) == ident})
    for i, j in itertools.combinations(diagram.nodes, 2):
        m = diagram.m(i, j)
        prod = mat_mul(system.reflection_matrix(i), system.reflection_matrix(j))
        power = ident
        order = None
        for k in range(1, m + 1):
            power = mat_mul(power, prod)
            if power == ident:
                order = k
                break
        relations.append({
            "relation": f"(r{i} r{j})^{m}",
            "nodes": [i, j],
            "m": m,
            "holds": order == m,
            "order": order,
        })
    return {
        "diagram": diagram.name,
        "relations": relations,
        "ok": all(rel["holds"] for rel in relations),
    }


@dataclass(frozen=True)
class SurfaceLattice:
    """Classes of exceptional curves with the intersection pairing.

    ``[E_j]`` is identified with the simple root at node ``j``; the pairing is
    minus the Gram matrix, so ``[E_j]^2 = -2``.
    """

    diagram: DynkinDiagram
    pairing: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, diagram: DynkinDiagram) -> "SurfaceLattice":
        if not diagram.simply_laced:
            raise ValueError("surface lattices exist only for simply laced diagrams")
        gram = gram_matrix(diagram)
        return cls(diagram, tuple(tuple(int(-g) for g in row) for row in gram))

    def intersect(self, u: Sequence, v: Sequence) -> Fraction:
        return _inner(self.pairing, u, v)

    def picard_lefschetz(self, node: int, omega: Sequence) -> tuple:
        """``omega + ([E_j] . omega) [E_j]``."""
        k = self.diagram.index(node)
        e = tuple(int(a == k) for a in range(self.diagram.rank))
        c = self.intersect(e, omega)
        return tuple(Fraction(w) + c * b for w, b in zip(omega, e))


# -- identification of a Gram matrix with a standard diagram -----------------


def _label_from_gram(gij: Fraction, gii: Fraction, gjj: Fraction) -> int:
    if gij == 0:
        return 2
    cos2 = gij * gij / (gii * gjj)
    table = {Fraction(1, 4): 3, Fraction(1, 2): 4, Fraction(3, 4): 6}
    if cos2 not in table or gij > 0:
        raise UnrecognizedGraph(f"inner product {gij} is not a Coxeter angle")
    return table[cos2]


def identify_gram(gram: Sequence[Sequence], allow_product: bool = False) -> tuple[DynkinDiagram, list[int]]:
    """Find the standard diagram whose Gram matrix is a positive multiple of ``gram``.

    Returns the diagram and ``position``: ``position[a]`` is the standard node
    matching input index ``a``. Raises :class:`UnrecognizedGraph` otherwise.
    """
    g = [[Fraction(x) for x in row] for row in gram]
    n = len(g)
    labels = {}
    adj: dict[int, list[int]] = {a: [] for a in range(n)}
    for a, b in itertools.combinations(range(n), 2):
        m = _label_from_gram(g[a][b], g[a][a], g[b][b])
        labels[(a, b)] = labels[(b, a)] = m
        if m > 2:
            adj[a].append(b)
            adj[b].append(a)
    edges = sum(len(v) for v in adj.values()) // 2

    if n == 2 and edges == 0 and allow_product:
        if g[0][0] != g[1][1]:
            raise UnrecognizedGraph("orthogonal pair of unequal lengths")
        return _checked(build_diagram(PRODUCT_TAG, 2), [1, 2], g)
    if edges != n - 1 or not _connected(adj, n):
        raise UnrecognizedGraph("diagram is not a connected tree")

    longest = max(g[a][a] for a in range(n))
    long_nodes = {a for a in range(n) if g[a][a] == longest}
    branch = [a for a in range(n) if len(adj[a]) >= 3]

    if not branch:
        ends = sorted(a for a in range(n) if len(adj[a]) <= 1)
        path = _walk(adj, ends[0])
        steps = [labels[(path[k], path[k + 1])] for k in range(n - 1)]
        if all(m == 3 for m in steps):
            return _checked(build_diagram("A", n), _positions(path), g)
        if steps == [6]:
            if path[0] in long_nodes:
                path.reverse()
            return _checked(build_diagram("G", 2), _positions(path), g)
        if steps.count(4) == 1 and all(m in (3, 4) for m in steps):
            if n == 2:
                if path[0] in long_nodes:
                    path.reverse()
                return _checked(build_diagram("C", 2), _positions(path), g)
            if n == 4 and steps[1] == 4:
                if path[0] not in long_nodes:
                    path.reverse()
                return _checked(build_diagram("F", 4), _positions(path), g)
            if steps[0] == 4:
                path.reverse()
                steps.reverse()
            if steps[-1] == 4:
                tag = "C" if path[-1] in long_nodes else "B"
                return _checked(build_diagram(tag, n), _positions(path), g)
        raise UnrecognizedGraph(f"unrecognized chain with labels {steps}")

    if len(branch) != 1 or len(adj[branch[0]]) != 3:
        raise UnrecognizedGraph("diagram has more than one branch point")
    if any(m not in (2, 3) for m in labels.values()):
        raise UnrecognizedGraph("branched diagram must be simply laced")
    c = branch[0]
    arms = sorted((_arm(adj, c, nb) for nb in sorted(adj[c])), key=len)
    lengths = [len(a) for a in arms]
    order = [None] * n
    if lengths[:2] == [1, 1]:
        # D_n: long arm is 1..n-3, branch n-2, short arms n-1 and n
        chain = list(reversed(arms[2])) + [c]
        for k, a in enumerate(chain):
            order[a] = k + 1
        order[arms[0][0]] = n - 1
        order[arms[1][0]] = n
        return _checked(build_diagram("D", n), order, g)
    if lengths[0] == 1 and lengths[1] == 2 and lengths[2] in (2, 3, 4):
        # E_n: arm of length 2 is nodes 2, 1; branch 3; long arm 4..n-1; leaf n
        order[arms[1][0]] = 2
        order[arms[1][1]] = 1
        order[c] = 3
        for k, a in enumerate(arms[2]):
            order[a] = 4 + k
        order[arms[0][0]] = n
        return _checked(build_diagram("E", n), order, g)
    raise UnrecognizedGraph(f"branched diagram with arms {lengths}")


def _connected(adj, n) -> bool:
    if n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return len(seen) == n


def _walk(adj, start) -> list[int]:
    path = [start]
    prev = None
    while True:
        nxt = [b for b in adj[path[-1]] if b != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def _arm(adj, centre, first) -> list[int]:
    arm = [first]
    prev = centre
    while True:
        nxt = [b for b in adj[arm[-1]] if b != prev]
        if not nxt:
            return arm
        prev = arm[-1]
        arm.append(nxt[0])


def _positions(path: list[int]) -> list[int]:
    order = [0] * len(path)
    for k, a in enumerate(path):
        order[a] = k + 1
    return order


def _checked(diagram: DynkinDiagram, position: list[int], g) -> tuple[DynkinDiagram, list[int]]:
    std = gram_matrix(diagram)
    n = len(g)
    a0 = position.index(1)
    scale = g[a0][a0] / std[0][0]
    for a in range(n):
        for b in range(n):
            if g[a][b] != scale * std[position[a] - 1][position[b] - 1]:
                raise UnrecognizedGraph(f"Gram matrix does not match {diagram.name}")
    return diagram, position


# -- serialization -------------------------------------------------------------


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s) -> Fraction:
    return Fraction(s)


def diagram_to_json(diagram: DynkinDiagram) -> dict:
    return {
        "type": diagram.type_tag,
        "rank": diagram.rank,
        "name": diagram.name,
        "nodes": list(diagram.nodes),
        "edges": [[i, j, m] for i, j, m in diagram.edges()],
        "root_lengths_squared": [frac_str(d) for d in diagram.lengths],
        "node_order": _NODE_ORDER_DOC.get(diagram.type_tag, ""),
    }


def diagram_from_json(data: Mapping) -> DynkinDiagram:
    diagram = build_diagram(data["type"], int(data["rank"]))
    if "edges" in data and [list(e) for e in data["edges"]] != [list(e) for e in diagram.edges()]:
        raise ValueError("edge list does not match the standard diagram")
    return diagram


def roots_to_json(system: RootSystem) -> dict:
    return {
        "diagram": diagram_to_json(system.diagram),
        "gram": [[frac_str(x) for x in row] for row in system.gram],
        "positive_roots": [list(r.coords) for r in system.positive],
    }


def roots_from_json(data: Mapping) -> RootSystem:
    system = generate_roots(diagram_from_json(data["diagram"]))
    if [tuple(r) for r in data["positive_roots"]] != [r.coords for r in system.positive]:
        raise ValueError("root list does not match the diagram")
    return system


def weyl_to_json(w: WeylElement) -> dict:
    return {
        "diagram": w.diagram.name,
        "word": list(w.word),
        "matrix": [[frac_str(x) for x in row] for row in w.matrix],
    }


def weyl_from_json(data: Mapping) -> WeylElement:
    diagram = parse_diagram_name(data["diagram"])
    w = generate_roots(diagram).weyl_element(data["word"])
    if "matrix" in data:
        matrix = tuple(tuple(parse_frac(x) for x in row) for row in data["matrix"])
        if matrix != w.matrix:
            raise ValueError("matrix does not match word")
    return w


_NODE_ORDER_DOC = {
    "A": "chain 1-2-...-n",
    "B": "chain 1-...-n, m(n-1,n)=4, node n short",
    "C": "chain 1-...-n, m(n-1,n)=4, node n long",
    "D": "chain 1-...-(n-1), node n attached to n-2",
    "E": "chain 1-...-(n-1), node n attached to 3",
    "F": "1-2=3-4, nodes 1,2 long",
    "G": "1=2, node 1 short",
    PRODUCT_TAG: "two orthogonal nodes",
}
