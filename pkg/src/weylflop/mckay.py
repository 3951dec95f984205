"""Finite subgroups of SL(2, C), their characters, and McKay graphs.

Group elements are floating-point 2x2 matrices; closure deduplicates at
tolerance 1e-8. Characters come from simultaneous eigenvectors of the class
multiplication matrices. Every quantity that matters downstream (tensor
product multiplicities) is an integer recovered by rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ClosureOverflow,
    DegenerateEigenspace,
    NonIntegralMultiplicity,
    UnrecognizedGraph,
)
from .rootsystem import DynkinDiagram, generate_roots, identify_gram

KINDS = ("cyclic", "binary-dihedral", "binary-tetrahedral", "binary-octahedral", "binary-icosahedral")
DEDUP_TOL = 1e-8
CHAR_TOL = 1e-6
MULT_TOL = 1e-4


def _quat(a: float, b: float, c: float, d: float) -> np.ndarray:
    """Unit quaternion a + bi + cj + dk as an SU(2) matrix."""
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]], dtype=complex)


def expected_order(kind: str, n: int | None = None) -> int:
    if kind == "cyclic":
        return n
    if kind == "binary-dihedral":
        return 4 * n
    return {"binary-tetrahedral": 24, "binary-octahedral": 48, "binary-icosahedral": 120}[kind]


def _generators(kind: str, n: int | None) -> list[np.ndarray]:
    if kind == "cyclic":
        z = np.exp(2j * np.pi / n)
        return [np.array([[z, 0], [0, 1 / z]], dtype=complex)]
    if kind == "binary-dihedral":
        z = np.exp(1j * np.pi / n)
        return [np.array([[z, 0], [0, 1 / z]], dtype=complex), _quat(0, 0, 1, 0)]
    half = 0.5
    tetra = [_quat(0, 1, 0, 0), _quat(0, 0, 1, 0), _quat(half, half, half, half)]
    if kind == "binary-tetrahedral":
        return tetra
    if kind == "binary-octahedral":
        r = 1 / math.sqrt(2)
        return tetra + [_quat(r, r, 0, 0)]
    if kind == "binary-icosahedral":
        phi = (1 + math.sqrt(5)) / 2
        return [_quat(half, half, half, half), _quat(phi / 2, 1 / (2 * phi), half, 0)]
    raise ValueError(f"unknown group kind {kind!r}; expected one of {KINDS}")


@dataclass(frozen=True, eq=False)
class MatrixGroup:
    kind: str
    n: int | None
    elements: np.ndarray  # shape (order, 2, 2)
    mult_table: np.ndarray  # mult_table[a, b] = index of elements[a] @ elements[b]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity_index(self) -> int:
        return 0

    def inverse_index(self) -> np.ndarray:
        return np.argmax(self.mult_table == self.identity_index, axis=1)

    def descriptor(self) -> dict:
        return {"kind": self.kind, "n": self.n, "order": self.order}


def _locate(elements: np.ndarray, query: np.ndarray) -> np.ndarray:
    """Index of each query matrix among ``elements`` (-1 if absent)."""
    flat_e = elements.reshape(len(elements), 4)
    flat_q = query.reshape(len(query), 4)
    dist = np.abs(flat_q[:, None, :] - flat_e[None, :, :]).max(axis=2)
    idx = dist.argmin(axis=1)
    idx[dist[np.arange(len(query)), idx] > DEDUP_TOL] = -1
    return idx


def build_group(kind: str, n: int | None = None) -> MatrixGroup:
    """Close the standard generators of ``kind`` under multiplication."""
    if kind not in KINDS:
        raise ValueError(f"unknown group kind {kind!r}; expected one of {KINDS}")
    if kind == "cyclic" and (n is None or n < 1):
        raise ValueError("cyclic groups need n >= 1")
    if kind == "binary-dihedral" and (n is None or n < 2):
        raise ValueError("binary dihedral groups need n >= 2")
    if kind not in ("cyclic", "binary-dihedral"):
        n = None
    target = expected_order(kind, n)
    gens = _generators(kind, n)
    elements = [np.eye(2, dtype=complex)]
    frontier = list(elements)
    while frontier:
        new = []
        for g in frontier:
            for h in gens:
                p = g @ h
                stack = np.array(elements + new)
                if _locate(stack, p[None])[0] < 0:
                    new.append(p)
        elements.extend(new)
        frontier = new
        if len(elements) > 2 * target:
            raise ClosureOverflow(f"closure of {kind} exceeded {2 * target} elements")
    elems = np.array(elements)
    for g in elems:
        if abs(np.linalg.det(g) - 1) > 1e-9:
            raise AssertionError("generator is not in SL(2)")
    products = np.einsum("aij,bjk->abik", elems, elems).reshape(-1, 2, 2)
    table = _locate(elems, products).reshape(len(elems), len(elems))
    if (table < 0).any():
        raise ClosureOverflow("multiplication table is not closed")
    if len(elems) != target:
        raise ClosureOverflow(f"{kind} closed at order {len(elems)}, expected {target}")
    return MatrixGroup(kind, n, elems, table)


@dataclass(frozen=True, eq=False)
class CharacterData:
    classes: list[list[int]]  # element indices; class 0 contains the identity
    table: np.ndarray  # table[i, c] = chi_i on class c

    @property
    def dims(self) -> list[int]:
        return [int(round(x.real)) for x in self.table[:, 0]]

    @property
    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def trivial_index(self) -> int:
        for i, row in enumerate(self.table):
            if np.allclose(row, 1, atol=CHAR_TOL):
                return i
        raise AssertionError("no trivial character")


def conjugacy_classes(group: MatrixGroup) -> list[list[int]]:
    inv = group.inverse_index()
    t = group.mult_table
    seen = np.zeros(group.order, dtype=bool)
    classes = []
    for x in range(group.order):
        if seen[x]:
            continue
        cls = sorted({int(t[t[g, x], inv[g]]) for g in range(group.order)})
        seen[cls] = True
        classes.append(cls)
    return classes


def character_table(group: MatrixGroup, seed: int = 0, retries: int = 10) -> CharacterData:
    """Irreducible characters via class-sum eigenvectors (Burnside's method)."""
    classes = conjugacy_classes(group)
    r = len(classes)
    order = group.order
    cls_of = np.empty(order, dtype=int)
    for c, members in enumerate(classes):
        cls_of[members] = c
    t = group.mult_table
    inv = group.inverse_index()
    # const[a, b, c] = #{x in K_a : x^-1 z in K_b} for a fixed z in K_c
    const = np.zeros((r, r, r))
    for c, members in enumerate(classes):
        z = members[0]
        for a, xs in enumerate(classes):
            for x in xs:
                const[a, cls_of[t[inv[x], z]], c] += 1
    sizes = np.array([len(c) for c in classes], dtype=float)

    rng = np.random.default_rng(seed)
    for _ in range(retries):
        coeffs = rng.normal(size=r)
        m = np.einsum("a,abc->bc", coeffs, const)
        vals, vecs = np.linalg.eig(m)
        gaps = np.abs(vals[:, None] - vals[None, :]) + np.eye(r) * 1e9
        if gaps.min() > CHAR_TOL:
            break
    else:
        raise DegenerateEigenspace(f"class sums do not separate characters after {retries} tries")

    rows = []
    for k in range(r):
        w = vecs[:, k] / vecs[0, k]  # central character: w[c] = omega(class sum c)
        dim2 = order / np.sum(np.abs(w) ** 2 / sizes)
        dim = math.sqrt(dim2.real)
        rows.append(w * dim / sizes)
    table = np.array(rows)
    # canonical row order: dimension, then character values
    keys = [
        (round(row[0].real), tuple((round(v.real, 6) + 0.0, round(v.imag, 6) + 0.0) for v in row))
        for row in table
    ]
    table = table[sorted(range(r), key=lambda i: keys[i])]
    data = CharacterData(classes, table)
    _check_characters(data, order)
    return data


def _check_characters(data: CharacterData, order: int) -> None:
    sizes = np.array(data.class_sizes)
    gram = (data.table * sizes) @ data.table.conj().T / order
    if not np.allclose(gram, np.eye(len(sizes)), atol=CHAR_TOL):
        raise DegenerateEigenspace("characters are not orthonormal")
    if sum(d * d for d in data.dims) != order:
        raise DegenerateEigenspace("squared dimensions do not sum to the group order")


@dataclass(frozen=True, eq=False)
class McKayGraph:
    dims: list[int]
    adjacency: np.ndarray  # integer matrix
    affine_node: int

    @property
    def has_loops(self) -> bool:
        return bool(np.any(np.diag(self.adjacency) > 0))

    def to_json(self) -> dict:
        return {
            "dims": list(self.dims),
            "adjacency": self.adjacency.tolist(),
            "affine_node": self.affine_node,
            "has_loops": self.has_loops,
        }


def mckay_graph(group: MatrixGroup, chars: CharacterData | None = None) -> McKayGraph:
    """``a_ij`` = multiplicity of irrep ``i`` in ``irrep_j (x) natural``."""
    if chars is None:
        chars = character_table(group)
    sizes = np.array(chars.class_sizes)
    natural = np.array([np.trace(group.elements[c[0]]) for c in chars.classes])
    tab = chars.table
    raw = np.einsum("c,c,jc,ic->ij", sizes, natural, tab, tab.conj()) / group.order
    adj = np.rint(raw.real).astype(int)
    if np.abs(raw - adj).max() > MULT_TOL:
        raise NonIntegralMultiplicity(f"max deviation {np.abs(raw - adj).max():.2e}")
    if not (adj == adj.T).all():
        raise AssertionError("McKay adjacency is not symmetric")
    return McKayGraph(chars.dims, adj, chars.trivial_index())


@dataclass(frozen=True)
class AffineClassification:
    affine_tag: str  # e.g. "~E6"
    delta: DynkinDiagram
    node_map: dict[int, int]  # graph vertex -> delta node (affine vertex omitted)

    def to_json(self) -> dict:
        return {
            "affine_type": self.affine_tag,
            "delta": self.delta.name,
            "node_map": {str(k): v for k, v in sorted(self.node_map.items())},
        }


def classify_affine(graph: McKayGraph) -> AffineClassification:
    """Recognize an extended ADE diagram and return ``delta`` = graph minus the affine node."""
    adj = graph.adjacency
    size = len(adj)
    if graph.has_loops:
        raise UnrecognizedGraph("graph has loops")
    rest = [v for v in range(size) if v != graph.affine_node]
    if not rest:
        raise UnrecognizedGraph("graph has a single vertex")
    sub = adj[np.ix_(rest, rest)]
    gram = [[2 if a == b else -int(sub[a, b]) for b in range(len(rest))] for a in range(len(rest))]
    if any(int(sub[a, b]) > 1 for a in range(len(rest)) for b in range(len(rest))):
        raise UnrecognizedGraph("multiple edge between finite nodes")
    delta, position = identify_gram(gram)
    if not delta.simply_laced:
        raise UnrecognizedGraph(f"{delta.name} is not simply laced")
    # the affine vertex must attach like minus the highest root
    system = generate_roots(delta)
    theta = system.highest_root()
    expected = {}
    for a, v in enumerate(rest):
        node = position[a]
        pairing = system.inner(theta.coords, system.simple_root(node).coords)
        expected[v] = int(pairing)
    for v in rest:
        if int(adj[graph.affine_node, v]) != expected[v]:
            raise UnrecognizedGraph("affine vertex is not attached along the highest root")
    node_map = {v: position[a] for a, v in enumerate(rest)}
    return AffineClassification("~" + delta.name, delta, node_map)


def predicted_delta(kind: str, n: int | None = None) -> str:
    if kind == "cyclic":
        return f"A{n - 1}"
    if kind == "binary-dihedral":
        return f"D{n + 2}"
    return {"binary-tetrahedral": "E6", "binary-octahedral": "E7", "binary-icosahedral": "E8"}[kind]


def _c(z: complex) -> list[float]:
    return [round(float(z.real), 12) + 0.0, round(float(z.imag), 12) + 0.0]


def mckay_report(kind: str, n: int | None = None) -> dict:
    group = build_group(kind, n)
    chars = character_table(group)
    graph = mckay_graph(group, chars)
    report = {
        "group": group.descriptor(),
        "class_sizes": chars.class_sizes,
        "characters": [[_c(z) for z in row] for row in chars.table],
        "mckay": graph.to_json(),
    }
    try:
        report["classification"] = classify_affine(graph).to_json()
    except UnrecognizedGraph as exc:
        report["classification"] = {"error": exc.code, "message": str(exc)}
    return report
