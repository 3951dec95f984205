import json

import numpy as np
import pytest

from weylflop.errors import UnrecognizedGraph
from weylflop.mckay import (
    build_group,
    character_table,
    classify_affine,
    conjugacy_classes,
    expected_order,
    mckay_graph,
    mckay_report,
    predicted_delta,
)

# dimensions of irreps = marks of the extended diagram (standard tables)
MARKS = {
    "binary-tetrahedral": [1, 1, 1, 2, 2, 2, 3],
    "binary-octahedral": [1, 1, 2, 2, 2, 3, 3, 4],
    "binary-icosahedral": [1, 2, 2, 3, 3, 4, 4, 5, 6],
}

CASES = (
    [("cyclic", n) for n in range(2, 9)]
    + [("binary-dihedral", n) for n in range(2, 7)]
    + [(k, None) for k in MARKS]
)


@pytest.mark.parametrize("kind,n,order", [("cyclic", 2, 2), ("cyclic", 5, 5), ("binary-dihedral", 2, 8), ("binary-dihedral", 5, 20), ("binary-tetrahedral", None, 24), ("binary-octahedral", None, 48), ("binary-icosahedral", None, 120)])
def test_group_orders(kind, n, order):
    g = build_group(kind, n)
    assert g.order == order == expected_order(kind, n)
    assert np.allclose(np.linalg.det(g.elements), 1, atol=1e-9)


def test_cyclic_two_is_plus_minus_identity():
    g = build_group("cyclic", 2)
    assert np.allclose(sorted(np.trace(e).real for e in g.elements), [-2, 2])


def test_quaternion_group_has_five_classes():
    assert sorted(len(c) for c in conjugacy_classes(build_group("binary-dihedral", 2))) == [1, 1, 2, 2, 2]


def test_multiplication_table_is_a_group_law():
    g = build_group("binary-tetrahedral")
    t = g.mult_table
    assert all(sorted(row) == list(range(g.order)) for row in t)
    a, b, c = 5, 11, 17
    assert t[t[a, b], c] == t[a, t[b, c]]
    assert np.allclose(g.elements[a] @ g.elements[b], g.elements[t[a, b]])


def test_cyclic_three_characters():
    chars = character_table(build_group("cyclic", 3))
    assert chars.dims == [1, 1, 1]
    values = {complex(round(v.real, 9), round(v.imag, 9)) for row in chars.table for v in row}
    w = np.exp(2j * np.pi / 3)
    expected = {complex(round(z.real, 9), round(z.imag, 9)) for z in (1, w, w * w)}
    assert values == expected


@pytest.mark.parametrize("kind,n", CASES)
def test_character_invariants(kind, n):
    g = build_group(kind, n)
    chars = character_table(g)
    sizes = np.array(chars.class_sizes)
    r = len(sizes)
    assert chars.table.shape == (r, r)
    assert np.allclose(chars.table[chars.trivial_index()], 1)
    rows = (chars.table * sizes) @ chars.table.conj().T / g.order
    assert np.allclose(rows, np.eye(r), atol=1e-6)
    # column orthogonality: sum_i chi_i(c) conj chi_i(c') = |G| / |K_c| delta
    cols = chars.table.conj().T @ chars.table
    assert np.allclose(cols, np.diag(g.order / sizes), atol=1e-6)
    assert sum(d * d for d in chars.dims) == g.order


@pytest.mark.parametrize("kind", sorted(MARKS))
def test_polyhedral_dims_are_affine_marks(kind):
    assert sorted(character_table(build_group(kind)).dims) == MARKS[kind]


@pytest.mark.parametrize("kind,n", CASES)
def test_mckay_graph_and_classification(kind, n):
    graph = mckay_graph(build_group(kind, n))
    adj = graph.adjacency
    assert (adj == adj.T).all()
    assert len(adj) == len(graph.dims)
    # affine eigenvector property: 2 dim_i = sum_j a_ij dim_j
    d = np.array(graph.dims)
    assert (adj @ d == 2 * d).all()
    cls = classify_affine(graph)
    assert cls.delta.name == predicted_delta(kind, n)
    assert cls.affine_tag == "~" + predicted_delta(kind, n)
    assert len(cls.node_map) == len(adj) - 1


def test_cyclic_three_is_a_triangle():
    adj = mckay_graph(build_group("cyclic", 3)).adjacency
    assert (adj == np.ones((3, 3), dtype=int) - np.eye(3, dtype=int)).all()


def test_cyclic_two_double_bond():
    adj = mckay_graph(build_group("cyclic", 2)).adjacency
    assert adj.tolist() == [[0, 2], [2, 0]]
    assert classify_affine(mckay_graph(build_group("cyclic", 2))).delta.name == "A1"


def test_trivial_group_has_a_loop():
    graph = mckay_graph(build_group("cyclic", 1))
    assert graph.has_loops
    with pytest.raises(UnrecognizedGraph):
        classify_affine(graph)


def test_report_is_json_and_deterministic():
    a = json.dumps(mckay_report("binary-dihedral", 3), sort_keys=True)
    b = json.dumps(mckay_report("binary-dihedral", 3), sort_keys=True)
    assert a == b
    data = json.loads(a)
    assert data["classification"]["delta"] == "D5"
    assert len(data["characters"]) == len(data["class_sizes"])


def test_bad_parameters():
    with pytest.raises(ValueError):
        build_group("cyclic", 0)
    with pytest.raises(ValueError):
        build_group("binary-dihedral", 1)
    with pytest.raises(ValueError):
        build_group("dodecahedral")
