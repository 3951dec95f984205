import json
from fractions import Fraction

import pytest

from oracles import label_preserving_perms
from weylflop.errors import ExcludedCase, NotClosed, NotLabelPreserving
from weylflop.folding import (
    automorphism_group,
    fold,
    folded_generator,
    folding_from_cycles,
    invariant_roots,
    parse_cycles,
    parse_folding,
    verify_folded_braid,
    xi_positive_roots,
)
from weylflop.rootsystem import build_diagram, generate_roots, identity_matrix, mat_mul, mat_vec

# (delta type, rank, cycles, quotient produced by restriction)
TABLE = [
    ("A", 3, ["(1 3)"], "C2"),
    ("A", 5, ["(1 5)(2 4)"], "C3"),
    ("A", 7, ["(1 7)(2 6)(3 5)"], "C4"),
    ("D", 4, ["(3 4)"], "B3"),
    ("D", 5, ["(4 5)"], "B4"),
    ("D", 6, ["(5 6)"], "B5"),
    ("E", 6, ["(1 5)(2 4)"], "F4"),
    ("D", 4, ["(1 3 4)"], "G2"),
]


@pytest.mark.parametrize("t,n,cycles,xi", TABLE)
def test_quotient_types(t, n, cycles, xi):
    assert folding_from_cycles(t, n, cycles).xi.name == xi


@pytest.mark.parametrize("name,order", [("A1", 1), ("A2", 2), ("A3", 2), ("D4", 6), ("D5", 2), ("E6", 2), ("E7", 1), ("E8", 1), ("B3", 1), ("F4", 1), ("G2", 1)])
def test_automorphism_group_orders(name, order):
    t, n = name[0], int(name[1:])
    d = build_diagram(t, n)
    group = automorphism_group(d)
    assert len(group) == order
    assert group[0].is_identity()


@pytest.mark.parametrize("t,n", [("A", 3), ("A", 4), ("D", 4), ("D", 5), ("E", 6)])
def test_automorphism_group_matches_brute_force(t, n):
    d = build_diagram(t, n)
    labels = {(i, j): d.m(i, j) for i in d.nodes for j in d.nodes if i != j}
    brute = {tuple(p[k] for k in d.nodes) for p in label_preserving_perms(n, labels)}
    assert {tuple(a(k) for k in d.nodes) for a in automorphism_group(d)} == brute


@pytest.mark.parametrize("n", [1, 2, 3])
def test_even_a_excluded(n):
    with pytest.raises(ExcludedCase):
        folding_from_cycles("A", 2 * n, [" ".join(f"({k} {2 * n + 1 - k})" for k in range(1, n + 1))])


def test_not_label_preserving():
    with pytest.raises(NotLabelPreserving):
        folding_from_cycles("A", 3, ["(1 2)"])


def test_not_closed():
    d = build_diagram("D", 4)
    with pytest.raises(NotClosed):
        fold(d, [parse_cycles(d, "()"), parse_cycles(d, "(1 3 4)")])


def test_a3_orbits():
    f = folding_from_cycles("A", 3, ["(1 3)"])
    assert f.node_orbits == ((1, 3), (2,))
    pairs = xi_positive_roots(f)
    assert len(pairs) == 4
    orbits = {frozenset(r.coords for r in orbit) for _, orbit in pairs}
    assert orbits == {
        frozenset({(1, 0, 0), (0, 0, 1)}),
        frozenset({(0, 1, 0)}),
        frozenset({(1, 1, 0), (0, 1, 1)}),
        frozenset({(1, 1, 1)}),
    }


def test_literal_invariant_roots_a3():
    # the fixed roots are only the two long roots of C2
    f = folding_from_cycles("A", 3, ["(1 3)"])
    assert sorted(r.coords for r in invariant_roots(f)) == [(0, 1, 0), (1, 1, 1)]
    assert len(xi_positive_roots(f)) == 4


@pytest.mark.parametrize("t,n,cycles,xi", TABLE)
def test_orbit_bijection(t, n, cycles, xi):
    f = folding_from_cycles(t, n, cycles)
    pairs = xi_positive_roots(f)
    assert len(pairs) == len(generate_roots(f.xi).positive)
    assert sum(len(o) for _, o in pairs) == len(generate_roots(f.delta).positive)


def test_d4_rotation_orbit_counts():
    f = folding_from_cycles("D", 4, ["(1 3 4)"])
    assert len(xi_positive_roots(f)) == 6
    assert len(folded_generator(f, f.xi_node_of(1))) == 3


def test_folded_generator_a3():
    f = folding_from_cycles("A", 3, ["(1 3)"])
    node = f.xi_node_of(1)
    assert folded_generator(f, node).to_ints() == [1, 3]
    assert folded_generator(f, f.xi_node_of(2)).to_ints() == [2]


@pytest.mark.parametrize("t,n,cycles,xi", TABLE)
def test_folded_braid_relations(t, n, cycles, xi):
    assert verify_folded_braid(folding_from_cycles(t, n, cycles))["ok"]


@pytest.mark.parametrize("t,n,cycles,xi", TABLE)
def test_rho_matrices(t, n, cycles, xi):
    f = folding_from_cycles(t, n, cycles)
    ident = identity_matrix(n)
    xi_sys = generate_roots(f.xi)
    for k in f.xi.nodes:
        rho = f.rho_matrix(k)
        assert mat_mul(rho, rho) == ident
        # rho_k preserves the fixed subspace and acts on it as the xi reflection
        for e in range(f.xi.rank):
            c = tuple(int(a == e) for a in range(f.xi.rank))
            image = mat_vec(rho, f.lift(c))
            assert f.lift(f.restrict(image)) == image
            assert f.restrict(image) == mat_vec(xi_sys.reflection_matrix(k), c)
    for k in f.xi.nodes:
        for l in f.xi.nodes:
            if k < l:
                prod = mat_mul(f.rho_matrix(k), f.rho_matrix(l))
                power = ident
                for _ in range(f.xi.m(k, l)):
                    power = mat_mul(power, prod)
                assert power == ident


@pytest.mark.parametrize("t,n,cycles,xi", TABLE)
def test_restricted_form_positive_definite(t, n, cycles, xi):
    import sympy

    f = folding_from_cycles(t, n, cycles)
    system = generate_roots(f.delta)
    basis = f.invariant_basis
    g = sympy.Matrix([[system.inner(u, v) for v in basis] for u in basis])
    assert all(g[:k, :k].det() > 0 for k in range(1, len(basis) + 1))
    assert len(basis) == f.xi.rank


@pytest.mark.parametrize("desc", ["trivial:A2", "A3/(1 3)", "D4/(1 3 4)", "E6/(1 5)(2 4)", "A1xA1/(1 2)"])
def test_descriptor_round_trip(desc):
    f = parse_folding(desc)
    again = parse_folding(json.loads(json.dumps(f.to_json())))
    assert again.descriptor() == f.descriptor()
    assert again.node_orbits == f.node_orbits
    assert parse_folding(f.descriptor()).xi == f.xi


def test_lift_and_restrict():
    f = folding_from_cycles("A", 3, ["(1 3)"])
    assert f.lift((2, 1)) == (Fraction(1), Fraction(1), Fraction(1))
    assert f.restrict((1, 5, 1)) == (2, 5)
