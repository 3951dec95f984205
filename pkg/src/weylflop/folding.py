"""Diagram automorphisms and quotient (folded) diagrams.

For a simply laced ``delta`` and a group ``A`` of diagram automorphisms, the
quotient ``xi`` has one node per ``A``-orbit of nodes. Its simple root for an
orbit ``I`` is the restriction of any ``l_k`` (``k`` in ``I``) to the fixed
subspace, i.e. ``mu_I = (sum_{k in I} l_k) / |I|``. In this basis the
restriction of a root ``sum a_k l_k`` has coordinates ``c_I = sum_{k in I} a_k``.

Positive roots of ``xi`` are the ``A``-orbits of positive roots of ``delta``
(equivalently their restrictions). The literal set of ``A``-invariant roots is
smaller; :func:`invariant_roots` exposes it for comparison.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .artin import ArtinWord, words_equal
from .errors import ExcludedCase, NotClosed, NotLabelPreserving
from .rootsystem import (
    DynkinDiagram,
    Root,
    build_diagram,
    generate_roots,
    identify_gram,
    identity_matrix,
    mat_mul,
    parse_diagram_name,
)


@dataclass(frozen=True)
class DiagramAutomorphism:
    """Permutation of nodes; ``images[k]`` is the image of ``nodes[k]``."""

    nodes: tuple[int, ...]
    images: tuple[int, ...]

    def __call__(self, node: int) -> int:
        return self.images[self.nodes.index(node)]

    def __mul__(self, other: "DiagramAutomorphism") -> "DiagramAutomorphism":
        """``(self * other)(x) = self(other(x))``."""
        return DiagramAutomorphism(self.nodes, tuple(self(other(x)) for x in self.nodes))

    def inverse(self) -> "DiagramAutomorphism":
        inv = {img: x for x, img in zip(self.nodes, self.images)}
        return DiagramAutomorphism(self.nodes, tuple(inv[x] for x in self.nodes))

    def is_identity(self) -> bool:
        return self.nodes == self.images

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def act_on_vector(self, v: Sequence) -> tuple:
        """Permute simple-root coordinates: ``l_k -> l_{a(k)}``."""
        out = [0] * len(v)
        for k, x in enumerate(self.nodes):
            out[self.nodes.index(self(x))] = v[k]
        return tuple(out)

    def cycles(self) -> str:
        seen, parts = set(), []
        for x in self.nodes:
            if x in seen or self(x) == x:
                continue
            cyc = [x]
            seen.add(x)
            y = self(x)
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self(y)
            parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) or "()"


def identity_automorphism(diagram: DynkinDiagram) -> DiagramAutomorphism:
    return DiagramAutomorphism(diagram.nodes, diagram.nodes)


def parse_cycles(diagram: DynkinDiagram, text: str) -> DiagramAutomorphism:
    """``"(1 4)(2 3)"`` -> automorphism (not yet checked for label preservation)."""
    mapping = {x: x for x in diagram.nodes}
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles and text.strip() not in ("", "()"):
        raise ValueError(f"cannot parse cycle notation {text!r}")
    for cyc in cycles:
        items = [int(t) for t in cyc.replace(",", " ").split()]
        for x in items:
            if x not in mapping:
                raise ValueError(f"{x} is not a node of {diagram.name}")
        if len(set(items)) != len(items):
            raise ValueError(f"repeated node in cycle {cyc!r}")
        for a, b in zip(items, items[1:] + items[:1]):
            mapping[a] = b
    if sorted(mapping.values()) != list(diagram.nodes):
        raise ValueError(f"{text!r} is not a permutation")
    return DiagramAutomorphism(diagram.nodes, tuple(mapping[x] for x in diagram.nodes))


def _preserves(diagram: DynkinDiagram, a: DiagramAutomorphism) -> bool:
    for i, j in itertools.permutations(diagram.nodes, 2):
        if diagram.m(a(i), a(j)) != diagram.m(i, j):
            return False
    return all(diagram.lengths[diagram.index(a(x))] == diagram.lengths[diagram.index(x)] for x in diagram.nodes)


def automorphism_group(diagram: DynkinDiagram) -> list[DiagramAutomorphism]:
    """All permutations preserving labels and root lengths; identity first."""
    nodes = diagram.nodes
    found = []

    def extend(assigned: list[int]):
        k = len(assigned)
        if k == len(nodes):
            found.append(tuple(assigned))
            return
        x = nodes[k]
        for y in nodes:
            if y in assigned or diagram.lengths[diagram.index(y)] != diagram.lengths[k]:
                continue
            if all(diagram.m(y, assigned[p]) == diagram.m(x, nodes[p]) for p in range(k)):
                assigned.append(y)
                extend(assigned)
                assigned.pop()

    extend([])
    autos = [DiagramAutomorphism(nodes, imgs) for imgs in sorted(found)]
    autos.sort(key=lambda a: (not a.is_identity(), a.images))
    return autos


def generate_subgroup(diagram: DynkinDiagram, generators: Iterable[DiagramAutomorphism]) -> list[DiagramAutomorphism]:
    """Closure of ``generators`` under composition; identity first."""
    ident = identity_automorphism(diagram)
    group = {ident}
    frontier = [ident]
    gens = list(generators)
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                p = h * g
                if p not in group:
                    group.add(p)
                    nxt.append(p)
        frontier = nxt
    return sorted(group, key=lambda a: (not a.is_identity(), a.images))


@dataclass(frozen=True)
class Folding:
    """A quotient ``xi = delta / A``.

    ``node_orbits[t]`` is the orbit of ``delta`` nodes for ``xi.nodes[t]``.
    ``invariant_basis[t]`` is the orbit sum of that orbit in ``delta``
    coordinates.
    """

    delta: DynkinDiagram
    auto_group: tuple[DiagramAutomorphism, ...]
    generators: tuple[DiagramAutomorphism, ...]
    xi: DynkinDiagram
    node_orbits: tuple[tuple[int, ...], ...]
    invariant_basis: tuple[tuple[int, ...], ...]

    @property
    def trivial(self) -> bool:
        return len(self.auto_group) == 1

    @property
    def order(self) -> int:
        return len(self.auto_group)

    def orbit(self, xi_node: int) -> tuple[int, ...]:
        return self.node_orbits[self.xi.index(xi_node)]

    def xi_node_of(self, delta_node: int) -> int:
        for t, orb in enumerate(self.node_orbits):
            if delta_node in orb:
                return self.xi.nodes[t]
        raise KeyError(delta_node)

    def restrict(self, v: Sequence) -> tuple:
        """Restriction to the fixed subspace, in ``xi`` simple-root coordinates."""
        return tuple(sum(v[self.delta.index(k)] for k in orb) for orb in self.node_orbits)

    def lift(self, c: Sequence) -> tuple:
        """Embed a vector of the fixed subspace (``xi`` coordinates) into ``delta`` coordinates."""
        out = [Fraction(0)] * self.delta.rank
        for t, orb in enumerate(self.node_orbits):
            for k in orb:
                out[self.delta.index(k)] = Fraction(c[t]) / len(orb)
        return tuple(out)

    def rho_matrix(self, xi_node: int):
        """``rho_k``: product of the commuting ``delta`` reflections over the orbit."""
        system = generate_roots(self.delta)
        m = identity_matrix(self.delta.rank)
        for k in self.orbit(xi_node):
            m = mat_mul(m, system.reflection_matrix(k))
        return m

    def lift_word(self, xi_word: Iterable[int]):
        """Matrix on ``delta`` coordinates of the ``W_xi`` element with the given word."""
        m = identity_matrix(self.delta.rank)
        for node in xi_word:
            m = mat_mul(m, self.rho_matrix(node))
        return m

    def descriptor(self) -> str:
        if self.trivial:
            return f"trivial:{self.delta.name}"
        return f"{self.delta.name}/" + ";".join(g.cycles() for g in self.generators)

    def to_json(self) -> dict:
        return {
            "delta": self.delta.name,
            "generators": [g.cycles() for g in self.generators],
            "group_order": self.order,
            "xi": self.xi.name,
            "orbits": [list(o) for o in self.node_orbits],
            "descriptor": self.descriptor(),
        }


def trivial_folding(delta: DynkinDiagram) -> Folding:
    ident = identity_automorphism(delta)
    orbits = tuple((x,) for x in delta.nodes)
    basis = tuple(tuple(int(a == k) for a in range(delta.rank)) for k in range(delta.rank))
    return Folding(delta, (ident,), (), delta, orbits, basis)


def _orbits(delta: DynkinDiagram, group: Sequence[DiagramAutomorphism]) -> list[tuple[int, ...]]:
    seen, orbits = set(), []
    for x in delta.nodes:
        if x in seen:
            continue
        orb = tuple(sorted({a(x) for a in group}))
        seen.update(orb)
        orbits.append(orb)
    return orbits


def _expected_quotient(delta: DynkinDiagram, group: Sequence[DiagramAutomorphism], orbits) -> str | None:
    """Quotient type predicted by the classification of foldings, if listed."""
    n = delta.rank
    tag = delta.type_tag
    if tag == "A" and n % 2 == 1 and len(group) == 2:
        return f"C{(n + 1) // 2}"
    if tag == "D" and n == 4:
        outer = {1, 3, 4}
        transitive = any(set(o) == outer for o in orbits)
        return "G2" if transitive else "B3"
    if tag == "D" and len(group) == 2:
        return f"B{n - 1}"
    if tag == "E" and n == 6 and len(group) == 2:
        return "F4"
    return None


def fold(delta: DynkinDiagram, subgroup: Sequence[DiagramAutomorphism]) -> Folding:
    """Quotient of ``delta`` by a non-trivial group of diagram automorphisms."""
    if not delta.simply_laced:
        raise ValueError(f"{delta.name} is not simply laced")
    group = list(subgroup)
    for a in group:
        if a.nodes != delta.nodes:
            raise ValueError("automorphism is defined on a different node set")
        if not _preserves(delta, a):
            raise NotLabelPreserving(f"{a.cycles()} does not preserve the labels of {delta.name}")
    keys = {a.images for a in group}
    if len(keys) <= 1:
        raise ValueError("folding needs a non-trivial automorphism group")
    for a in group:
        for b in group:
            if (a * b).images not in keys:
                raise NotClosed(f"{a.cycles()} * {b.cycles()} is not in the subgroup")
    group = generate_subgroup(delta, group)

    orbits = _orbits(delta, group)
    for orb in orbits:
        for i, j in itertools.combinations(orb, 2):
            if delta.m(i, j) != 2:
                raise ExcludedCase(
                    f"({delta.name}, Z/{len(group)}) folds adjacent nodes {i} and {j}; "
                    "the quotient is a marked diagram, not a root system"
                )

    system = generate_roots(delta)
    sums = []
    for orb in orbits:
        v = [0] * delta.rank
        for k in orb:
            v[delta.index(k)] = 1
        sums.append(tuple(v))
    gram = [
        [system.inner(sums[a], sums[b]) / (len(orbits[a]) * len(orbits[b])) for b in range(len(orbits))]
        for a in range(len(orbits))
    ]
    xi, position = identify_gram(gram, allow_product=True)

    order = sorted(range(len(orbits)), key=lambda a: position[a])
    node_orbits = tuple(orbits[a] for a in order)
    basis = tuple(sums[a] for a in order)

    expected = _expected_quotient(delta, group, orbits)
    if expected is not None and expected != xi.name:
        raise AssertionError(f"quotient of {delta.name} computed as {xi.name}, table says {expected}")

    gens = tuple(a for a in subgroup if not a.is_identity())
    return Folding(delta, tuple(group), _minimal_generators(delta, gens, group), xi, node_orbits, basis)


def _minimal_generators(delta, gens, group) -> tuple[DiagramAutomorphism, ...]:
    """A short generating list drawn from ``gens`` (in input order)."""
    chosen: list[DiagramAutomorphism] = []
    target = len(group)
    for g in gens:
        if len(generate_subgroup(delta, chosen)) == target:
            break
        if g not in generate_subgroup(delta, chosen):
            chosen.append(g)
    return tuple(chosen)


def xi_positive_roots(folding: Folding) -> list[tuple[Root, tuple[Root, ...]]]:
    """Pair each positive root of ``xi`` with its ``A``-orbit of positive ``delta`` roots."""
    delta_sys = generate_roots(folding.delta)
    xi_sys = generate_roots(folding.xi)
    buckets: dict[tuple[int, ...], list[Root]] = {}
    for r in delta_sys.positive:
        buckets.setdefault(folding.restrict(r.coords), []).append(r)
    out = []
    for mu in xi_sys.positive:
        members = buckets.pop(mu.coords, None)
        if members is None:
            raise AssertionError(f"no delta roots restrict to {mu.coords}")
        orbit = {Root(a.act_on_vector(members[0].coords)) for a in folding.auto_group}
        if orbit != set(members):
            raise AssertionError(f"restriction fibre over {mu.coords} is not a single orbit")
        out.append((mu, tuple(members)))
    if buckets:
        raise AssertionError(f"restrictions {sorted(buckets)} are not roots of {folding.xi.name}")
    return out


def invariant_roots(folding: Folding) -> list[Root]:
    """Positive ``delta`` roots fixed by every automorphism (the literal intersection)."""
    delta_sys = generate_roots(folding.delta)
    return [
        r for r in delta_sys.positive
        if all(a.act_on_vector(r.coords) == r.coords for a in folding.auto_group)
    ]


def folded_generator(folding: Folding, xi_node: int) -> ArtinWord:
    """``R_k``: product of the commuting ``delta`` generators over the orbit of ``k``."""
    return ArtinWord(folding.delta, tuple((k, 1) for k in folding.orbit(xi_node)))


def verify_folded_braid(folding: Folding) -> dict:
    """Check the braid relations of ``xi`` among folded generators inside ``B_delta``."""
    pairs = []
    for k, l in itertools.combinations(folding.xi.nodes, 2):
        m = folding.xi.m(k, l)
        gk, gl = folded_generator(folding, k), folded_generator(folding, l)
        left = ArtinWord(folding.delta, ())
        right = ArtinWord(folding.delta, ())
        for t in range(m):
            left = left * (gk if t % 2 == 0 else gl)
            right = right * (gl if t % 2 == 0 else gk)
        pairs.append({"pair": [k, l], "m": m, "holds": words_equal(left, right)})
    return {
        "folding": folding.descriptor(),
        "xi": folding.xi.name,
        "pairs": pairs,
        "ok": all(p["holds"] for p in pairs),
    }


def parse_folding(descriptor) -> Folding:
    """Build a folding from ``"trivial:A2"``, ``"A3/(1 3)"``, ``"D4/(1 3 4);(3 4)"`` or a JSON dict."""
    if isinstance(descriptor, Mapping):
        delta = parse_diagram_name(descriptor["delta"])
        gens = list(descriptor.get("generators", []))
        if not gens:
            return trivial_folding(delta)
        folding = fold(delta, generate_subgroup(delta, [parse_cycles(delta, g) for g in gens]))
        folding = _with_generators(folding, [parse_cycles(delta, g) for g in gens])
        if "xi" in descriptor and descriptor["xi"] != folding.xi.name:
            raise ValueError(f"descriptor says xi = {descriptor['xi']}, computed {folding.xi.name}")
        if "orbits" in descriptor and [list(o) for o in descriptor["orbits"]] != [list(o) for o in folding.node_orbits]:
            raise ValueError("descriptor orbits do not match the computed orbits")
        return folding
    text = str(descriptor).strip()
    if text.lower().startswith("trivial:"):
        return trivial_folding(parse_diagram_name(text.split(":", 1)[1]))
    if "/" not in text:
        raise ValueError(f"cannot parse folding descriptor {text!r}")
    name, rest = text.split("/", 1)
    delta = parse_diagram_name(name)
    gens = [parse_cycles(delta, part) for part in rest.split(";") if part.strip()]
    folding = fold(delta, generate_subgroup(delta, gens))
    return _with_generators(folding, gens)


def _with_generators(folding: Folding, gens) -> Folding:
    gens = tuple(g for g in gens if not g.is_identity())
    return Folding(folding.delta, folding.auto_group, gens, folding.xi, folding.node_orbits, folding.invariant_basis)


def folding_from_cycles(type_tag: str, rank: int, cycles: Sequence[str]) -> Folding:
    delta = build_diagram(type_tag, rank)
    gens = [parse_cycles(delta, c) for c in cycles]
    for g in gens:
        if not _preserves(delta, g):
            raise NotLabelPreserving(f"{g.cycles()} does not preserve the labels of {delta.name}")
    return _with_generators(fold(delta, generate_subgroup(delta, gens)), gens)
