"""Polynomial model of the deformation family and its flop bookkeeping.

A section ``s`` assigns to every simple root ``l_j`` of ``delta`` a Laurent
polynomial ``c_j(u)`` with rational coefficients; the value of ``s`` at ``u``
is ``sum_j c_j(u) l_j``. On the affine line ``u`` is the base coordinate. On
the punctured line with a cyclic cover of degree ``k`` the base coordinate is
``x = u^k`` and the section is equivariant::

    s(zeta u) = a(s(u)),   zeta = exp(2 pi i / k),  a the chosen generator of A

Only rational sections are modelled, so monomials ``u^e`` with ``zeta^e``
irrational carry no coefficients; for ``k = 3`` this forces sections to be
pulled back from the base.

For a positive root ``mu`` of ``xi`` the polynomial ``m_mu(s)`` is the pairing
of ``s`` with a fixed orbit representative. Its zeros index the exceptional
curves of that root: they live on the base ``B`` when the orbit of ``mu`` has
size 1 and on the cover ``B~`` otherwise. All zero-locus questions
(multiplicity, coincidence) are answered with exact squarefree decompositions
and gcds over QQ.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np
import sympy

from .errors import (
    DegreeTooSmall,
    InsufficientlyGeneral,
    InvalidSection,
    NotAReflection,
)
from .folding import Folding, parse_folding, xi_positive_roots
from .rootsystem import (
    Root,
    WeylElement,
    frac_str,
    generate_roots,
    identity_matrix,
    mat_mul,
    rank2_positive_roots,
    roots_sent_negative,
)

X = sympy.Symbol("x")
U = sympy.Symbol("u")

SHAPES = ("affine-line", "punctured-line")
TAG_SIMPLE = "(-1,-1)"
TAG_TANGENT = "(0,-2)"
TAG_DIVISOR = "divisor"


# -- Laurent polynomials --------------------------------------------------------


@dataclass(frozen=True)
class Laurent:
    """Sparse Laurent polynomial: ``terms`` is a sorted tuple of (exponent, coefficient)."""

    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, d: Mapping[int, Fraction]) -> "Laurent":
        return cls(tuple(sorted((int(e), Fraction(c)) for e, c in d.items() if c)))

    @classmethod
    def dense(cls, start: int, coeffs: Sequence) -> "Laurent":
        return cls.from_dict({start + k: Fraction(c) for k, c in enumerate(coeffs)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "Laurent") -> "Laurent":
        d = dict(self.terms)
        for e, c in other.terms:
            d[e] = d.get(e, Fraction(0)) + c
        return Laurent.from_dict(d)

    def scale(self, c) -> "Laurent":
        c = Fraction(c)
        if not c:
            return Laurent()
        return Laurent(tuple((e, a * c) for e, a in self.terms))

    def substitute_power(self, k: int) -> "Laurent":
        """``p(u^k)``."""
        return Laurent(tuple((e * k, c) for e, c in self.terms))

    def negate_variable(self) -> "Laurent":
        """``p(-u)``."""
        return Laurent(tuple((e, -c if e % 2 else c) for e, c in self.terms))

    @property
    def min_exp(self) -> int:
        return self.terms[0][0] if self.terms else 0

    @property
    def max_exp(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def coeff(self, e: int) -> Fraction:
        return dict(self.terms).get(e, Fraction(0))

    def dense_coeffs(self) -> tuple[int, list[Fraction]]:
        if not self.terms:
            return 0, []
        lo, hi = self.min_exp, self.max_exp
        return lo, [self.coeff(e) for e in range(lo, hi + 1)]


def combine(coeffs: Sequence, polys: Sequence[Laurent]) -> Laurent:
    out = Laurent()
    for c, p in zip(coeffs, polys):
        if c:
            out = out + p.scale(c)
    return out


# -- base model and sections -------------------------------------------------------


@dataclass(frozen=True)
class BaseModel:
    shape: str = "affine-line"
    cover_degree: int = 1
    twist_degree: int = 1

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise InvalidSection(f"unknown base shape {self.shape!r}")
        if self.cover_degree < 1 or self.twist_degree < 0:
            raise InvalidSection("cover degree must be >= 1 and twist degree >= 0")
        if self.cover_degree > 1 and self.shape != "punctured-line":
            raise InvalidSection("the affine line has no connected cyclic covers")

    @property
    def exponent_range(self) -> tuple[int, int]:
        """Allowed exponents of ``u`` in section coefficients."""
        k, d = self.cover_degree, self.twist_degree
        if self.shape == "affine-line":
            return 0, d
        return -k * d, k * d

    def to_json(self) -> dict:
        return {"shape": self.shape, "cover_degree": self.cover_degree, "twist_degree": self.twist_degree}


def _zeta_power_rational(k: int, e: int) -> int | None:
    """``zeta_k^e`` if it is rational (then it is +1 or -1), else None."""
    if e % k == 0:
        return 1
    if (2 * e) % k == 0:
        return -1
    return None


def cover_generator(folding: Folding):
    """The automorphism whose monodromy ``u -> zeta u`` realizes the cover."""
    if folding.trivial:
        return None
    gens = folding.generators or folding.auto_group[1:2]
    if len(gens) != 1 or gens[0].order() != folding.order:
        raise InvalidSection(f"cover model needs a cyclic automorphism group; got {folding.descriptor()}")
    return gens[0]


@dataclass(frozen=True, eq=False)
class Section:
    base: BaseModel
    folding: Folding
    coeffs: tuple[Laurent, ...]

    def __post_init__(self):
        delta = self.folding.delta
        if len(self.coeffs) != delta.rank:
            raise InvalidSection(f"expected {delta.rank} coefficient polynomials, got {len(self.coeffs)}")
        k = self.base.cover_degree
        if k != self.folding.order:
            raise InvalidSection(f"cover degree {k} does not match |A| = {self.folding.order}")
        lo, hi = self.base.exponent_range
        for c in self.coeffs:
            if c and (c.min_exp < lo or c.max_exp > hi):
                raise InvalidSection(f"exponents outside [{lo}, {hi}]")
        if k > 1:
            a = cover_generator(self.folding)
            inv = a.inverse()
            nodes = delta.nodes
            for j, node in enumerate(nodes):
                partner = self.coeffs[delta.index(inv(node))]
                for e in range(lo, hi + 1):
                    z = _zeta_power_rational(k, e)
                    cj = self.coeffs[j].coeff(e)
                    if z is None:
                        if cj:
                            raise InvalidSection(f"coefficient of u^{e} must vanish for rational equivariant sections")
                    elif cj * z != partner.coeff(e):
                        raise InvalidSection(f"section is not equivariant at node {node}, exponent {e}")

    def key(self) -> tuple:
        return (self.base, self.folding.descriptor(), self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Section) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def zero_section(folding: Folding, base: BaseModel) -> Section:
    return Section(base, folding, tuple(Laurent() for _ in folding.delta.nodes))


def section_from_vectors(folding: Folding, base: BaseModel, terms: Iterable[tuple[Sequence, Laurent]]) -> Section:
    """``sum_t v_t (x) p_t`` with ``v_t`` in ``delta`` coordinates and ``p_t`` on the base."""
    k = base.cover_degree
    coeffs = [Laurent() for _ in folding.delta.nodes]
    for v, p in terms:
        pulled = p.substitute_power(k)
        coeffs = [c + pulled.scale(a) for c, a in zip(coeffs, v)]
    return Section(base, folding, tuple(coeffs))


# -- the maps m_mu --------------------------------------------------------------------


@lru_cache(maxsize=None)
def _xi_data(folding_desc: str):
    folding = parse_folding(folding_desc)
    pairs = xi_positive_roots(folding)
    return folding, pairs


def xi_roots(folding: Folding) -> list[tuple[Root, tuple[Root, ...]]]:
    return _xi_data(folding.descriptor())[1]


def _orbit_of(folding: Folding, mu: Root) -> tuple[Root, ...]:
    for root, orbit in xi_roots(folding):
        if root == mu:
            return orbit
    raise KeyError(f"{mu.coords} is not a positive root of {folding.xi.name}")


def m_delta(lam: Sequence, s: Section) -> Laurent:
    """``<lam, s(u)>`` for a vector ``lam`` in ``delta`` coordinates."""
    system = generate_roots(s.folding.delta)
    pairings = [system.inner(lam, e) for e in _basis(system.rank)]
    return combine(pairings, s.coeffs)


def m_of(mu: Root, s: Section) -> Laurent:
    """``m_mu(s)`` via the first ``delta`` root of the orbit of ``mu``."""
    return m_delta(_orbit_of(s.folding, mu)[0].coords, s)


def _basis(n):
    return [tuple(int(a == b) for b in range(n)) for a in range(n)]


def curve_label(folding: Folding, mu: Root) -> str:
    """``"B"`` for roots with a fixed orbit, ``"B~"`` for roots living on the cover."""
    return "B" if folding.trivial or len(_orbit_of(folding, mu)) == 1 else "B~"


# -- exact loci ------------------------------------------------------------------------


def _int_primitive(p: sympy.Poly) -> sympy.Poly:
    _, q = p.clear_denoms(convert=True)
    _, q = q.primitive()
    if q.LC() < 0:
        q = -q
    return q


def _poly_key(p: sympy.Poly) -> tuple[int, ...]:
    return tuple(int(c) for c in p.all_coeffs())


@dataclass(frozen=True)
class Locus:
    """Zero locus of ``m_mu(s)`` on ``B`` (variable x) or ``B~`` (variable u).

    ``poly`` is integer-primitive with positive leading coefficient; on the
    punctured line powers of the variable are removed first. ``factors`` is the
    squarefree decomposition: pairwise coprime squarefree polynomials with
    multiplicities. ``base_norm`` is the squarefree image of the zero set on ``B``.
    """

    curve: str
    poly: tuple[int, ...]
    factors: tuple[tuple[tuple[int, ...], int], ...]
    base_norm: tuple[int, ...]
    irreducible: int

    @property
    def variable(self) -> str:
        return "u" if self.curve == "B~" else "x"

    @property
    def zero_count(self) -> int:
        """Number of zeros counted with multiplicity."""
        return sum((len(f) - 1) * m for f, m in self.factors)

    @property
    def squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factors)

    def expr(self) -> str:
        return _expr(self.poly, self.variable)


def _expr(coeffs: tuple[int, ...], var: str) -> str:
    sym = U if var == "u" else X
    return str(sympy.Poly(list(coeffs), sym).as_expr())


@lru_cache(maxsize=None)
def _locus_cached(terms: tuple, curve: str, punctured: bool, k: int) -> Locus | None:
    lap = Laurent(terms)
    shift = lap.min_exp if punctured else 0
    if curve == "B" and k > 1:
        if any(e % k for e, _ in lap.terms):
            raise AssertionError("locus on the base is not a polynomial in u^k")
        lap = Laurent(tuple((e // k, c) for e, c in lap.terms))
        shift = lap.min_exp if punctured else 0
    sym = U if curve == "B~" else X
    dense = [lap.coeff(e) for e in range(lap.max_exp, shift - 1, -1)]
    p = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in dense], sym, domain=sympy.QQ)
    if p.degree() <= 0:
        return None
    p = _int_primitive(p)
    _, sqf = p.sqf_list()
    factors = sorted(((_poly_key(_int_primitive(f)), m) for f, m in sqf), key=lambda t: (len(t[0]), t[0]))
    if curve == "B~":
        norm = sympy.resultant(p.as_expr(), U**k - X, U)
        base = sympy.Poly(norm, X, domain=sympy.QQ)
    else:
        base = p.set_domain(sympy.QQ)
    base = _int_primitive(base.sqf_part())
    irreducible = sum(m for _, m in p.factor_list()[1])
    return Locus(curve, _poly_key(p), tuple(factors), _poly_key(base), irreducible)


def locus_of(mu: Root, s: Section) -> Locus | None:
    """Zero locus of ``m_mu(s)``; ``None`` when it has no zeros (a unit).

    Raises ``ValueError`` for the zero polynomial (a whole divisor).
    """
    lap = m_of(mu, s)
    if not lap:
        raise ValueError("m_mu(s) vanishes identically")
    return _locus_cached(lap.terms, curve_label(s.folding, mu), s.base.shape == "punctured-line", s.base.cover_degree)


@lru_cache(maxsize=None)
def _coprime(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    pa = sympy.Poly(list(a), X, domain=sympy.QQ)
    pb = sympy.Poly(list(b), X, domain=sympy.QQ)
    return sympy.gcd(pa, pb).degree() == 0


# -- curve configurations ---------------------------------------------------------------


@dataclass(frozen=True)
class CurveEntry:
    mu: Root
    locus: Locus | None  # None for a divisor entry
    tags: tuple[str, ...]

    @property
    def is_divisor(self) -> bool:
        return self.locus is None

    def to_json(self) -> dict:
        out = {"root": list(self.mu.coords), "tags": list(self.tags)}
        if self.locus is None:
            out["divisor"] = True
            return out
        out.update({
            "curve": self.locus.curve,
            "locus": self.locus.expr(),
            "factors": [
                {"poly": _expr(f, self.locus.variable), "coeffs": list(f), "multiplicity": m, "tag": tag}
                for (f, m), tag in zip(self.locus.factors, self.tags)
            ],
            "zero_count": self.locus.zero_count,
        })
        return out


@dataclass(frozen=True)
class CurveConfiguration:
    entries: tuple[CurveEntry, ...]
    general_flag: bool

    def entry(self, mu: Root) -> CurveEntry | None:
        for e in self.entries:
            if e.mu == mu:
                return e
        return None

    def curve_count(self) -> int:
        """Exceptional curves counted with multiplicity (divisor entries excluded)."""
        return sum(e.locus.zero_count for e in self.entries if e.locus is not None)

    def irreducible_count(self) -> int:
        """Irreducible factors over QQ counted with multiplicity."""
        return sum(e.locus.irreducible for e in self.entries if e.locus is not None)

    def divisor_count(self) -> int:
        return sum(1 for e in self.entries if e.is_divisor)

    def to_json(self) -> dict:
        return {
            "entries": [e.to_json() for e in self.entries],
            "general": self.general_flag,
            "curve_count": self.curve_count(),
            "irreducible_count": self.irreducible_count(),
            "divisor_count": self.divisor_count(),
        }


def _tag(mult: int) -> str:
    return TAG_SIMPLE if mult == 1 else TAG_TANGENT


def curve_configuration(s: Section) -> CurveConfiguration:
    entries = []
    loci = {}
    has_zero = False
    for mu, _ in xi_roots(s.folding):
        lap = m_of(mu, s)
        if not lap:
            has_zero = True
            entries.append(CurveEntry(mu, None, (TAG_DIVISOR,)))
            continue
        loc = locus_of(mu, s)
        if loc is None:
            continue
        loci[mu] = loc
        entries.append(CurveEntry(mu, loc, tuple(_tag(m) for _, m in loc.factors)))
    general = not has_zero and _general_loci(loci)
    return CurveConfiguration(tuple(entries), general)


def _general_loci(loci: Mapping[Root, Locus]) -> bool:
    if not all(loc.squarefree for loc in loci.values()):
        return False
    items = list(loci.values())
    return all(_coprime(a.base_norm, b.base_norm) for a, b in itertools.combinations(items, 2))


def is_sufficiently_general(s: Section) -> bool:
    """Every ``m_mu(s)`` is nonzero and squarefree, and distinct roots never vanish over the same base point."""
    return curve_configuration(s).general_flag


# -- Weyl group action -----------------------------------------------------------------


def _xi_element(folding: Folding, w) -> WeylElement:
    xi_sys = generate_roots(folding.xi)
    if isinstance(w, WeylElement):
        if w.diagram != folding.xi:
            raise ValueError(f"Weyl element of {w.diagram.name}, expected {folding.xi.name}")
        return w
    return xi_sys.weyl_element(tuple(w))


def weyl_act(w, s: Section) -> Section:
    """Apply ``w`` in ``W_xi`` (element or word over ``xi`` nodes) coefficient-wise."""
    w = _xi_element(s.folding, w)
    m = s.folding.lift_word(w.word)
    coeffs = tuple(combine(row, s.coeffs) for row in m)
    return Section(s.base, s.folding, coeffs)


def is_fixed(s: Section, xi_node: int) -> bool:
    return weyl_act((xi_node,), s) == s


def project_to_fixed_locus(s: Section, xi_node: int) -> Section:
    """``(s + rho_i s) / 2``, a section of ``T_i``."""
    t = weyl_act((xi_node,), s)
    coeffs = tuple((a + b).scale(Fraction(1, 2)) for a, b in zip(s.coeffs, t.coeffs))
    return Section(s.base, s.folding, coeffs)


def contraction_profile(s: Section, nodes: Iterable[int]) -> dict:
    xi_sys = generate_roots(s.folding.xi)
    report = {}
    for i in sorted(nodes):
        mu = xi_sys.simple_root(i)
        if not m_of(mu, s):
            report[i] = {"divisor_contracted": True, "loci": []}
            continue
        loc = locus_of(mu, s)
        loci = [] if loc is None else [
            {"poly": _expr(f, loc.variable), "multiplicity": m} for f, m in loc.factors
        ]
        report[i] = {"divisor_contracted": False, "curve": None if loc is None else loc.curve, "loci": loci}
    return report


# -- flops ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class FlopRecord:
    """Result of flopping along a reflection.

    ``flopped`` holds the source entries whose root the reflection sends
    negative, except divisor entries: along those the birational map is the
    identity. ``identity_roots`` lists the latter.
    """

    reflection: WeylElement
    flopped: tuple[CurveEntry, ...]
    identity_roots: tuple[Root, ...]
    target_section: Section

    def to_json(self) -> dict:
        return {
            "reflection_word": list(self.reflection.word),
            "flopped": [e.to_json() for e in self.flopped],
            "identity_roots": [list(r.coords) for r in self.identity_roots],
            "target_section": section_to_json(self.target_section),
        }


def is_reflection(w: WeylElement) -> bool:
    n = len(w.matrix)
    ident = identity_matrix(n)
    if mat_mul(w.matrix, w.matrix) != ident:
        return False
    diff = sympy.Matrix([[w.matrix[a][b] - ident[a][b] for b in range(n)] for a in range(n)])
    return diff.rank() == 1


def flop(w, s: Section) -> FlopRecord:
    w = _xi_element(s.folding, w)
    if not is_reflection(w):
        raise NotAReflection(f"word {list(w.word)} is not a reflection of {s.folding.xi.name}")
    xi_sys = generate_roots(s.folding.xi)
    negative = roots_sent_negative(w, xi_sys)
    config = curve_configuration(s)
    flopped = tuple(e for e in config.entries if e.mu in negative and not e.is_divisor)
    identity = tuple(e.mu for e in config.entries if e.mu in negative and e.is_divisor)
    return FlopRecord(w, flopped, identity, weyl_act(w, s))


def locus_class(loc: Locus | None, k: int) -> tuple | None:
    """Key identifying a locus up to the deck transformations ``u -> zeta u``."""
    if loc is None:
        return None
    if loc.curve != "B~" or k == 1:
        return (loc.curve, loc.poly)
    cands = [loc.poly]
    if k == 2:
        p = sympy.Poly(list(loc.poly), U).transform(sympy.Poly(-U, U), sympy.Poly(1, U))
        cands.append(_poly_key(_int_primitive(p)))
    return (loc.curve, min(cands))


def braid_flop_trace(i: int, j: int, s: Section) -> dict:
    """Follow both sides of the braid relation for ``(i, j)`` as chains of simple flops.

    Checks that (a) both chains end at the same section, (b) the flopped
    roots, pulled back to labels on ``X_s``, are exactly the positive roots of
    the rank-2 subsystem, each flopped once, with matching loci, and (c) the
    composite Weyl group elements agree.
    """
    if i == j:
        raise ValueError("braid relation needs two distinct nodes")
    config = curve_configuration(s)
    if not config.general_flag:
        raise InsufficientlyGeneral("braid flop traces are only defined for sufficiently general sections")
    folding = s.folding
    xi = folding.xi
    xi_sys = generate_roots(xi)
    m = xi.m(i, j)
    expected = rank2_positive_roots(xi_sys, i, j)
    k = s.base.cover_degree

    chains = {}
    for label, first, second in (("left", i, j), ("right", j, i)):
        word = tuple(first if t % 2 == 0 else second for t in range(m))
        current = s
        steps = []
        pulled: list[Root] = []
        loci_ok = True
        for t, node in enumerate(word):
            record = flop((node,), current)
            negative = roots_sent_negative(record.reflection, xi_sys)
            # w_t^-1 has word word[:t] (applied right to left: last letter first)
            back = xi_sys.weyl_element(word[:t])
            for mu in sorted(negative):
                src = xi_sys.apply(back, mu)
                src = src if src.positive else -src
                pulled.append(src)
                here = next((e for e in record.flopped if e.mu == mu), None)
                there = config.entry(src)
                if locus_class(here.locus if here else None, k) != locus_class(there.locus if there else None, k):
                    loci_ok = False
            steps.append({
                "node": node,
                "flopped": [list(e.mu.coords) for e in record.flopped],
                "pulled_back": [list(r.coords) for r in pulled[len(pulled) - len(negative):]],
            })
            current = record.target_section
        chains[label] = {
            "word": list(word),
            "steps": steps,
            "pulled_back": sorted(pulled),
            "loci_match": loci_ok,
            "endpoint": current,
            "weyl": xi_sys.weyl_element(tuple(reversed(word))),
        }

    def flop_set_ok(chain) -> bool:
        roots = chain["pulled_back"]
        return len(roots) == len(set(roots)) and set(roots) == expected and chain["loci_match"]

    left, right = chains["left"], chains["right"]
    checks = {
        "endpoints_equal": left["endpoint"] == right["endpoint"],
        "flop_sets_match": flop_set_ok(left) and flop_set_ok(right),
        "weyl_elements_equal": left["weyl"].matrix == right["weyl"].matrix
        and folding.lift_word(left["weyl"].word) == folding.lift_word(right["weyl"].word),
    }
    return {
        "nodes": [i, j],
        "m": m,
        "rank2_roots": [list(r.coords) for r in sorted(expected)],
        "chains": {
            name: {
                "word": c["word"],
                "steps": c["steps"],
                "pulled_back": [list(r.coords) for r in c["pulled_back"]],
                "loci_match": c["loci_match"],
            }
            for name, c in chains.items()
        },
        "checks": checks,
        "ok": all(checks.values()),
    }


# -- generic sections ---------------------------------------------------------------------


def separates_roots(folding: Folding, h: Sequence, h2: Sequence) -> bool:
    """``<l,h><l',h'> - <l,h'><l',h> != 0`` for all pairs of distinct positive roots of ``xi``."""
    system = generate_roots(folding.delta)
    vals = []
    for _, orbit in xi_roots(folding):
        lam = orbit[0].coords
        vals.append((system.inner(lam, h), system.inner(lam, h2)))
    return all(a * d - b * c != 0 for (a, b), (c, d) in itertools.combinations(vals, 2))


def _random_base_poly(rng: np.random.Generator, base: BaseModel) -> Laurent:
    d = base.twist_degree
    lo = 0 if base.shape == "affine-line" else -d
    coeffs = [int(c) for c in rng.integers(-9, 10, size=d - lo + 1)]
    return Laurent.dense(lo, coeffs)


def _base_poly_ok(p: Laurent, punctured: bool) -> sympy.Poly | None:
    if not p:
        return None
    shift = p.min_exp if punctured else 0
    dense = [p.coeff(e) for e in range(p.max_exp, shift - 1, -1)]
    q = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in dense], X, domain=sympy.QQ)
    if q.degree() < 1 or not q.is_sqf:
        return None
    return q


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        return np.random.default_rng(seed)
    return np.random.default_rng(np.random.SeedSequence(int(seed) % 2**64))


@dataclass(frozen=True)
class GenericSection:
    section: Section
    retries: int
    h: tuple
    h2: tuple
    t: Laurent
    t2: Laurent


def generic_section(folding: Folding, base: BaseModel, seed, max_tries: int = 1000) -> GenericSection:
    """Seeded ``h (x) t + h' (x) t'`` with ``h, h'`` invariant and ``t, t'`` coprime squarefree.

    Draws are repeated from the same generator until every pair of distinct positive roots is separated by (h, h'),
    the section is sufficiently general and every positive root indexes at
    least one curve.
    """
    if base.twist_degree < 1:
        raise DegreeTooSmall("twist degree 0 leaves only constant sections")
    rng = _rng(seed)
    punctured = base.shape == "punctured-line"
    orbit_sums = folding.invariant_basis
    for attempt in range(max_tries):
        ch = [int(c) for c in rng.integers(-5, 6, size=len(orbit_sums))]
        ch2 = [int(c) for c in rng.integers(-5, 6, size=len(orbit_sums))]
        h = tuple(sum(c * v[a] for c, v in zip(ch, orbit_sums)) for a in range(folding.delta.rank))
        h2 = tuple(sum(c * v[a] for c, v in zip(ch2, orbit_sums)) for a in range(folding.delta.rank))
        t = _random_base_poly(rng, base)
        t2 = _random_base_poly(rng, base)
        if not separates_roots(folding, h, h2):
            continue
        pt, pt2 = _base_poly_ok(t, punctured), _base_poly_ok(t2, punctured)
        if pt is None or pt2 is None or sympy.gcd(pt, pt2).degree() > 0:
            continue
        s = section_from_vectors(folding, base, [(h, t), (h2, t2)])
        config = curve_configuration(s)
        if not config.general_flag or len(config.entries) != len(xi_roots(folding)):
            continue
        return GenericSection(s, attempt, h, h2, t, t2)
    raise InsufficientlyGeneral(f"no sufficiently general section after {max_tries} draws")


def random_equivariant_section(folding: Folding, base: BaseModel, rng: np.random.Generator, density: float = 1.0) -> Section:
    """An arbitrary rational equivariant section (not of the two-term form)."""
    k = base.cover_degree
    lo, hi = base.exponent_range
    n = folding.delta.rank
    a = cover_generator(folding)
    coeffs: list[dict[int, Fraction]] = [dict() for _ in range(n)]
    for e in range(lo, hi + 1):
        if rng.random() > density:
            continue
        z = _zeta_power_rational(k, e) if k > 1 else 1
        if z is None:
            continue
        if k == 1:
            for j in range(n):
                coeffs[j][e] = Fraction(int(rng.integers(-6, 7)))
            continue
        for orb in folding.node_orbits:
            # walk the orbit along a: c_{a(j)} = z * c_j at this exponent
            start = orb[0]
            if z == -1 and len(orb) == 1:
                continue
            r = Fraction(int(rng.integers(-6, 7)))
            node, val = start, r
            for _ in orb:
                coeffs[folding.delta.index(node)][e] = val
                node, val = a(node), val * z
    return Section(base, folding, tuple(Laurent.from_dict(c) for c in coeffs))


# -- serialization ------------------------------------------------------------------------


def section_to_json(s: Section) -> dict:
    coeffs = []
    lo, _ = s.base.exponent_range
    for c in s.coeffs:
        if s.base.shape == "affine-line":
            _, dense = (0, []) if not c else (0, [c.coeff(e) for e in range(0, c.max_exp + 1)])
            coeffs.append([frac_str(x) for x in dense])
        else:
            start, dense = c.dense_coeffs()
            coeffs.append({"start": start, "coeffs": [frac_str(x) for x in dense]})
    return {
        "base": s.base.to_json(),
        "folding": s.folding.descriptor() if s.folding.trivial else s.folding.to_json(),
        "coeffs": coeffs,
    }


def section_from_json(data: Mapping) -> Section:
    b = data["base"]
    base = BaseModel(b["shape"], int(b.get("cover_degree", 1)), int(b.get("twist_degree", 1)))
    folding = parse_folding(data["folding"])
    coeffs = []
    for c in data["coeffs"]:
        if isinstance(c, Mapping):
            coeffs.append(Laurent.dense(int(c.get("start", 0)), [Fraction(x) for x in c["coeffs"]]))
        else:
            coeffs.append(Laurent.dense(0, [Fraction(x) for x in c]))
    return Section(base, folding, tuple(coeffs))


# -- seeded sweeps -------------------------------------------------------------------------


def default_base(folding: Folding, twist_degree: int = 2) -> BaseModel:
    """Affine line for trivial ``A``; punctured line with the matching cover otherwise."""
    if folding.trivial:
        return BaseModel("affine-line", 1, twist_degree)
    return BaseModel("punctured-line", folding.order, twist_degree)


def trial_seed(seed: int, trial: int) -> np.random.SeedSequence:
    """Independent child stream ``trial`` of the 64-bit root ``seed``."""
    return np.random.SeedSequence(int(seed) % 2**64, spawn_key=(trial,))


def braid_sweep(folding: Folding, i: int, j: int, seed: int, trials: int = 1, base: BaseModel | None = None) -> dict:
    base = base or default_base(folding)
    verdicts = []
    for t in range(trials):
        g = generic_section(folding, base, trial_seed(seed, t))
        report = braid_flop_trace(i, j, g.section)
        verdicts.append({"trial": t, "retries": g.retries, "checks": report["checks"], "ok": report["ok"],
                         "flop_count": len(report["rank2_roots"])})
    passed = sum(v["ok"] for v in verdicts)
    return {"folding": folding.descriptor(), "nodes": [i, j], "seed": int(seed), "trials": trials,
            "passed": passed, "ok": passed == trials, "verdicts": verdicts}
