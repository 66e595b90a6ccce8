"""Hilbert bases of Rees cones and power comparisons for edge ideals.

The Rees cone of a clutter lives in ZZ^(n+1): it is spanned by the edge
characteristic vectors lifted with a final coordinate 1 (the t-degree)
together with the n coordinate unit vectors.  The edge ideal is normal
exactly when every element (a, b) of the cone's Hilbert basis satisfies
x^a in I^b, which `power_membership` decides by bounded multiset search.

The Hilbert basis is computed exactly: a placing triangulation of the cone
into simplicial subcones on generator rays, lattice-point enumeration of
each half-open fundamental parallelepiped (via the Hermite-diagonal residue
system), and a grading-ordered irreducibility sieve.  The final hyperplane
description produced by the incremental hull doubles as the cone-membership
test used by the sieve.

Bounded surrogates compare ordinary powers I^i against integral closures
(`is_normal_bounded`) and symbolic powers (`is_ntf_bounded`) by enumerating
the candidate exponent box {0..i}^n, which contains every minimal generator
of either larger ideal because all edge vectors are 0/1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import covering
from ._linalg import (
    determinant,
    hermite_diagonal,
    invert,
    primitive,
    rank,
    scale_to_integers,
    solve_square,
)
from .core import Clutter, InstanceTooLargeError
from .polyhedra import LinearProgram, packing_lp, solve_lp_exact


@dataclass(frozen=True, slots=True)
class ReesCone:
    """Generators of the Rees semigroup: 0/1 vectors in ZZ^dim.

    The last coordinate is the t-degree: lifted edges carry 1, vertex unit
    vectors carry 0.  The cone is pointed because it sits inside the
    non-negative orthant.
    """

    dim: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.dim:
                raise ValueError("generator length does not match cone dimension")
            if any(x not in (0, 1) for x in g):
                raise ValueError("generators must be 0/1 vectors")
            if not any(g):
                raise ValueError("zero vector cannot generate a ray")


@dataclass(frozen=True, slots=True)
class HilbertBasis:
    """Irreducible lattice points of the cone, sorted by (degree, lex)."""

    dim: int
    elements: tuple[tuple[int, ...], ...]


def rees_cone(c: Clutter) -> ReesCone:
    """Lifted edge vectors (chi_e, 1) followed by the unit vectors (e_k, 0)."""
    gens = [c.characteristic_vector(j) + (1,) for j in range(c.q)]
    for k in range(c.n):
        gens.append(tuple(1 if i == k else 0 for i in range(c.n)) + (0,))
    return ReesCone(dim=c.n + 1, generators=tuple(gens))


def hilbert_basis(
    cone: ReesCone, max_vertices: int = 8, max_edges: int = 12
) -> HilbertBasis:
    """Minimal generating set of the lattice points of the cone.

    Size guard: at most ``max_vertices`` non-lifted coordinates and
    ``max_edges`` lifted (t-degree 1) generators by default; callers may
    raise the limits explicitly.
    """
    n = cone.dim - 1
    q = sum(1 for g in cone.generators if g[-1] == 1)
    if n > max_vertices or q > max_edges:
        raise InstanceTooLargeError(
            f"Hilbert basis limited to {max_vertices} vertices and "
            f"{max_edges} lifted generators (got n={n}, q={q})"
        )
    return _hilbert_basis(cone)


def _degree_lex(vec):
    return (sum(vec), vec)


@lru_cache(maxsize=None)
def _hilbert_basis(cone: ReesCone) -> HilbertBasis:
    D = cone.dim
    gens: list[tuple[int, ...]] = []
    for g in cone.generators:
        if g not in gens:
            gens.append(g)
    if not gens:
        return HilbertBasis(dim=D, elements=())
    if all(sum(g) == 1 for g in gens):
        # sub-cone of the orthant spanned by unit vectors: they are the basis
        return HilbertBasis(dim=D, elements=tuple(sorted(gens, key=_degree_lex)))
    if rank(gens) < D:
        raise ValueError("cone must be full-dimensional or spanned by unit vectors")

    # initial simplex: lexicographically first maximal independent generators
    chosen: list[int] = []
    for idx in range(len(gens)):
        if rank([gens[i] for i in chosen] + [gens[idx]]) > len(chosen):
            chosen.append(idx)
            if len(chosen) == D:
                break
    rest = [i for i in range(len(gens)) if i not in chosen]
    simplices: list[tuple[int, ...]] = [tuple(sorted(chosen))]

    # outward facet normals of the initial simplicial cone, with the set of
    # processed generators each hyperplane vanishes on
    hull: list[list] = []  # [normal tuple, frozenset of zero-dot generator indices]
    for j in range(D):
        mat = [gens[chosen[k]] for k in range(D) if k != j]
        mat.append(gens[chosen[j]])
        rhs = [Fraction(0)] * (D - 1) + [Fraction(-1)]
        h = solve_square(mat, rhs)
        normal = scale_to_integers(h)
        hull.append([normal, frozenset(chosen[k] for k in range(D) if k != j)])

    dot_cache: dict[tuple[tuple[int, ...], int], int] = {}

    def dot(normal: tuple[int, ...], gi: int) -> int:
        key = (normal, gi)
        v = dot_cache.get(key)
        if v is None:
            v = sum(a * b for a, b in zip(normal, gens[gi]))
            dot_cache[key] = v
        return v

    for idx in rest:
        vals = [dot(h[0], idx) for h in hull]
        if all(v <= 0 for v in vals):
            for h, v in zip(hull, vals):
                if v == 0:
                    h[1] = h[1] | {idx}
            continue

        # extend the triangulation over the visible part of the boundary: a
        # facet of a simplex lies on hull hyperplane h exactly when one of
        # its rays has a nonzero (negative) dot with h and the rest vanish
        new_simplices: dict[tuple[int, ...], None] = {}
        for h, v in zip(hull, vals):
            if v <= 0:
                continue
            hn = h[0]
            for sigma in simplices:
                nonzero = [r for r in sigma if dot(hn, r) != 0]
                if len(nonzero) == 1:
                    face = set(sigma)
                    face.discard(nonzero[0])
                    face.add(idx)
                    new_simplices[tuple(sorted(face))] = None
        simplices.extend(new_simplices)

        # double-description update of the hull hyperplanes
        zero = [h for h, v in zip(hull, vals) if v == 0]
        neg = [(h, v) for h, v in zip(hull, vals) if v < 0]
        pos = [(h, v) for h, v in zip(hull, vals) if v > 0]
        new_hyps: list[list] = []
        for hp, vp in pos:
            for hn, vn in neg:
                z = hp[1] & hn[1]
                if len(z) < D - 2:
                    continue
                blocked = False
                for other in hull:
                    if other is hp or other is hn:
                        continue
                    if z <= other[1]:
                        blocked = True
                        break
                if blocked:
                    continue
                normal = primitive(
                    tuple(vp * b - vn * a for a, b in zip(hp[0], hn[0]))
                )
                new_hyps.append([normal, z | {idx}])
        hull = [[h[0], h[1] | {idx}] for h in zero] + [h for h, _ in neg] + new_hyps

    # lattice points of each half-open fundamental parallelepiped
    candidates: set[tuple[int, ...]] = set(gens)
    for sigma in simplices:
        rays = [gens[i] for i in sigma]
        diag = hermite_diagonal([list(r) for r in rays])
        volume = 1
        for d in diag:
            volume *= d
        if volume == 1:
            continue
        matrix = [[rays[col][row] for col in range(D)] for row in range(D)]
        det = int(determinant(matrix))
        inverse = invert(matrix)
        adjugate = [[int(det * inverse[i][j]) for j in range(D)] for i in range(D)]
        for t in product(*(range(d) for d in diag)):
            floors = [
                sum(adjugate[i][r] * t[r] for r in range(D)) // det for i in range(D)
            ]
            point = tuple(
                t[row] - sum(matrix[row][j] * floors[j] for j in range(D))
                for row in range(D)
            )
            if any(point):
                candidates.add(point)

    # grading sieve: accept exactly the irreducible lattice points
    hyperplanes = [h[0] for h in hull]
    accepted: list[tuple[int, ...]] = []
    for z in sorted(candidates, key=_degree_lex):
        reducible = False
        for b in accepted:
            diff = tuple(x - y for x, y in zip(z, b))
            if all(d >= 0 for d in diff) and all(
                sum(hj * dj for hj, dj in zip(h, diff)) <= 0 for h in hyperplanes
            ):
                reducible = True
                break
        if not reducible:
            accepted.append(z)
    return HilbertBasis(dim=D, elements=tuple(accepted))


def cone_contains(cone: ReesCone, vector) -> bool:
    """Exact membership of a rational vector in the real cone (LP feasibility)."""
    v = tuple(Fraction(x) for x in vector)
    if len(v) != cone.dim:
        raise ValueError(f"expected a vector of length {cone.dim}, got {len(v)}")
    if not cone.generators:
        return not any(v)
    lp = LinearProgram(
        objective=tuple(Fraction(0) for _ in cone.generators),
        rows=tuple(
            tuple(Fraction(g[i]) for g in cone.generators) for i in range(cone.dim)
        ),
        senses=tuple("=" for _ in range(cone.dim)),
        rhs=v,
    )
    return solve_lp_exact(lp).status == "optimal"


def _validated_exponents(c: Clutter, a) -> tuple[int, ...]:
    vec = tuple(int(x) for x in a)
    if len(vec) != c.n:
        raise ValueError(f"expected {c.n} exponents, got {len(vec)}")
    if any(x < 0 for x in vec):
        raise ValueError("exponents must be non-negative")
    return vec


@lru_cache(maxsize=None)
def _edge_vectors(c: Clutter) -> tuple[tuple[int, ...], ...]:
    return tuple(c.characteristic_vector(j) for j in range(c.q))


@lru_cache(maxsize=None)
def _min_edge_size(c: Clutter) -> int:
    return min(len(e) for e in c.edges)


def power_membership(c: Clutter, a, i) -> bool:
    """x^a in I^i: some multiset of i edge vectors is componentwise <= a."""
    vec = _validated_exponents(c, a)
    power = int(i)
    if power < 0:
        raise ValueError("power must be non-negative")
    if power == 0:
        return True
    if c.q == 0:
        return False
    return _power_search(c, vec, power, 0)


@lru_cache(maxsize=None)
def _power_search(c: Clutter, remaining: tuple[int, ...], k: int, j0: int) -> bool:
    if k == 0:
        return True
    if sum(remaining) < k * _min_edge_size(c):
        return False
    edges = _edge_vectors(c)
    for j in range(j0, c.q):
        e = edges[j]
        if all(r >= x for r, x in zip(remaining, e)):
            rest = tuple(r - x for r, x in zip(remaining, e))
            if _power_search(c, rest, k - 1, j):
                return True
    return False


def integral_closure_membership(c: Clutter, a, i) -> bool:
    """x^a in the integral closure of I^i.

    Decided by the Newton-polyhedron test: a dominates a point of i times
    the edge polytope, i.e. the exact fractional packing LP with vertex
    capacities a has optimum at least i.
    """
    vec = _validated_exponents(c, a)
    power = int(i)
    if power < 0:
        raise ValueError("power must be non-negative")
    if power == 0:
        return True
    if c.q == 0:
        return False
    result = solve_lp_exact(packing_lp(c, vec))
    return result.value >= power


def symbolic_power_membership(c: Clutter, a, i) -> bool:
    """x^a in the i-th symbolic power: every minimal cover C has sum(a|C) >= i.

    The symbolic power of a square-free monomial ideal is the intersection
    of the i-th powers of its minimal primes, one per minimal vertex cover.
    """
    vec = _validated_exponents(c, a)
    power = int(i)
    if power < 0:
        raise ValueError("power must be non-negative")
    if power == 0:
        return True
    return all(
        sum(vec[v] for v in cover) >= power
        for cover in covering.minimal_vertex_covers(c)
    )


@dataclass(frozen=True, slots=True)
class NormalityVerdict:
    """Outcome of the exact normality decision.

    When not normal, ``witness`` is the Hilbert-basis element (a, b) whose
    monomial x^a t^b lies in the integral closure of I^b but not in I^b.
    """

    normal: bool
    witness: tuple[tuple[int, ...], int] | None = None


def is_normal(
    c: Clutter, max_vertices: int = 8, max_edges: int = 12
) -> NormalityVerdict:
    """Exact normality of the edge ideal via the Hilbert-basis criterion.

    The ideal is normal iff every Hilbert-basis element of the Rees cone
    already lies in the semigroup generated by the lifted edges and unit
    vectors; the first failure (in basis order) is returned as a witness.
    """
    basis = hilbert_basis(rees_cone(c), max_vertices=max_vertices, max_edges=max_edges)
    for element in basis.elements:
        a, b = element[: c.n], element[c.n]
        if not power_membership(c, a, b):
            return NormalityVerdict(normal=False, witness=(a, b))
    return NormalityVerdict(normal=True)


@dataclass(frozen=True, slots=True)
class PowerCertificate:
    """Bounded power-equality check: certified up to ``bound`` or a witness.

    ``witness`` is the lexicographically first pair (a, i) within the bound
    where the larger ideal (integral closure or symbolic power) contains
    x^a but the ordinary power I^i does not.
    """

    certified: bool
    bound: int
    witness: tuple[tuple[int, ...], int] | None = None


def _bounded_power_scan(c: Clutter, bound: int, member, max_boxes: int):
    if bound < 1:
        raise ValueError("the power bound must be positive")
    if (bound + 1) ** c.n > max_boxes:
        raise InstanceTooLargeError(
            f"{(bound + 1) ** c.n} candidate exponent vectors exceed "
            f"the limit of {max_boxes}"
        )
    for i in range(1, bound + 1):
        for a in product(range(i + 1), repeat=c.n):
            if not member(c, a, i):
                continue
            minimal = True
            for j in range(c.n):
                if a[j] > 0:
                    lower = a[:j] + (a[j] - 1,) + a[j + 1 :]
                    if member(c, lower, i):
                        minimal = False
                        break
            if not minimal:
                continue
            if not power_membership(c, a, i):
                return PowerCertificate(certified=False, bound=bound, witness=(a, i))
    return PowerCertificate(certified=True, bound=bound)


def is_normal_bounded(
    c: Clutter, max_power: int, max_boxes: int = 1 << 20
) -> PowerCertificate:
    """I^i equals its integral closure for all i <= max_power.

    Enumerates the candidate box {0..i}^n (minimal closure generators have
    entries <= i because edge vectors are 0/1), keeps the minimal members,
    and checks each against the ordinary power.
    """
    return _bounded_power_scan(c, int(max_power), integral_closure_membership, max_boxes)


def is_ntf_bounded(
    c: Clutter, max_power: int, max_boxes: int = 1 << 20
) -> PowerCertificate:
    """I^i equals the i-th symbolic power for all i <= max_power."""
    return _bounded_power_scan(c, int(max_power), symbolic_power_membership, max_boxes)


def monomial_string(c: Clutter, a, rees_degree: int = 0) -> str:
    """Render x^a (t^b) with vertex labels, e.g. ``x1^2*x3 t^2``."""
    vec = _validated_exponents(c, a)
    factors = []
    for label, e in zip(c.vertices, vec):
        if e == 1:
            factors.append(label)
        elif e > 1:
            factors.append(f"{label}^{e}")
    body = "*".join(factors) if factors else "1"
    if rees_degree > 0:
        return f"{body} t^{rees_degree}"
    return body
