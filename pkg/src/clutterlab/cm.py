"""Independence complexes, exact simplicial homology, and Cohen-Macaulayness.

The independence complex of a clutter has the independent (edge-free)
vertex sets as faces; its facets are exactly the complements of the minimal
vertex covers.  Cohen-Macaulayness of the quotient by the edge ideal is
decided by homology vanishing: for every face F, the link of F must have
zero reduced homology in every dimension strictly below the link's own
dimension.  Links are never materialized separately — the link of a face F
is the independence complex of the minor contracting F, the vertices that
become stranded in that minor are cone points (so such links are acyclic
and skipped), and homology profiles are memoized per minor.

Homology is exact: boundary-matrix ranks via sparse fraction elimination
over the rationals, or bitmask elimination over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import covering
from .core import Clutter, InstanceTooLargeError, minor


def _normalize_field(field: str) -> str:
    key = str(field).strip().lower()
    if key in ("q", "qq", "rational", "rationals"):
        return "Q"
    if key in ("f2", "gf2", "gf(2)", "z2"):
        return "F2"
    raise ValueError(f"unsupported coefficient field: {field!r} (use Q or F2)")


@dataclass(frozen=True, slots=True)
class SimplicialComplex:
    """Abstract simplicial complex on labeled vertices, stored by facets.

    Facets are strictly increasing index tuples, pairwise incomparable,
    sorted by (size, lex).  ``facets == ((),)`` is the empty complex {∅};
    an empty facet list is the void complex with no faces at all.
    """

    vertices: tuple[str, ...]
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.vertices)
        seen = set()
        for f in self.facets:
            if any(not (0 <= v < n) for v in f):
                raise ValueError("facet vertex index out of range")
            if any(a >= b for a, b in zip(f, f[1:])):
                raise ValueError("facets must be strictly increasing index tuples")
            seen.add(frozenset(f))
        if len(seen) != len(self.facets):
            raise ValueError("duplicate facets")
        for a in seen:
            for b in seen:
                if a < b:
                    raise ValueError("facets must be pairwise incomparable")
        if list(self.facets) != sorted(self.facets, key=lambda f: (len(f), f)):
            raise ValueError("facets must be sorted by (size, lex)")

    @property
    def dimension(self) -> int | None:
        """Top face dimension; -1 for {∅}, None for the void complex."""
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> list[tuple[int, ...]]:
        """Every face including the empty one, sorted by (size, lex)."""
        out: set[tuple[int, ...]] = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(combinations(f, k))
        return sorted(out, key=lambda f: (len(f), f))

    def has_face(self, face) -> bool:
        fs = frozenset(face)
        return any(fs <= frozenset(f) for f in self.facets)


def independence_complex(c: Clutter, max_vertices: int = 16) -> SimplicialComplex:
    """Faces = vertex sets containing no edge; facets = cover complements."""
    if c.n > max_vertices:
        raise InstanceTooLargeError(
            f"independence complex limited to {max_vertices} vertices (got {c.n})"
        )
    everything = set(range(c.n))
    facets = sorted(
        (tuple(sorted(everything - set(cover)))
         for cover in covering.minimal_vertex_covers(c)),
        key=lambda f: (len(f), f),
    )
    return SimplicialComplex(vertices=c.vertices, facets=tuple(facets))


@dataclass(frozen=True, slots=True)
class HomologyProfile:
    """Reduced Betti numbers for dimensions -1..dimension over one field."""

    field: str
    dimension: int | None
    betti: tuple[int, ...]

    def betti_number(self, k: int) -> int:
        if self.dimension is None:
            return 0
        idx = k + 1
        if 0 <= idx < len(self.betti):
            return self.betti[idx]
        return 0


def _rank_rational(rows: list[dict[int, object]]) -> int:
    """Rank of a sparse matrix given as dicts col -> nonzero entry."""
    pivots: dict[int, dict[int, object]] = {}
    rank = 0
    for row in rows:
        r = dict(row)
        while r:
            col = next((col for col in r if col in pivots), None)
            if col is None:
                break
            f = r.pop(col)
            for pc, pv in pivots[col].items():
                if pc == col:
                    continue
                nv = r.get(pc, 0) - f * pv
                if nv:
                    r[pc] = nv
                else:
                    r.pop(pc, None)
        if not r:
            continue
        col = next((col for col, v in r.items() if v == 1 or v == -1), None)
        if col is None:
            col = next(iter(r))
        lead = r[col]
        if lead == 1:
            norm = r
        elif lead == -1:
            norm = {cc: -vv for cc, vv in r.items()}
        else:
            norm = {cc: Fraction(vv) / lead for cc, vv in r.items()}
        pivots[col] = norm
        rank += 1
    return rank


def _rank_gf2(masks: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for m in masks:
        while m:
            low = m & -m
            p = pivots.get(low)
            if p is None:
                pivots[low] = m
                rank += 1
                break
            m ^= p
    return rank


def reduced_homology(
    sc: SimplicialComplex, field: str = "Q", max_faces: int = 1 << 22
) -> HomologyProfile:
    """Exact reduced Betti numbers from boundary-matrix ranks.

    Uses the augmented chain complex, so the empty face contributes one
    (-1)-chain and {∅} has a single Betti number betti_number(-1) == 1.
    """
    fld = _normalize_field(field)
    if not sc.facets:
        return HomologyProfile(field=fld, dimension=None, betti=())
    if sum(1 << len(f) for f in sc.facets) > max_faces:
        raise InstanceTooLargeError(
            f"face enumeration bound {max_faces} exceeded"
        )
    by_dim: dict[int, list[tuple[int, ...]]] = {}
    for f in sc.faces():
        by_dim.setdefault(len(f) - 1, []).append(f)
    dim = max(by_dim)
    index = {
        d: {f: i for i, f in enumerate(faces)} for d, faces in by_dim.items()
    }
    ranks: dict[int, int] = {}
    for k in range(0, dim + 1):
        lower = index[k - 1]
        if fld == "F2":
            masks = []
            for f in by_dim[k]:
                m = 0
                for i in range(len(f)):
                    m |= 1 << lower[f[:i] + f[i + 1 :]]
                masks.append(m)
            ranks[k] = _rank_gf2(masks)
        else:
            rows = []
            for f in by_dim[k]:
                row: dict[int, object] = {}
                for i in range(len(f)):
                    row[lower[f[:i] + f[i + 1 :]]] = 1 if i % 2 == 0 else -1
                rows.append(row)
            ranks[k] = _rank_rational(rows)
    betti = tuple(
        len(by_dim.get(k, ())) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        for k in range(-1, dim + 1)
    )
    return HomologyProfile(field=fld, dimension=dim, betti=betti)


@dataclass(frozen=True, slots=True)
class CmVerdict:
    """Cohen-Macaulay verdict over one coefficient field.

    A negative verdict carries exactly one witness: either two minimal
    covers of different sizes (not unmixed), or the first face — in
    (size, lex) order — whose link has nonzero reduced homology below its
    dimension, reported as (face labels, homology dimension, Betti number).
    """

    cohen_macaulay: bool
    field: str
    unmixed_witness: tuple[tuple[str, ...], tuple[str, ...]] | None = None
    link_witness: tuple[tuple[str, ...], int, int] | None = None


@lru_cache(maxsize=None)
def _link_homology(link: Clutter, fld: str, max_vertices: int) -> HomologyProfile:
    return reduced_homology(independence_complex(link, max_vertices=max_vertices), fld)


def is_cohen_macaulay(
    c: Clutter, field: str = "Q", max_vertices: int = 16
) -> CmVerdict:
    """Homology-vanishing criterion on every link of the independence complex.

    Pre-filter: unequal minimal-cover sizes refute Cohen-Macaulayness
    immediately (the complex would not be pure).  Then faces are scanned in
    (size, lex) order; the link of F is the independence complex of the
    minor contracting F.  When that minor strands a vertex, the link is a
    cone and is skipped as acyclic.
    """
    fld = _normalize_field(field)
    if c.n > max_vertices:
        raise InstanceTooLargeError(
            f"Cohen-Macaulay check limited to {max_vertices} vertices (got {c.n})"
        )
    covers = covering.minimal_vertex_covers(c)
    sizes = sorted({len(cv) for cv in covers})
    if len(sizes) > 1:
        small = next(cv for cv in covers if len(cv) == sizes[0])
        big = next(cv for cv in covers if len(cv) == sizes[-1])
        labels = lambda cover: tuple(c.vertices[i] for i in cover)  # noqa: E731
        return CmVerdict(
            cohen_macaulay=False,
            field=fld,
            unmixed_witness=(labels(small), labels(big)),
        )
    sc = independence_complex(c, max_vertices=max_vertices)
    for face in sc.faces():
        contracted = tuple(c.vertices[i] for i in face)
        link = minor(c, deleted=(), contracted=contracted)
        if link.n < c.n - len(face):
            continue  # a stranded vertex cones the link: acyclic
        profile = _link_homology(link, fld, max_vertices)
        top = profile.dimension if profile.dimension is not None else -1
        for k in range(-1, top):
            b = profile.betti_number(k)
            if b != 0:
                return CmVerdict(
                    cohen_macaulay=False,
                    field=fld,
                    link_witness=(contracted, k, b),
                )
    return CmVerdict(cohen_macaulay=True, field=fld)
