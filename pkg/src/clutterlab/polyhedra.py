"""Exact rational linear programming and set-covering polyhedra.

All arithmetic is over ``fractions.Fraction``; floating point is never
used, so optima, vertices, and integrality verdicts are exact.  The solver
is a two-phase tableau simplex with Bland's rule (smallest-index entering
column, smallest ratio then smallest basic variable leaving), which makes
every answer deterministic and cycling impossible.

For a clutter with incidence matrix A (rows = vertices, columns = edges)
and a weight vector w, the two dual programs of interest are

    covering:  min <w, x>   subject to  x >= 0,  x A >= 1
    packing:   max <y, 1>   subject to  y >= 0,  A y <= w

whose common optimal value sits between the integer matching and covering
numbers.  Q(A) = {x >= 0 : x A >= 1} is the covering polyhedron; the
clutter is ideal when Q(A) has integral vertices only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from . import covering
from ._linalg import solve_square
from .core import Clutter, InstanceTooLargeError


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, slots=True)
class LinearProgram:
    """min (or max) <objective, x> s.t. rows {<=,>=,=} rhs, x >= lower_bounds."""

    objective: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    senses: tuple[str, ...]
    rhs: tuple[Fraction, ...]
    maximize: bool = False
    lower_bounds: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        nvars = len(self.objective)
        if any(len(r) != nvars for r in self.rows):
            raise ValueError("constraint row width does not match objective")
        if not (len(self.rows) == len(self.senses) == len(self.rhs)):
            raise ValueError("rows, senses and rhs must have equal length")
        if any(s not in ("<=", ">=", "=") for s in self.senses):
            raise ValueError("senses must be <=, >= or =")


@dataclass(frozen=True, slots=True)
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None = None
    solution: tuple[Fraction, ...] | None = None


def _pivot(tab, obj, basis, r, col):
    pr = tab[r]
    inv = pr[col]
    if inv != 1:
        tab[r] = pr = [v / inv for v in pr]
    for i, row in enumerate(tab):
        if i != r and row[col] != 0:
            f = row[col]
            tab[i] = [v - f * w for v, w in zip(row, pr)]
    if obj[col] != 0:
        f = obj[col]
        for j, v in enumerate(pr):
            obj[j] -= f * v
    basis[r] = col


def _run_simplex(tab, obj, basis, allowed):
    """Bland-rule pivoting until optimal or unbounded.

    ``tab`` rows end with the rhs entry; ``obj`` is the reduced-cost row
    (same width).  Only columns in ``allowed`` may enter the basis.
    """
    width = len(obj) - 1
    while True:
        col = next((j for j in range(width) if allowed[j] and obj[j] < 0), None)
        if col is None:
            return "optimal"
        r = None
        best_ratio = None
        for i, row in enumerate(tab):
            if row[col] > 0:
                ratio = row[-1] / row[col]
                if best_ratio is None or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[r]
                ):
                    best_ratio = ratio
                    r = i
        if r is None:
            return "unbounded"
        _pivot(tab, obj, basis, r, col)


def solve_lp_exact(lp: LinearProgram) -> LpResult:
    """Exact two-phase simplex.  Deterministic via Bland's rule."""
    nvars = len(lp.objective)
    lower = lp.lower_bounds or tuple(Fraction(0) for _ in range(nvars))
    lower = tuple(_frac(x) for x in lower)
    sign = -1 if lp.maximize else 1
    costs = [sign * _frac(cj) for cj in lp.objective]

    # shift x = y + lower so y >= 0
    rows = []
    rhs = []
    senses = list(lp.senses)
    for row, s, b in zip(lp.rows, lp.senses, lp.rhs):
        row = [_frac(v) for v in row]
        shift = sum(v * l for v, l in zip(row, lower))
        rows.append(row)
        rhs.append(_frac(b) - shift)

    # normalize rhs >= 0
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
            senses[i] = {"<=": ">=", ">=": "<=", "=": "="}[senses[i]]

    m = len(rows)
    nslack = sum(1 for s in senses if s != "=")
    total = nvars + nslack + m  # one artificial reserved per row (some unused)
    tab = []
    basis = [-1] * m
    slack_at = nvars
    art_at = nvars + nslack
    art_cols = []
    for i in range(m):
        row = [Fraction(0)] * (total + 1)
        for j in range(nvars):
            row[j] = rows[i][j]
        row[-1] = rhs[i]
        if senses[i] == "<=":
            row[slack_at] = Fraction(1)
            basis[i] = slack_at
            slack_at += 1
        elif senses[i] == ">=":
            row[slack_at] = Fraction(-1)
            slack_at += 1
            row[art_at] = Fraction(1)
            basis[i] = art_at
            art_cols.append(art_at)
            art_at += 1
        else:
            row[art_at] = Fraction(1)
            basis[i] = art_at
            art_cols.append(art_at)
            art_at += 1
        tab.append(row)

    allowed = [True] * total
    for j in range(art_at, total):
        allowed[j] = False  # reserved artificial slots that were not needed

    if art_cols:
        # phase 1: minimize the artificial sum
        obj = [Fraction(0)] * (total + 1)
        for j in art_cols:
            obj[j] = Fraction(1)
        for i, row in enumerate(tab):
            if basis[i] in art_cols:
                obj = [a - b for a, b in zip(obj, row)]
        _run_simplex(tab, obj, basis, allowed)
        if -obj[-1] > 0:  # phase-1 optimum is -obj[-1]
            return LpResult(status="infeasible")
        # drive any basic artificials out (or drop redundant rows)
        for i in range(m - 1, -1, -1):
            if basis[i] in art_cols:
                col = next(
                    (
                        j
                        for j in range(total)
                        if j not in art_cols and allowed[j] and tab[i][j] != 0
                    ),
                    None,
                )
                if col is None:
                    del tab[i]
                    del basis[i]
                else:
                    _pivot(tab, obj, basis, i, col)
        for j in art_cols:
            allowed[j] = False

    # phase 2 with the true costs
    obj = [Fraction(0)] * (total + 1)
    for j in range(nvars):
        obj[j] = costs[j]
    for i, row in enumerate(tab):
        if obj[basis[i]] != 0:
            f = obj[basis[i]]
            obj = [a - f * b for a, b in zip(obj, row)]
    status = _run_simplex(tab, obj, basis, allowed)
    if status == "unbounded":
        return LpResult(status="unbounded")
    x = [Fraction(0)] * total
    for i, b in enumerate(basis):
        x[b] = tab[i][-1]
    solution = tuple(x[j] + lower[j] for j in range(nvars))
    value = sum(_frac(cj) * v for cj, v in zip(lp.objective, solution))
    return LpResult(status="optimal", value=value, solution=solution)


def covering_lp(c: Clutter, weights) -> LinearProgram:
    """min <w, x>, x >= 0, one row sum(x_i, i in e) >= 1 per edge e."""
    w = tuple(_frac(x) for x in weights)
    if len(w) != c.n:
        raise ValueError(f"expected {c.n} weights, got {len(w)}")
    rows = tuple(
        tuple(Fraction(1 if i in set(e) else 0) for i in range(c.n)) for e in c.edges
    )
    return LinearProgram(
        objective=w,
        rows=rows,
        senses=tuple(">=" for _ in rows),
        rhs=tuple(Fraction(1) for _ in rows),
    )


def packing_lp(c: Clutter, weights) -> LinearProgram:
    """max <y, 1>, y >= 0, one row sum(y_e, e through i) <= w_i per vertex i."""
    w = tuple(_frac(x) for x in weights)
    if len(w) != c.n:
        raise ValueError(f"expected {c.n} weights, got {len(w)}")
    rows = tuple(
        tuple(Fraction(1 if i in set(e) else 0) for e in c.edges) for i in range(c.n)
    )
    return LinearProgram(
        objective=tuple(Fraction(1) for _ in range(c.q)),
        rows=rows,
        senses=tuple("<=" for _ in rows),
        rhs=w,
        maximize=True,
    )


@dataclass(frozen=True, slots=True)
class IlpResult:
    value: int
    solution: tuple[int, ...]


def _solve_ilp(lp: LinearProgram) -> IlpResult | None:
    """Branch and bound over the exact LP relaxation.

    Branches on the smallest-index fractional variable, exploring the floor
    branch first, so the reported optimal solution is deterministic.
    Returns None when the program is infeasible.
    """
    best_value: Fraction | None = None
    best_solution: tuple[int, ...] | None = None
    sign = -1 if lp.maximize else 1

    stack = [()]  # each node: tuple of extra (coef_row, sense, bound)
    while stack:
        extra = stack.pop()
        node = LinearProgram(
            objective=lp.objective,
            rows=lp.rows + tuple(e[0] for e in extra),
            senses=lp.senses + tuple(e[1] for e in extra),
            rhs=lp.rhs + tuple(e[2] for e in extra),
            maximize=lp.maximize,
            lower_bounds=lp.lower_bounds,
        )
        res = solve_lp_exact(node)
        if res.status == "infeasible":
            continue
        if res.status == "unbounded":
            raise ValueError("integer program is unbounded")
        if best_value is not None and sign * res.value >= sign * best_value:
            continue
        frac_var = next(
            (j for j, v in enumerate(res.solution) if v.denominator != 1), None
        )
        if frac_var is None:
            best_value = res.value
            best_solution = tuple(int(v) for v in res.solution)
            continue
        v = res.solution[frac_var]
        unit = tuple(
            Fraction(1 if j == frac_var else 0) for j in range(len(lp.objective))
        )
        lo = (unit, "<=", Fraction(v.numerator // v.denominator))
        hi = (unit, ">=", Fraction(v.numerator // v.denominator + 1))
        # LIFO: push the ceiling branch first so the floor branch runs first
        stack.append(extra + (hi,))
        stack.append(extra + (lo,))
    if best_value is None:
        return None
    return IlpResult(value=int(best_value), solution=best_solution)


def solve_covering_ilp(c: Clutter, weights) -> IlpResult:
    """Exact integer optimum of the covering program min{<w,x> : x A >= 1}."""
    w = tuple(int(x) for x in weights)
    if len(w) != c.n:
        raise ValueError(f"expected {c.n} weights, got {len(w)}")
    if any(x < 0 for x in w):
        raise ValueError("weights must be non-negative")
    if c.n == 0:
        return IlpResult(value=0, solution=())
    res = _solve_ilp(covering_lp(c, w))
    if res is None:
        raise RuntimeError("covering program cannot be infeasible")
    return res


def solve_packing_ilp(c: Clutter, weights) -> IlpResult:
    """Exact integer optimum of the packing program max{<y,1> : A y <= w}."""
    w = tuple(int(x) for x in weights)
    if len(w) != c.n:
        raise ValueError(f"expected {c.n} weights, got {len(w)}")
    if any(x < 0 for x in w):
        raise ValueError("weights must be non-negative")
    if c.q == 0:
        return IlpResult(value=0, solution=())
    res = _solve_ilp(packing_lp(c, w))
    if res is None:
        raise RuntimeError("packing program cannot be infeasible")
    return res


@dataclass(frozen=True, slots=True)
class QVertexSet:
    """Vertices of the covering polyhedron Q(A), lexicographically sorted."""

    vertices: tuple[tuple[Fraction, ...], ...]

    def integral_flags(self) -> tuple[bool, ...]:
        return tuple(
            all(x.denominator == 1 for x in v) for v in self.vertices
        )


def enumerate_Q_vertices(c: Clutter, max_vertices: int = 12) -> QVertexSet:
    """All vertices of Q(A) = {x >= 0 : x A >= 1}, by basis enumeration.

    Every vertex is the unique solution of n linearly independent tight
    constraints, so all n-subsets of the n + q constraints are tried and
    feasible solutions collected.  Exact and deterministic.
    """
    n = c.n
    if n > max_vertices:
        raise InstanceTooLargeError(
            f"Q(A) vertex enumeration limited to {max_vertices} vertices (got {n})"
        )
    if n == 0:
        return QVertexSet(vertices=((),))
    constraints = []  # (coefficients, rhs)
    for e in c.edges:
        members = set(e)
        constraints.append(
            (tuple(Fraction(1 if i in members else 0) for i in range(n)), Fraction(1))
        )
    for i in range(n):
        constraints.append(
            (tuple(Fraction(1 if j == i else 0) for j in range(n)), Fraction(0))
        )
    found: set[tuple[Fraction, ...]] = set()
    for combo in combinations(range(len(constraints)), n):
        matrix = [constraints[k][0] for k in combo]
        rhs = [constraints[k][1] for k in combo]
        x = solve_square(matrix, rhs)
        if x is None:
            continue
        if all(xi >= 0 for xi in x) and all(
            sum(a * b for a, b in zip(coefs, x)) >= bound
            for coefs, bound in constraints[: c.q]
        ):
            found.add(tuple(x))
    return QVertexSet(vertices=tuple(sorted(found)))


@dataclass(frozen=True, slots=True)
class IdealVerdict:
    ideal: bool
    fractional_witness: tuple[Fraction, ...] | None = None


def is_ideal_clutter(c: Clutter, max_vertices: int = 12) -> IdealVerdict:
    """Ideal = the covering polyhedron has integral vertices only.

    Also cross-checks that the integral vertices are exactly the
    characteristic vectors of the minimal vertex covers; a mismatch would
    mean an implementation bug and raises RuntimeError.
    """
    qset = enumerate_Q_vertices(c, max_vertices=max_vertices)
    integral = []
    fractional = []
    for v in qset.vertices:
        if all(x.denominator == 1 for x in v):
            integral.append(tuple(int(x) for x in v))
        else:
            fractional.append(v)
    covers = covering.minimal_vertex_covers(c)
    cover_vectors = {
        tuple(1 if i in set(cov) else 0 for i in range(c.n)) for cov in covers
    }
    if set(integral) != cover_vectors:
        raise RuntimeError(
            "integral Q(A) vertices disagree with the minimal-cover family"
        )
    if fractional:
        return IdealVerdict(ideal=False, fractional_witness=fractional[0])
    return IdealVerdict(ideal=True)


@dataclass(frozen=True, slots=True)
class MfmcVerdict:
    """Bounded certificate that covering and packing integer optima agree.

    ``certified`` means equality held for every weight box entry up to the
    bound; it is evidence, not a proof for all weights.
    """

    certified: bool
    bound: int
    witness_weights: tuple[int, ...] | None = None
    cover_value: int | None = None
    packing_value: int | None = None


def mfmc_bounded(
    c: Clutter, max_weight: int = 3, max_boxes: int = 1 << 20
) -> MfmcVerdict:
    """Check weighted_cover_number == packing ILP for all w in {0..W}^n.

    Weights are scanned in lexicographic order, so a failure reports the
    first counterexample.
    """
    boxes = (max_weight + 1) ** c.n
    if boxes > max_boxes:
        raise InstanceTooLargeError(
            f"{boxes} weight boxes exceed the limit of {max_boxes}"
        )
    for w in product(range(max_weight + 1), repeat=c.n):
        cover_value = covering.weighted_cover_number(c, w)
        packing_value = solve_packing_ilp(c, w).value
        if cover_value != packing_value:
            return MfmcVerdict(
                certified=False,
                bound=max_weight,
                witness_weights=w,
                cover_value=cover_value,
                packing_value=packing_value,
            )
    return MfmcVerdict(certified=True, bound=max_weight)
