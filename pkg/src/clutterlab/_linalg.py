"""Exact linear algebra over the rationals and the integers.

Everything here works with ``fractions.Fraction`` or plain ``int``; no
floating point is used anywhere.  These are small dense routines sized for
the desk-scale instances the rest of the package handles.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def solve_square(matrix, rhs):
    """Solve ``matrix @ x = rhs`` exactly for a square matrix.

    Returns the unique solution as a list of Fractions, or None when the
    matrix is singular.
    """
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def invert(matrix):
    """Exact inverse of a square matrix, or None when singular."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [v / inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def rank(vectors) -> int:
    """Rank of a list of integer/rational vectors (Gaussian elimination)."""
    rows = [[Fraction(v) for v in vec] for vec in vectors]
    if not rows:
        return 0
    width = len(rows[0])
    r = 0
    for col in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / pv
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def primitive(vec) -> tuple[int, ...]:
    """Scale an integer vector by 1/gcd, preserving orientation."""
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g <= 1:
        return tuple(int(v) for v in vec)
    return tuple(int(v) // g for v in vec)


def scale_to_integers(vec) -> tuple[int, ...]:
    """Clear denominators of a rational vector and reduce to primitive form."""
    denom = 1
    for v in vec:
        denom = denom * Fraction(v).denominator // gcd(denom, Fraction(v).denominator)
    ints = [int(Fraction(v) * denom) for v in vec]
    return primitive(ints)


def hermite_diagonal(columns) -> list[int]:
    """Diagonal of a lower-triangular column Hermite form of an integer matrix.

    ``columns`` is a list of D column vectors spanning a full-rank lattice in
    Z^D.  The returned positive diagonal (d_0, ..., d_{D-1}) satisfies
    prod(d_i) = |det| and the box prod([0, d_i)) is a complete residue system
    for Z^D modulo the column lattice.  Raises ValueError on singular input.
    """
    cols = [list(map(int, c)) for c in columns]
    d = len(cols)
    for i in range(d):
        while True:
            nz = [j for j in range(i, d) if cols[j][i] != 0]
            if not nz:
                raise ValueError("singular matrix has no Hermite diagonal")
            j0 = min(nz, key=lambda j: abs(cols[j][i]))
            if j0 != i:
                cols[i], cols[j0] = cols[j0], cols[i]
            if cols[i][i] < 0:
                cols[i] = [-v for v in cols[i]]
            done = True
            p = cols[i][i]
            for j in range(i + 1, d):
                if cols[j][i] != 0:
                    q = cols[j][i] // p
                    cols[j] = [v - q * w for v, w in zip(cols[j], cols[i])]
                    if cols[j][i] != 0:
                        done = False
            if done:
                break
    return [cols[i][i] for i in range(d)]


def determinant(matrix) -> Fraction:
    """Exact determinant via fraction-free-ish Gaussian elimination."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant needs a square matrix")
    a = [[Fraction(v) for v in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        pv = a[col][col]
        det *= pv
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / pv
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return det
