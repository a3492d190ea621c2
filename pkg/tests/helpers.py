"""Independent oracles used to freeze or cross-check expected values.

These deliberately avoid the library's own search/inversion paths: the
candidate oracle is a plain bounded product scan, and the determinant is
exact Fraction elimination.
"""

from fractions import Fraction
from itertools import product


def dot(q, s):
    assert len(q) == len(s)
    return sum(qi * si for qi, si in zip(q, s))


def brute_force_candidates(q, r):
    """All positive t with q . t = r, by scanning the full bounding box."""
    n = len(q)
    total = sum(q)
    axes = []
    for i in range(n):
        top = (r - (total - q[i])) // q[i]
        if top < 1:
            return []
        axes.append(range(1, top + 1))
    return [t for t in product(*axes) if dot(q, t) == r]


def brute_force_decodes(q, s):
    return brute_force_candidates(q, dot(q, s)) == [tuple(s)]


def exact_determinant(rows):
    """Determinant via exact Gaussian elimination over Fractions."""
    m = [[Fraction(v) for v in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return det
