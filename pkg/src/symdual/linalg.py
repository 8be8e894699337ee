"""Exact row reduction over Q and over prime fields.

Subspaces are stored as canonical reduced row echelon matrices, so equality
of subspaces is a tuple comparison.  Rational input rows are scaled to
primitive integer vectors and eliminated with content-reduced cross
multiples; division only happens once, in the final normalization.  Prime
field rows are reduced modulo p throughout.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _to_int_row(vec):
    """Scale a row of Fractions/ints to a primitive integer row."""
    den = 1
    for e in vec:
        if isinstance(e, Fraction):
            d = e.denominator
            if d != 1:
                den = den * d // gcd(den, d)
    row = [int(e * den) if isinstance(e, Fraction) else e * den for e in vec]
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        row = [x // g for x in row]
    return row


def _content_reduce(row):
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            return row
    if g > 1:
        return [x // g for x in row]
    return row


class EchelonBuilder:
    """Incrementally build an echelon basis; finish() yields canonical RREF.

    add() returns True when the row enlarged the span, so callers scanning
    many redundant rows can stop as soon as is_full() holds.
    """

    def __init__(self, ncols: int, char: int = 0):
        self.ncols = ncols
        self.char = char
        self.rows: list[list] = []
        self.pivots: list[int] = []
        self._pivmap: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return len(self.rows) == self.ncols

    def add(self, vec) -> bool:
        if self.char == 0:
            return self._add_q(vec)
        return self._add_p(vec)

    def _add_q(self, vec) -> bool:
        row = _to_int_row(vec)
        pivmap = self._pivmap
        rows = self.rows
        c = 0
        n = self.ncols
        while c < n:
            v = row[c]
            if v:
                i = pivmap.get(c)
                if i is None:
                    self.rows.append(_content_reduce(row))
                    self.pivots.append(c)
                    pivmap[c] = len(rows) - 1
                    return True
                piv = rows[i]
                lead = piv[c]
                g = gcd(lead, v)
                a, b = lead // g, v // g
                row = [a * x - b * y for x, y in zip(row, piv)]
                row = _content_reduce(row)
            c += 1
        return False

    def _add_p(self, vec) -> bool:
        p = self.char
        row = [x % p for x in vec]
        pivmap = self._pivmap
        rows = self.rows
        c = 0
        n = self.ncols
        while c < n:
            v = row[c]
            if v:
                i = pivmap.get(c)
                if i is None:
                    inv = pow(v, -1, p)
                    row = [x * inv % p for x in row]
                    self.rows.append(row)
                    self.pivots.append(c)
                    pivmap[c] = len(rows) - 1
                    return True
                piv = rows[i]
                row = [(x - v * y) % p for x, y in zip(row, piv)]
            c += 1
        return False

    def finish(self):
        """Return (rows, pivots) in canonical reduced row echelon form."""
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        rows = [self.rows[i] for i in order]
        pivots = [self.pivots[i] for i in order]
        if self.char == 0:
            for i in range(len(rows) - 1, -1, -1):
                row = rows[i]
                for j in range(i + 1, len(rows)):
                    v = row[pivots[j]]
                    if v:
                        piv = rows[j]
                        lead = piv[pivots[j]]
                        g = gcd(lead, v)
                        a, b = lead // g, v // g
                        row = [a * x - b * y for x, y in zip(row, piv)]
                        row = _content_reduce(row)
                rows[i] = row
            out = []
            for row, pc in zip(rows, pivots):
                lead = row[pc]
                out.append(tuple(Fraction(x, lead) for x in row))
            return tuple(out), tuple(pivots)
        p = self.char
        for i in range(len(rows) - 1, -1, -1):
            row = rows[i]
            for j in range(i + 1, len(rows)):
                v = row[pivots[j]]
                if v:
                    piv = rows[j]
                    row = [(x - v * y) % p for x, y in zip(row, piv)]
            rows[i] = row
        return tuple(tuple(r) for r in rows), tuple(pivots)


def rref(vectors, ncols: int, char: int = 0):
    """Canonical reduced row echelon form of the span of ``vectors``."""
    b = EchelonBuilder(ncols, char)
    for v in vectors:
        b.add(v)
    return b.finish()


def nullspace(rows, pivots, ncols: int, char: int = 0):
    """Canonical RREF basis of the right kernel of a canonical RREF matrix."""
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    zero = Fraction(0) if char == 0 else 0
    one = Fraction(1) if char == 0 else 1
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for i, pc in enumerate(pivots):
            x = rows[i][f]
            if x:
                v[pc] = -x if char == 0 else (-x) % char
        basis.append(v)
    return rref(basis, ncols, char)


def reduce_vector(rows, pivots, vec, char: int = 0):
    """Residual of ``vec`` after reduction against a canonical RREF basis."""
    v = list(vec)
    for i, pc in enumerate(pivots):
        c = v[pc]
        if c:
            row = rows[i]
            if char == 0:
                v = [x - c * y for x, y in zip(v, row)]
            else:
                v = [(x - c * y) % char for x, y in zip(v, row)]
    return v


def vector_in(rows, pivots, vec, char: int = 0) -> bool:
    return not any(reduce_vector(rows, pivots, vec, char))


def solve_square(mat, rhs):
    """Solve a square rational system exactly; None when singular.

    Used by the polyhedron vertex enumeration, hence char 0 only.
    """
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(mat, rhs)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            return None
        aug[c], aug[piv] = aug[piv], aug[c]
        lead = aug[c][c]
        aug[c] = [x / lead for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(aug[i][n] for i in range(n))
