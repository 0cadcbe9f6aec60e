"""Exact linear algebra over the rationals.

Everything here reduces to Gaussian elimination on lists of scalars
(ints and Fractions mixed).  Reduced row echelon form is the canonical
representative of a span, so two subspaces are equal iff their reduced
bases are identical tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graded import GradingError, SuperVector, rat


def rref(rows):
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column indices).  Rows come out
    sorted by pivot column with unit pivots and zeros above and below.
    """
    a = [[rat(x) for x in row] for row in rows]
    if not a:
        return (), []
    ncols = len(a[0])
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = Fraction(1, 1) / a[row][col]
        a[row] = [rat(inv * x) for x in a[row]]
        for r in range(len(a)):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [rat(x - f * y) for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
        if row == len(a):
            break
    return tuple(tuple(r) for r in a[:row]), pivots


def nullspace(rows, ncols):
    """Canonical basis of {x : rows . x = 0}, as a list of tuples."""
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for r, p in zip(red, pivots):
            vec[p] = rat(-r[f])
        basis.append(vec)
    reduced, _ = rref(basis)
    return list(reduced)


@dataclass(frozen=True)
class AffineSubspace:
    """Solution set of a linear system: a point plus a direction span.

    `point` is None for the empty set.  Directions are stored as a
    canonical reduced basis of raw coordinate tuples.
    """

    point: tuple | None
    directions: tuple

    @classmethod
    def empty(cls):
        return cls(None, ())

    @property
    def is_empty(self):
        return self.point is None

    @property
    def dim(self):
        return None if self.is_empty else len(self.directions)

    def contains(self, coords):
        if self.is_empty:
            return False
        coords = tuple(rat(c) for c in coords)
        if len(coords) != len(self.point):
            raise ValueError("coordinate length mismatch")
        diff = [a - b for a, b in zip(coords, self.point)]
        return _in_row_span(self.directions, diff)


def _in_row_span(reduced_rows, vec):
    # reduced_rows must be in reduced row echelon form
    residue = [rat(x) for x in vec]
    for row in reduced_rows:
        lead = next((c for c, x in enumerate(row) if x), None)
        if lead is None:
            continue
        f = residue[lead]
        if f:
            residue = [x - f * y for x, y in zip(residue, row)]
    return not any(residue)


def _span_coordinates(reduced_rows, vec):
    """Coefficients expressing vec over reduced_rows, or None."""
    residue = [rat(x) for x in vec]
    coeffs = []
    for row in reduced_rows:
        lead = next(c for c, x in enumerate(row) if x)
        f = residue[lead]
        coeffs.append(rat(f))
        if f:
            residue = [x - f * y for x, y in zip(residue, row)]
    if any(residue):
        return None
    return tuple(coeffs)


def solve_affine(rows, rhs):
    """Exact solution set of rows . x = rhs.

    `rows` may be empty only if rhs is empty; the number of unknowns is
    taken from the row length.
    """
    if not rows:
        raise ValueError("no equations: unknown count is undetermined")
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return AffineSubspace.empty()
    point = [0] * ncols
    for r, p in zip(red, pivots):
        point[p] = rat(r[ncols])
    dirs = nullspace([r[:ncols] for r in red], ncols)
    return AffineSubspace(tuple(point), tuple(tuple(d) for d in dirs))


@dataclass(frozen=True)
class Subspace:
    """Subspace of a SuperSpace with a canonical reduced basis."""

    space: object
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    @property
    def rows(self):
        return tuple(v.coords for v in self.basis)

    def contains(self, v):
        if v.space != self.space:
            raise GradingError("vector lives in a different space")
        return _in_row_span(self.rows, v.coords)

    def coordinates_of(self, v):
        """Coefficients of v over this basis, or None if outside."""
        if v.space != self.space:
            raise GradingError("vector lives in a different space")
        return _span_coordinates(self.rows, v.coords)

    def contains_subspace(self, other):
        return all(self.contains(v) for v in other.basis)

    def sum_with(self, other):
        if other.space != self.space:
            raise GradingError("subspaces of different spaces")
        return span_reduce(self.space, self.basis + other.basis)

    def is_graded(self):
        # the reduced basis of a graded subspace is itself homogeneous,
        # because even and odd coordinate positions never mix under
        # row reduction of homogeneous generators
        return all(v.parity is not None for v in self.basis)

    def is_zero(self):
        return not self.basis


def span_reduce(space, vectors):
    """Canonical Subspace spanned by the given SuperVectors."""
    for v in vectors:
        if v.space != space:
            raise GradingError("vector lives in a different space")
    rows = [v.coords for v in vectors]
    reduced, _ = rref(rows)
    return Subspace(space, tuple(SuperVector(space, row) for row in reduced))


def whole_space(space):
    return span_reduce(space, space.basis())
