"""Structure-constant algebra definitions and axiom checking.

An algebra is given by the products of basis vectors.  Checking an
identity that quantifies over homogeneous elements then reduces, by
multilinearity, to evaluating it on all tuples of basis vectors; the
checkers below do exactly that, in lexicographic tuple order, and report
every failing tuple together with its defect.

Defect conventions:

* skew axioms report x*y + (-1)^{xy} y*x,
* cyclic-sum axioms (super Jacobi, ternary Jacobi) report the sum,
* equational axioms (Malcev, Nambu, product rule, morphism) report
  RHS - LHS.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

from .graded import GradingError, SuperVector, rat, sign
from .linalg import Subspace, nullspace, span_reduce

KINDS = ("lie", "malcev", "supertriple", "lie_supertriple", "bol")

# CLI spelling for the Lie supertriple kind
KIND_ALIASES = {"lts": "lie_supertriple"}


class StructureError(ValueError):
    """Malformed or contradictory structure constants."""


class AxiomError(ValueError):
    """An operation required an axiom system that the input fails."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


def _norm_table_entry(space, coords, parity, what):
    coords = tuple(rat(c) for c in coords)
    if len(coords) != space.dim:
        raise StructureError("%s: expected %d coordinates" % (what, space.dim))
    for t, c in enumerate(coords):
        if c and space.parities[t] != parity:
            raise GradingError(
                "%s: output has a component on %s of wrong parity"
                % (what, space.labels[t]))
    return coords


@dataclass(frozen=True)
class BinaryStructure:
    """table[i][j] holds the coordinates of e_i * e_j."""

    space: object
    table: tuple

    def __post_init__(self):
        n = self.space.dim
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise StructureError("binary table must be %d x %d" % (n, n))
        par = self.space.parities
        for i in range(n):
            for j in range(n):
                _norm_table_entry(self.space, self.table[i][j], (par[i] + par[j]) % 2,
                                  "product [%s,%s]" % (self.space.labels[i], self.space.labels[j]))

    @classmethod
    def from_products(cls, space, products):
        """Build from listed products, completing by super skew-symmetry.

        `products` maps index pairs (i, j) to coordinate sequences.  The
        skew-implied counterpart of every listing is filled in; explicit
        contradictions (including a nonzero even square) raise.
        """
        n = space.dim
        par = space.parities
        table = [[None] * n for _ in range(n)]
        for (i, j), coords in products.items():
            table[i][j] = tuple(rat(c) for c in coords)
        for (i, j), coords in sorted(products.items()):
            s = sign(par[i] * par[j])
            implied = tuple(-s * c for c in coords)
            if i == j and any(c != im for c, im in zip(coords, implied)):
                raise StructureError(
                    "[%s,%s] must vanish by skew-symmetry" % (space.labels[i], space.labels[j]))
            if table[j][i] is None:
                table[j][i] = implied
            elif (j, i) in products and tuple(table[j][i]) != implied and (i, j) != (j, i):
                raise StructureError(
                    "[%s,%s] contradicts [%s,%s] under skew-symmetry"
                    % (space.labels[j], space.labels[i], space.labels[i], space.labels[j]))
        zero = (0,) * n
        return cls(space, tuple(tuple(row[j] if row[j] is not None else zero
                                      for j in range(n)) for row in table))

    def product(self, i, j):
        return SuperVector(self.space, self.table[i][j])

    def eval(self, x, y):
        n = self.space.dim
        out = [0] * n
        for i, a in enumerate(x.coords):
            if not a:
                continue
            for j, b in enumerate(y.coords):
                if not b:
                    continue
                entry = self.table[i][j]
                ab = a * b
                for t in range(n):
                    if entry[t]:
                        out[t] += ab * entry[t]
        return SuperVector(self.space, tuple(rat(c) for c in out))


@dataclass(frozen=True)
class TernaryStructure:
    """table[i][j][k] holds the coordinates of [e_i, e_j, e_k]."""

    space: object
    table: tuple

    def __post_init__(self):
        n = self.space.dim
        if len(self.table) != n or any(len(p) != n for p in self.table)\
                or any(len(r) != n for p in self.table for r in p):
            raise StructureError("ternary table must be %d x %d x %d" % (n, n, n))
        par = self.space.parities
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    _norm_table_entry(
                        self.space, self.table[i][j][k], (par[i] + par[j] + par[k]) % 2,
                        "product [%s,%s,%s]" % (self.space.labels[i],
                                                self.space.labels[j], self.space.labels[k]))

    @classmethod
    def from_products(cls, space, products):
        """Complete listed triple products by skew-symmetry in the first
        two slots.  Ternary Jacobi consequences are NOT filled in; they
        are the checker's business."""
        n = space.dim
        par = space.parities
        table = [[[None] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), coords in products.items():
            table[i][j][k] = tuple(rat(c) for c in coords)
        for (i, j, k), coords in sorted(products.items()):
            s = sign(par[i] * par[j])
            implied = tuple(-s * c for c in coords)
            if i == j and any(c != im for c, im in zip(coords, implied)):
                raise StructureError(
                    "[%s,%s,%s] must vanish by skew-symmetry"
                    % (space.labels[i], space.labels[j], space.labels[k]))
            if table[j][i][k] is None:
                table[j][i][k] = implied
            elif (j, i, k) in products and tuple(table[j][i][k]) != implied:
                raise StructureError(
                    "[%s,%s,%s] contradicts [%s,%s,%s] under skew-symmetry"
                    % (space.labels[j], space.labels[i], space.labels[k],
                       space.labels[i], space.labels[j], space.labels[k]))
        zero = (0,) * n
        return cls(space, tuple(tuple(tuple(table[i][j][k] if table[i][j][k] is not None else zero
                                            for k in range(n))
                                      for j in range(n)) for i in range(n)))

    def product(self, i, j, k):
        return SuperVector(self.space, self.table[i][j][k])

    def eval(self, x, y, z):
        n = self.space.dim
        out = [0] * n
        for i, a in enumerate(x.coords):
            if not a:
                continue
            for j, b in enumerate(y.coords):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(z.coords):
                    if not c:
                        continue
                    entry = self.table[i][j][k]
                    abc = ab * c
                    for t in range(n):
                        if entry[t]:
                            out[t] += abc * entry[t]
        return SuperVector(self.space, tuple(rat(c) for c in out))


@dataclass(frozen=True)
class AlgebraDef:
    """A named algebra: a superspace plus binary and/or ternary constants."""

    name: str
    space: object
    binary: BinaryStructure | None = None
    ternary: TernaryStructure | None = None

    def __post_init__(self):
        if self.binary is None and self.ternary is None:
            raise StructureError("an algebra needs at least one structure")
        for s in (self.binary, self.ternary):
            if s is not None and s.space != self.space:
                raise StructureError("structure lives on a different space")

    def renamed(self, name):
        return dataclasses.replace(self, name=name)

    def product(self, x, y):
        if self.binary is None:
            raise StructureError("%s has no binary product" % self.name)
        return self.binary.eval(x, y)

    def triple(self, x, y, z):
        if self.ternary is None:
            raise StructureError("%s has no ternary product" % self.name)
        return self.ternary.eval(x, y, z)


def eval_binary(A, x, y):
    """Bilinear extension of A's binary structure constants."""
    return A.product(x, y)


def eval_ternary(A, x, y, z):
    """Trilinear extension of A's ternary structure constants."""
    return A.triple(x, y, z)


@dataclass(frozen=True)
class Witness:
    axiom: str
    at: tuple
    defect: object

    def __str__(self):
        return "%s at (%s): defect %s" % (self.axiom, ", ".join(self.at), self.defect)


@dataclass(frozen=True)
class CheckReport:
    subject: str
    kind: str
    passed: bool
    witnesses: tuple

    @property
    def first_failure(self):
        return self.witnesses[0] if self.witnesses else None

    def __str__(self):
        head = "%s: %s [%s]" % (self.subject, "PASS" if self.passed else "FAIL", self.kind)
        return "\n".join([head] + ["  " + str(w) for w in self.witnesses])


# ---------------------------------------------------------------------------
# raw-table contractions; vec arguments are coordinate sequences


def _bv(table, vec, k, n):
    # [vec, e_k]
    out = [0] * n
    for m, c in enumerate(vec):
        if c:
            row = table[m][k]
            for t in range(n):
                if row[t]:
                    out[t] += c * row[t]
    return out


def _vb(table, i, vec, n):
    # [e_i, vec]
    out = [0] * n
    for m, c in enumerate(vec):
        if c:
            row = table[i][m]
            for t in range(n):
                if row[t]:
                    out[t] += c * row[t]
    return out


def _vv(table, u, v, n):
    # [u, v]
    out = [0] * n
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if b:
                row = table[i][j]
                ab = a * b
                for t in range(n):
                    if row[t]:
                        out[t] += ab * row[t]
    return out


def _t_bbv(table, i, j, vec, n):
    # [e_i, e_j, vec]
    out = [0] * n
    for m, c in enumerate(vec):
        if c:
            row = table[i][j][m]
            for t in range(n):
                if row[t]:
                    out[t] += c * row[t]
    return out


def _t_bvb(table, i, vec, k, n):
    # [e_i, vec, e_k]
    out = [0] * n
    for m, c in enumerate(vec):
        if c:
            row = table[i][m][k]
            for t in range(n):
                if row[t]:
                    out[t] += c * row[t]
    return out


def _t_vbb(table, vec, j, k, n):
    # [vec, e_j, e_k]
    out = [0] * n
    for m, c in enumerate(vec):
        if c:
            row = table[m][j][k]
            for t in range(n):
                if row[t]:
                    out[t] += c * row[t]
    return out


def _addto(acc, vec, s):
    if s == 1:
        for t, c in enumerate(vec):
            if c:
                acc[t] += c
    else:
        for t, c in enumerate(vec):
            if c:
                acc[t] -= c
    return acc


# ---------------------------------------------------------------------------
# axiom sweeps; each yields Witness objects in lexicographic tuple order


def _sweep_binary_skew(space, table, axiom="skew"):
    n, par, lab = space.dim, space.parities, space.labels
    for i in range(n):
        for j in range(n):
            s = sign(par[i] * par[j])
            defect = tuple(rat(a + s * b) for a, b in zip(table[i][j], table[j][i]))
            if any(defect):
                yield Witness(axiom, (lab[i], lab[j]), SuperVector(space, defect))


def _sweep_super_jacobi(space, table):
    n, par, lab = space.dim, space.parities, space.labels
    for i in range(n):
        pi = par[i]
        for j in range(n):
            pj = par[j]
            for k in range(n):
                pk = par[k]
                acc = [0] * n
                _addto(acc, _bv(table, table[i][j], k, n), 1)
                _addto(acc, _bv(table, table[j][k], i, n), sign(pi * (pj + pk)))
                _addto(acc, _bv(table, table[k][i], j, n), sign(pk * (pi + pj)))
                if any(acc):
                    yield Witness("jacobi", (lab[i], lab[j], lab[k]),
                                  SuperVector(space, tuple(rat(c) for c in acc)))


def _sweep_malcev(space, table):
    n, par, lab = space.dim, space.parities, space.labels
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    pi, pj, pk, pl = par[i], par[j], par[k], par[l]
                    # RHS - LHS of the Malcev identity
                    acc = [0] * n
                    _addto(acc, _vv(table, table[i][k], table[j][l], n), sign(pj * pk))
                    _addto(acc, _bv(table, _bv(table, table[i][j], k, n), l, n), -1)
                    _addto(acc, _vb(table, i, _bv(table, table[j][k], l, n), n), 1)
                    _addto(acc, _bv(table, _vb(table, i, table[k][l], n), j, n),
                           sign(pj * (pk + pl)))
                    _addto(acc, _bv(table, _bv(table, table[i][l], j, n), k, n),
                           sign(pl * (pj + pk)))
                    if any(acc):
                        yield Witness("malcev", (lab[i], lab[j], lab[k], lab[l]),
                                      SuperVector(space, tuple(rat(c) for c in acc)))


def _sweep_ternary_skew(space, table):
    n, par, lab = space.dim, space.parities, space.labels
    for i in range(n):
        for j in range(n):
            s = sign(par[i] * par[j])
            for k in range(n):
                defect = tuple(rat(a + s * b) for a, b in zip(table[i][j][k], table[j][i][k]))
                if any(defect):
                    yield Witness("triple-skew", (lab[i], lab[j], lab[k]),
                                  SuperVector(space, defect))


def _sweep_ternary_jacobi(space, table):
    n, par, lab = space.dim, space.parities, space.labels
    for i in range(n):
        pi = par[i]
        for j in range(n):
            pj = par[j]
            for k in range(n):
                pk = par[k]
                s1 = sign(pi * (pj + pk))
                s2 = sign(pk * (pi + pj))
                acc = list(table[i][j][k])
                _addto(acc, table[j][k][i], s1)
                _addto(acc, table[k][i][j], s2)
                if any(acc):
                    yield Witness("triple-jacobi", (lab[i], lab[j], lab[k]),
                                  SuperVector(space, tuple(rat(c) for c in acc)))


def _sweep_nambu(space, table):
    n, par, lab = space.dim, space.parities, space.labels
    for i in range(n):
        for j in range(n):
            pij = par[i] + par[j]
            for u in range(n):
                pu = par[u]
                for v in range(n):
                    puv = pu + par[v]
                    for w in range(n):
                        acc = [0] * n
                        _addto(acc, _t_vbb(table, table[i][j][u], v, w, n), 1)
                        _addto(acc, _t_bvb(table, u, table[i][j][v], w, n), sign(pu * pij))
                        _addto(acc, _t_bbv(table, u, v, table[i][j][w], n), sign(pij * puv))
                        _addto(acc, _t_bbv(table, i, j, table[u][v][w], n), -1)
                        if any(acc):
                            yield Witness("nambu", (lab[i], lab[j], lab[u], lab[v], lab[w]),
                                          SuperVector(space, tuple(rat(c) for c in acc)))


def _sweep_product_rule(space, bin_table, ter_table):
    # the ternary bracket [x,y,.] acts on a binary product u.v the way a
    # pseudo superderivation with companion x.y does
    n, par, lab = space.dim, space.parities, space.labels
    for i in range(n):
        for j in range(n):
            pij = par[i] + par[j]
            xy = bin_table[i][j]
            for u in range(n):
                pu = par[u]
                for v in range(n):
                    puv = pu + par[v]
                    acc = [0] * n
                    _addto(acc, _vb(bin_table, u, ter_table[i][j][v], n), sign(pu * pij))
                    _addto(acc, _bv(bin_table, ter_table[i][j][u], v, n), 1)
                    _addto(acc, _t_bbv(ter_table, u, v, xy, n), sign(pij * puv))
                    _addto(acc, _vv(bin_table, xy, bin_table[u][v], n), 1)
                    _addto(acc, _t_bbv(ter_table, i, j, bin_table[u][v], n), -1)
                    if any(acc):
                        yield Witness("product-rule", (lab[i], lab[j], lab[u], lab[v]),
                                      SuperVector(space, tuple(rat(c) for c in acc)))


def _require(A, binary=False, ternary=False):
    if binary and A.binary is None:
        raise StructureError("%s has no binary structure" % A.name)
    if ternary and A.ternary is None:
        raise StructureError("%s has no ternary structure" % A.name)


def check_axioms(A, kind):
    """Verify the axiom system `kind` on all basis tuples of A.

    kind is one of lie, malcev, supertriple, lie_supertriple (alias lts),
    bol.  Returns a CheckReport listing every failing tuple.
    """
    kind = KIND_ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise ValueError("unknown axiom system %r" % (kind,))
    space = A.space
    witnesses = []
    if kind == "lie":
        _require(A, binary=True)
        witnesses += _sweep_binary_skew(space, A.binary.table)
        witnesses += _sweep_super_jacobi(space, A.binary.table)
    elif kind == "malcev":
        _require(A, binary=True)
        witnesses += _sweep_binary_skew(space, A.binary.table)
        witnesses += _sweep_malcev(space, A.binary.table)
    elif kind == "supertriple":
        _require(A, ternary=True)
        witnesses += _sweep_ternary_skew(space, A.ternary.table)
        witnesses += _sweep_ternary_jacobi(space, A.ternary.table)
    elif kind == "lie_supertriple":
        _require(A, ternary=True)
        witnesses += _sweep_ternary_skew(space, A.ternary.table)
        witnesses += _sweep_ternary_jacobi(space, A.ternary.table)
        witnesses += _sweep_nambu(space, A.ternary.table)
    else:
        _require(A, binary=True, ternary=True)
        witnesses += _sweep_binary_skew(space, A.binary.table)
        witnesses += _sweep_ternary_skew(space, A.ternary.table)
        witnesses += _sweep_ternary_jacobi(space, A.ternary.table)
        witnesses += _sweep_nambu(space, A.ternary.table)
        witnesses += _sweep_product_rule(space, A.binary.table, A.ternary.table)
    return CheckReport(A.name, kind, not witnesses, tuple(witnesses))


def require_axioms(A, kind):
    """check_axioms, raising AxiomError on failure."""
    report = check_axioms(A, kind)
    if not report.passed:
        raise AxiomError("%s fails the %s axioms (first: %s)"
                         % (A.name, report.kind, report.first_failure), report)
    return report


def center(A):
    """Elements x with x*B = 0 and [x,B,B] = [B,x,B] = [B,B,x] = 0.

    Every slot is imposed directly; for well-formed algebras the extra
    slots are redundant but harmless.  Works with whichever structures
    are present.
    """
    n = A.space.dim
    rows = []
    if A.binary is not None:
        bt = A.binary.table
        for j in range(n):
            for t in range(n):
                rows.append([bt[m][j][t] for m in range(n)])
                rows.append([bt[j][m][t] for m in range(n)])
    if A.ternary is not None:
        tt = A.ternary.table
        for j in range(n):
            for k in range(n):
                for t in range(n):
                    rows.append([tt[m][j][k][t] for m in range(n)])
                    rows.append([tt[j][m][k][t] for m in range(n)])
                    rows.append([tt[j][k][m][t] for m in range(n)])
    basis = nullspace(rows, n)
    return span_reduce(A.space, [SuperVector(A.space, tuple(b)) for b in basis])


NOT_CLOSED = "not_closed"
SUBSUPERALGEBRA = "subsuperalgebra"
INVARIANT = "invariant"
IDEAL = "ideal"


def classify_subspace(A, V):
    """Strongest of: not_closed < subsuperalgebra < invariant < ideal.

    V must be graded.  invariant means [B, B, V] <= V on top of closure;
    ideal additionally needs B*V <= V.
    """
    if not isinstance(V, Subspace) or V.space != A.space:
        raise GradingError("V must be a subspace of A's space")
    if not V.is_graded():
        raise GradingError("subspace is not graded")
    vs = V.basis
    basis = A.space.basis()

    closed = True
    if A.binary is not None:
        closed = all(V.contains(A.binary.eval(v, w)) for v in vs for w in vs)
    if closed and A.ternary is not None:
        closed = all(V.contains(A.ternary.eval(u, v, w))
                     for u in vs for v in vs for w in vs)
    if not closed:
        return NOT_CLOSED

    invariant = True
    if A.ternary is not None:
        invariant = all(V.contains(A.ternary.eval(x, y, v))
                        for x in basis for y in basis for v in vs)
    if not invariant:
        return SUBSUPERALGEBRA

    ideal = True
    if A.binary is not None:
        ideal = all(V.contains(A.binary.eval(x, v)) for x in basis for v in vs)
    return IDEAL if ideal else INVARIANT


def check_morphism(f, A, B):
    """Does the even map f intertwine the structures of A and B?

    A's and B's spaces must have identical parity signatures; f is read
    as a map from A's space to B's via coordinates.
    """
    if f.degree != 0:
        raise GradingError("a morphism must be even")
    if f.space != A.space:
        raise GradingError("f is not defined on A's space")
    if A.space.parities != B.space.parities:
        raise GradingError("A and B have different parity signatures")
    if (A.binary is None) != (B.binary is None) or (A.ternary is None) != (B.ternary is None):
        raise StructureError("A and B carry different structure kinds")

    def push(v):
        return SuperVector(B.space, f(v).coords)

    lab = A.space.labels
    basis = A.space.basis()
    witnesses = []
    if A.binary is not None:
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                defect = B.binary.eval(push(x), push(y)) - push(A.binary.eval(x, y))
                if not defect.is_zero():
                    witnesses.append(Witness("binary-hom", (lab[i], lab[j]), defect))
    if A.ternary is not None:
        for i, x in enumerate(basis):
            for j, y in enumerate(basis):
                for k, z in enumerate(basis):
                    defect = B.ternary.eval(push(x), push(y), push(z)) \
                        - push(A.ternary.eval(x, y, z))
                    if not defect.is_zero():
                        witnesses.append(Witness("ternary-hom", (lab[i], lab[j], lab[k]), defect))
    return CheckReport("%s -> %s" % (A.name, B.name), "morphism", not witnesses, tuple(witnesses))
