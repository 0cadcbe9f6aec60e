"""Pseudo superderivation pairs and enveloping Lie superalgebras.

A pair (P, a) consists of a homogeneous operator and a companion vector
of the same degree.  Pairs flatten to coordinate vectors of length
dim^2 + dim (operator entries row-major, then companion coordinates),
which is the representation used for spans and membership tests.

The enveloping algebra of a Bol algebra B over a pair space H >= IPS(B)
is B + H with

    [x, y]        = (D_{x,y}, x.y)   expressed in H's basis,
    [(P,a), x]    = P(x),
    [x, (P,a)]    = -(-1)^{deg(P) par(x)} P(x),
    [(P,a),(Q,b)] = ([P,Q], P(b) - (-1)^{deg P deg Q} Q(a) - a.b).

Every constructed enveloping algebra is re-checked against the Lie
axioms; violations raise instead of producing a bad algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graded import (GradedMap, GradingError, SuperSpace, SuperVector,
                     graded_commutator, rat, sign)
from .linalg import (AffineSubspace, _in_row_span, _span_coordinates,
                     nullspace, rref, solve_affine, span_reduce)
from .structures import (AlgebraDef, BinaryStructure, CheckReport,
                         StructureError, Witness, _bv, _t_bbv, _t_bvb,
                         _t_vbb, _vb, _vv, require_axioms)


class EnvelopeError(RuntimeError):
    """Internal consistency failure while building an enveloping algebra."""


@dataclass(frozen=True)
class PseudoDerivationPair:
    """Operator plus companion; the degree is the operator's degree."""

    operator: GradedMap
    companion: SuperVector

    def __post_init__(self):
        if self.companion.space != self.operator.space:
            raise GradingError("companion lives in a different space")
        if self.companion.parity_or(self.degree) != self.degree:
            raise GradingError("companion parity differs from operator degree")

    @property
    def space(self):
        return self.operator.space

    @property
    def degree(self):
        return self.operator.degree

    def flatten(self):
        flat = [x for row in self.operator.matrix for x in row]
        return tuple(flat) + self.companion.coords

    @classmethod
    def from_flat(cls, space, coords):
        n = space.dim
        if len(coords) != n * n + n:
            raise GradingError("flattened pair must have length %d" % (n * n + n))
        par = space.parities
        degrees = set()
        for pos in range(n * n):
            if coords[pos]:
                degrees.add((par[pos // n] + par[pos % n]) % 2)
        for m in range(n):
            if coords[n * n + m]:
                degrees.add(par[m])
        if len(degrees) > 1:
            raise GradingError("flattened pair mixes degrees")
        degree = degrees.pop() if degrees else 0
        rows = [coords[i * n:(i + 1) * n] for i in range(n)]
        return cls(GradedMap.from_rows(space, degree, rows),
                   space.vector(coords[n * n:]))

    def __str__(self):
        return "(%s, %s)" % (self._op_str(), self.companion)

    def _op_str(self):
        n = self.space.dim
        parts = []
        for j in range(n):
            col = [self.operator.matrix[i][j] for i in range(n)]
            if any(col):
                parts.append("%s->%s" % (self.space.labels[j],
                                         SuperVector(self.space, tuple(col))))
        return "{" + ", ".join(parts) + "}" if parts else "0"


def inner_pair(B, x, y):
    """(D_{x,y}, x.y) where D_{x,y}(z) = [x,y,z]."""
    if x.space != B.space or y.space != B.space:
        raise GradingError("arguments live outside the algebra")
    deg = (x.parity_or(0) + y.parity_or(0)) % 2
    op = GradedMap.from_action(B.space, deg, lambda z: B.triple(x, y, z))
    return PseudoDerivationPair(op, B.product(x, y))


def pair_bracket(B, p, q):
    """([P,Q], P(b) - (-1)^{pq} Q(a) - a.b) for pairs p=(P,a), q=(Q,b)."""
    s = sign(p.degree * q.degree)
    comp = p.operator(q.companion) - s * q.operator(p.companion) \
        - B.product(p.companion, q.companion)
    return PseudoDerivationPair(graded_commutator(p.operator, q.operator), comp)


def _op_col(matrix, j, n):
    return tuple(matrix[i][j] for i in range(n))


def check_pseudo(B, pair):
    """Pointwise verification that the pair derives both products.

    derives-triple is the Leibniz-type rule on the ternary bracket
    (companion-free); derives-product is the rule on the binary product
    involving the companion.  Defects are RHS - LHS.
    """
    if pair.space != B.space:
        raise GradingError("pair lives outside the algebra")
    n = B.space.dim
    par = B.space.parities
    lab = B.space.labels
    tt = B.ternary.table
    bt = B.binary.table
    M = pair.operator.matrix
    r = pair.degree
    a = pair.companion.coords
    witnesses = []

    def apply_op(vec):
        out = [0] * n
        for m, c in enumerate(vec):
            if c:
                for t in range(n):
                    if M[t][m]:
                        out[t] += c * M[t][m]
        return out

    for i in range(n):
        pi = par[i]
        for j in range(n):
            pj = par[j]
            for k in range(n):
                acc = apply_op(tt[i][j][k])
                rhs = [0] * n
                for t, c in enumerate(_t_vbb(tt, _op_col(M, i, n), j, k, n)):
                    rhs[t] += c
                s = sign(r * pi)
                for t, c in enumerate(_t_bvb(tt, i, _op_col(M, j, n), k, n)):
                    rhs[t] += s * c
                s = sign(r * (pi + pj))
                for t, c in enumerate(_t_bbv(tt, i, j, _op_col(M, k, n), n)):
                    rhs[t] += s * c
                defect = tuple(rat(x - y) for x, y in zip(rhs, acc))
                if any(defect):
                    witnesses.append(Witness("derives-triple", (lab[i], lab[j], lab[k]),
                                             SuperVector(B.space, defect)))

    for i in range(n):
        pi = par[i]
        for j in range(n):
            pj = par[j]
            lhs = apply_op(bt[i][j])
            rhs = list(_bv(bt, _op_col(M, i, n), j, n))
            s = sign(r * pi)
            for t, c in enumerate(_vb(bt, i, _op_col(M, j, n), n)):
                rhs[t] += s * c
            s = sign(r * (pi + pj))
            for t, c in enumerate(_t_bbv(tt, i, j, a, n)):
                rhs[t] += s * c
            for t, c in enumerate(_vv(bt, a, bt[i][j], n)):
                rhs[t] += c
            defect = tuple(rat(x - y) for x, y in zip(rhs, lhs))
            if any(defect):
                witnesses.append(Witness("derives-product", (lab[i], lab[j]),
                                         SuperVector(B.space, defect)))
    subject = "pair of degree %d on %s" % (r, B.name)
    return CheckReport(subject, "pseudo", not witnesses, tuple(witnesses))


def companion_space(B, P):
    """All companions a making (P, a) a pseudo superderivation pair.

    Returns the exact affine solution set of the product rule, which is
    empty when P fails the (companion-free) triple rule.  Coordinates
    are over B's basis.
    """
    if P.space != B.space:
        raise GradingError("operator lives outside the algebra")
    n = B.space.dim
    par = B.space.parities
    r = P.degree
    probe = PseudoDerivationPair(P, B.space.zero())
    triple_ok = not any(w.axiom == "derives-triple"
                        for w in check_pseudo(B, probe).witnesses)
    if not triple_ok:
        return AffineSubspace.empty()

    tt = B.ternary.table
    bt = B.binary.table
    M = P.matrix
    rows, rhs = [], []
    for m in range(n):
        if par[m] != r:
            row = [0] * n
            row[m] = 1
            rows.append(row)
            rhs.append(0)
    for i in range(n):
        pi = par[i]
        s1 = sign(r * pi)
        for j in range(n):
            pj = par[j]
            s2 = sign(r * (pi + pj))
            w = bt[i][j]
            lhs = [0] * n
            for m, c in enumerate(w):
                if c:
                    for t in range(n):
                        if M[t][m]:
                            lhs[t] += c * M[t][m]
            known = list(_bv(bt, _op_col(M, i, n), j, n))
            for t, c in enumerate(_vb(bt, i, _op_col(M, j, n), n)):
                known[t] += s1 * c
            mw = [_vb(bt, m, w, n) for m in range(n)]
            for t in range(n):
                coeff = [rat(s2 * tt[i][j][m][t] + mw[m][t]) for m in range(n)]
                rows.append(coeff)
                rhs.append(rat(lhs[t] - known[t]))
    return solve_affine(rows, rhs)


@dataclass(frozen=True)
class PairSpace:
    """Span of pseudo superderivation pairs, closed under pair_bracket.

    `basis` holds homogeneous pairs recovered from the reduced flattened
    rows, so equality of PairSpaces is equality of spans.
    """

    algebra: AlgebraDef
    basis: tuple
    rows: tuple

    @classmethod
    def from_pairs(cls, algebra, pairs, verify_closure=True):
        for p in pairs:
            if p.space != algebra.space:
                raise GradingError("pair lives outside the algebra")
        reduced, _ = rref([p.flatten() for p in pairs])
        basis = tuple(PseudoDerivationPair.from_flat(algebra.space, row) for row in reduced)
        out = cls(algebra, basis, tuple(reduced))
        if verify_closure:
            for p in basis:
                for q in basis:
                    br = pair_bracket(algebra, p, q)
                    if not out.contains(br):
                        raise EnvelopeError(
                            "span of pairs is not closed under the bracket: [%s, %s]" % (p, q))
        return out

    @property
    def dim(self):
        return len(self.basis)

    def degree_dims(self):
        d0 = sum(1 for p in self.basis if p.degree == 0)
        return (d0, len(self.basis) - d0)

    def contains(self, pair):
        return _in_row_span(self.rows, pair.flatten())

    def coordinates_of(self, pair):
        return _span_coordinates(self.rows, pair.flatten())

    def contains_space(self, other):
        return all(self.contains(p) for p in other.basis)


def ips_space(B, K=None):
    """Span of the inner pairs (D_{x,y}, x.y).

    With K given (a graded subspace), one leg runs over K's basis in
    both orders; the span is the same either way by skew-symmetry.
    """
    basis = B.space.basis()
    pairs = []
    if K is None:
        for x in basis:
            for y in basis:
                pairs.append(inner_pair(B, x, y))
    else:
        if K.space != B.space:
            raise GradingError("K is not a subspace of B")
        if not K.is_graded():
            raise GradingError("K is not graded")
        for x in basis:
            for k in K.basis:
                pairs.append(inner_pair(B, x, k))
                pairs.append(inner_pair(B, k, x))
    return PairSpace.from_pairs(B, pairs)


def ps_space(B):
    """Full solution space of the two derivation rules, per degree.

    Unknowns are the operator entries plus the companion coordinates;
    both rules are linear in them, so the space is an exact nullspace.
    Contains ips_space(B); the containment is verified.
    """
    n = B.space.dim
    par = B.space.parities
    tt = B.ternary.table
    bt = B.binary.table
    nun = n * n + n

    def op_idx(t, m):
        return t * n + m

    all_pairs = []
    for r in (0, 1):
        rows = []
        # block structure of a degree-r operator, parity of the companion
        for t in range(n):
            for m in range(n):
                if par[t] != (par[m] + r) % 2:
                    row = [0] * nun
                    row[op_idx(t, m)] = 1
                    rows.append(row)
        for m in range(n):
            if par[m] != r:
                row = [0] * nun
                row[n * n + m] = 1
                rows.append(row)
        # triple rule, LHS - RHS = 0
        for i in range(n):
            pi = par[i]
            s1 = sign(r * pi)
            for j in range(n):
                pj = par[j]
                s2 = sign(r * (pi + pj))
                for k in range(n):
                    vec = tt[i][j][k]
                    for t in range(n):
                        row = [0] * nun
                        for m in range(n):
                            if vec[m]:
                                row[op_idx(t, m)] += vec[m]
                            if tt[m][j][k][t]:
                                row[op_idx(m, i)] -= tt[m][j][k][t]
                            if tt[i][m][k][t]:
                                row[op_idx(m, j)] -= s1 * tt[i][m][k][t]
                            if tt[i][j][m][t]:
                                row[op_idx(m, k)] -= s2 * tt[i][j][m][t]
                        if any(row):
                            rows.append(row)
        # product rule, LHS - RHS = 0
        for i in range(n):
            pi = par[i]
            s1 = sign(r * pi)
            for j in range(n):
                pj = par[j]
                s2 = sign(r * (pi + pj))
                w = bt[i][j]
                mw = [_vb(bt, m, w, n) for m in range(n)]
                for t in range(n):
                    row = [0] * nun
                    for m in range(n):
                        if w[m]:
                            row[op_idx(t, m)] += w[m]
                        if bt[m][j][t]:
                            row[op_idx(m, i)] -= bt[m][j][t]
                        if bt[i][m][t]:
                            row[op_idx(m, j)] -= s1 * bt[i][m][t]
                        companion = s2 * tt[i][j][m][t] + mw[m][t]
                        if companion:
                            row[n * n + m] -= companion
                    if any(row):
                        rows.append(row)
        for vec in nullspace(rows, nun):
            all_pairs.append(PseudoDerivationPair.from_flat(B.space, tuple(vec)))
    out = PairSpace.from_pairs(B, all_pairs)
    if not out.contains_space(ips_space(B)):
        raise EnvelopeError("inner pairs escaped the pseudo derivation space")
    return out


@dataclass(frozen=True)
class EnvelopingLieSuperalgebra:
    base: AlgebraDef
    pairs: PairSpace
    lie: AlgebraDef

    @property
    def base_dim(self):
        return self.base.space.dim

    @property
    def dim(self):
        return self.lie.space.dim

    def embed_base(self, v):
        if v.space != self.base.space:
            raise GradingError("vector lives outside the base algebra")
        return SuperVector(self.lie.space, v.coords + (0,) * self.pairs.dim)


def _fresh_labels(taken, count, stem="h"):
    labels = []
    i = 1
    while len(labels) < count:
        cand = "%s%d" % (stem, i)
        while cand in taken:
            cand += "'"
        labels.append(cand)
        taken = taken + (cand,)
        i += 1
    return tuple(labels)


def enveloping(B, H=None):
    """Lie superalgebra B + H for a pair space H containing the inner pairs.

    H defaults to ips_space(B) (the standard enveloping algebra); pass
    ps_space(B) for the maximal one.  The result is re-checked against
    the Lie axioms.
    """
    require_axioms(B, "bol")
    ips = ips_space(B)
    if H is None:
        H = ips
    else:
        if H.algebra != B:
            raise GradingError("H was built over a different algebra")
        if not H.contains_space(ips):
            raise EnvelopeError("H does not contain the inner pairs")
    nb = B.space.dim
    nh = H.dim
    parities = B.space.parities + tuple(p.degree for p in H.basis)
    labels = B.space.labels + _fresh_labels(B.space.labels, nh)
    space = SuperSpace(parities, labels)
    dim = nb + nh
    zero = (0,) * dim

    def in_h(pair, what):
        coords = H.coordinates_of(pair)
        if coords is None:
            raise EnvelopeError("%s does not lie in H" % what)
        return (0,) * nb + coords

    table = [[zero] * dim for _ in range(dim)]
    bbasis = B.space.basis()
    for i in range(nb):
        for j in range(nb):
            table[i][j] = in_h(inner_pair(B, bbasis[i], bbasis[j]),
                               "inner pair (%s, %s)" % (space.labels[i], space.labels[j]))
    for m, p in enumerate(H.basis):
        M = p.operator.matrix
        for j in range(nb):
            col = tuple(M[t][j] for t in range(nb))
            table[nb + m][j] = col + (0,) * nh
            s = -sign(p.degree * B.space.parities[j])
            table[j][nb + m] = tuple(s * c for c in col) + (0,) * nh
    for m, p in enumerate(H.basis):
        for l, q in enumerate(H.basis):
            table[nb + m][nb + l] = in_h(pair_bracket(B, p, q),
                                         "bracket of pair basis (%d, %d)" % (m, l))

    lie = AlgebraDef("env(%s)" % B.name, space,
                     binary=BinaryStructure(space, tuple(tuple(row) for row in table)))
    require_axioms(lie, "lie")
    return EnvelopingLieSuperalgebra(B, H, lie)


def ideal_envelope(B, K, env=None):
    """Ideal K + IPS(B, K) of the standard enveloping algebra.

    K must be an ideal of B.  The bracket containment [K', L] <= K' is
    verified exactly; failure raises.
    """
    from .structures import IDEAL, classify_subspace
    if classify_subspace(B, K) != IDEAL:
        raise StructureError("K is not an ideal of %s" % B.name)
    if env is None:
        env = enveloping(B)
    nh = env.pairs.dim
    vectors = [env.embed_base(v) for v in K.basis]
    for pair in ips_space(B, K).basis:
        coords = env.pairs.coordinates_of(pair)
        if coords is None:
            raise EnvelopeError("inner pair over K escaped IPS(B, B)")
        vectors.append(SuperVector(env.lie.space, (0,) * env.base_dim + coords))
    combined = span_reduce(env.lie.space, vectors)
    for kappa in combined.basis:
        for x in env.lie.space.basis():
            if not combined.contains(env.lie.product(kappa, x)):
                raise EnvelopeError("combined subspace is not an ideal of the envelope")
    return combined
