"""Constructions between the supported axiom systems.

Both constructions verify their input axioms up front and re-check the
target axioms on the output; a violation raises instead of returning a
bad table.
"""

from __future__ import annotations

from fractions import Fraction

from .graded import rat, sign
from .structures import AlgebraDef, TernaryStructure, require_axioms


def lie_to_supertriple(L):
    """Lie superalgebra to Lie supertriple system via [x,y,z] := [[x,y],z]."""
    require_axioms(L, "lie")
    n = L.space.dim
    bt = L.binary.table
    table = []
    for i in range(n):
        plane = []
        for j in range(n):
            xy = bt[i][j]
            row = []
            for k in range(n):
                out = [0] * n
                for m, c in enumerate(xy):
                    if c:
                        ent = bt[m][k]
                        for t in range(n):
                            if ent[t]:
                                out[t] += c * ent[t]
                row.append(tuple(rat(c) for c in out))
            plane.append(tuple(row))
        table.append(tuple(plane))
    out = AlgebraDef("lts(%s)" % L.name, L.space, binary=None,
                     ternary=TernaryStructure(L.space, tuple(table)))
    require_axioms(out, "lie_supertriple")
    return out


def malcev_to_bol(M):
    """Malcev superalgebra to Bol superalgebra.

    Keeps the binary product and installs the ternary product

        {x,y,z} = 1/3 (2[[x,y],z]
                       - (-1)^{x(y+z)} [[y,z],x]
                       - (-1)^{z(x+y)} [[z,x],y]).

    For Lie input the correction terms cancel by the super Jacobi
    identity and {x,y,z} reduces to [[x,y],z].
    """
    require_axioms(M, "malcev")
    n = M.space.dim
    par = M.space.parities
    bt = M.binary.table
    third = Fraction(1, 3)

    def bracket_vb(vec, k):
        out = [0] * n
        for m, c in enumerate(vec):
            if c:
                ent = bt[m][k]
                for t in range(n):
                    if ent[t]:
                        out[t] += c * ent[t]
        return out

    table = []
    for i in range(n):
        plane = []
        for j in range(n):
            row = []
            for k in range(n):
                s1 = sign(par[i] * (par[j] + par[k]))
                s2 = sign(par[k] * (par[i] + par[j]))
                a = bracket_vb(bt[i][j], k)
                b = bracket_vb(bt[j][k], i)
                c = bracket_vb(bt[k][i], j)
                row.append(tuple(rat(third * (2 * x - s1 * y - s2 * z))
                                 for x, y, z in zip(a, b, c)))
            plane.append(tuple(row))
        table.append(tuple(plane))
    out = AlgebraDef("bol(%s)" % M.name, M.space, binary=M.binary,
                     ternary=TernaryStructure(M.space, tuple(table)))
    require_axioms(out, "bol")
    return out
