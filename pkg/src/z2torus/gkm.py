"""Equivariant cohomology via the GKM description, over GF(2).

Classes are tuples of polynomials in GF(2)[r_1..r_n], one per vertex,
with the difference across each edge divisible by the edge's axial
linear form.  Divisibility is encoded linearly: substitute the pivot
variable of alpha(e) by the sum of its remaining variables and require
the two endpoint polynomials to agree.

A polynomial is a frozenset of exponent tuples (coefficients are 0/1).
Monomials are ordered graded-lexicographically, largest first, fixed
once and for all.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb

from .charfunc import CharFunction, GkmGraph, axial_function
from .errors import InputError
from .gf2 import Matrix, Vec, lowest_bit
from .poset import FacePoset

Poly = frozenset  # of exponent tuples


def poly_zero() -> Poly:
    return frozenset()

def poly_one(n: int) -> Poly:
    return frozenset({(0,) * n})

def poly_var(n: int, i: int) -> Poly:
    return frozenset({tuple(1 if j == i else 0 for j in range(n))})

def poly_linear(v: Vec) -> Poly:
    """The linear form with coefficient vector v."""
    return frozenset(tuple(1 if j == i else 0 for j in range(v.n)) for i in v.support())

def poly_add(p: Poly, q: Poly) -> Poly:
    return p ^ q

def poly_mul(p: Poly, q: Poly) -> Poly:
    acc: set[tuple[int, ...]] = set()
    for m1 in p:
        for m2 in q:
            m = tuple(a + b for a, b in zip(m1, m2))
            acc.symmetric_difference_update({m})
    return frozenset(acc)

def poly_pow(p: Poly, e: int, n: int) -> Poly:
    out = poly_one(n)
    for _ in range(e):
        out = poly_mul(out, p)
    return out


def monomials(n: int, k: int) -> list[tuple[int, ...]]:
    """Degree-k monomials in n variables, graded-lex, largest first."""
    if n == 0:
        return [()] if k == 0 else []
    mons = set()
    for picks in combinations_with_replacement(range(n), k):
        m = [0] * n
        for i in picks:
            m[i] += 1
        mons.add(tuple(m))
    return sorted(mons, reverse=True)


def edge_substitution(alpha: Vec):
    """Map encoding divisibility by alpha: pivot variable goes to the sum
    of the other variables in alpha's support; a polynomial is divisible
    by alpha iff it maps to zero."""
    sup = alpha.support()
    pivot = lowest_bit(alpha.bits)
    rest = [j for j in sup if j != pivot]
    n = alpha.n
    images = [poly_var(n, j) for j in range(n)]
    images[pivot] = frozenset(
        tuple(1 if l == j else 0 for l in range(n)) for j in rest
    )

    def apply(p: Poly) -> Poly:
        out: set[tuple[int, ...]] = set()
        for m in p:
            term = poly_one(n)
            for j, e in enumerate(m):
                if e:
                    term = poly_mul(term, poly_pow(images[j], e, n))
            out.symmetric_difference_update(term)
        return frozenset(out)

    return apply


def divisible_by(p: Poly, alpha: Vec) -> bool:
    return not edge_substitution(alpha)(p)


def satisfies_gkm(g: GkmGraph, cls: dict[str, Poly]) -> bool:
    """Does the vertex tuple satisfy every edge divisibility constraint?"""
    for e, (v, w) in g.edges.items():
        if not divisible_by(poly_add(cls[v], cls[w]), g.axial[e]):
            return False
    return True


def equivariant_hilbert(g: GkmGraph, max_deg: int) -> tuple[int, ...]:
    """dims[k] = dimension of the degree-k part of the GKM sheaf space."""
    n = g.n
    V = len(g.vertices)
    vindex = {v: i for i, v in enumerate(g.vertices)}
    dims = []
    for k in range(max_deg + 1):
        mons = monomials(n, k)
        M = len(mons)
        rows: list[int] = []
        for e in sorted(g.edges):
            v, w = g.edges[e]
            sub = edge_substitution(g.axial[e])
            per_target: dict[tuple[int, ...], int] = {}
            for mi, m in enumerate(mons):
                img = sub(frozenset({m}))
                for t in img:
                    bits = per_target.get(t, 0)
                    bits ^= 1 << (vindex[v] * M + mi)
                    bits ^= 1 << (vindex[w] * M + mi)
                    per_target[t] = bits
            rows.extend(b for b in per_target.values() if b)
        rank = Matrix.from_rows(rows, V * M).rank() if rows else 0
        dims.append(V * M - rank)
    return tuple(dims)


def face_ring_hilbert(h: tuple[int, ...], max_deg: int) -> tuple[int, ...]:
    """Graded dimensions of a ring with Hilbert series sum(h_i t^i)/(1-t)^n."""
    n = len(h) - 1
    dims = []
    for k in range(max_deg + 1):
        if n == 0:
            dims.append(h[0] if k == 0 else 0)
            continue
        total = 0
        for i in range(0, min(k, n) + 1):
            total += h[i] * comb(k - i + n - 1, n - 1)
        dims.append(total)
    return tuple(dims)


def thom_restriction(
    p: FacePoset, lam: CharFunction, f: str, graph: GkmGraph | None = None
) -> dict[str, Poly]:
    """Vertex restrictions of the equivariant class carried by a face:
    at a vertex of f, the product of the axial forms of the edges
    leaving f; zero at vertices outside f."""
    if graph is None:
        graph = axial_function(p, lam)
    if f not in p.codims:
        raise InputError(f"unknown face {f!r}")
    k = p.codim(f)
    out: dict[str, Poly] = {}
    for v in graph.vertices:
        if not p.leq(v, f):
            out[v] = poly_zero()
            continue
        transverse = [e for e in graph.edges_at(v) if not p.leq(e, f)]
        if len(transverse) != k:
            raise InputError(
                f"vertex {v} of {f} has {len(transverse)} transverse edges, wanted {k}"
            )
        poly = poly_one(p.n)
        for e in transverse:
            poly = poly_mul(poly, poly_linear(graph.axial[e]))
        out[v] = poly
    return out


@dataclass
class RelationsReport:
    product_failures: list[str] = field(default_factory=list)
    linearity_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.product_failures or self.linearity_failures)


def _join(p: FacePoset, f1: str, f2: str) -> str | None:
    """Unique minimal face containing both, if the meet below is nonempty."""
    cands = p.above(f1) & p.above(f2)
    minimal = [g for g in cands if not any(h != g and p.leq(h, g) for h in cands)]
    if len(minimal) != 1:
        return None
    return minimal[0]


def _meet_components(p: FacePoset, f1: str, f2: str) -> list[str]:
    """Maximal common subfaces (the components of the intersection)."""
    common = p.below(f1) & p.below(f2)
    return sorted(
        (g for g in common if p.above(g) & common == {g}), key=p.face_key
    )


def check_face_ring_relations(p: FacePoset, lam: CharFunction) -> RelationsReport:
    """Verify, vertexwise in the restriction image, the face-ring product
    relation for every pair of faces and linearity of the degree-one part."""
    graph = axial_function(p, lam)
    rep = RelationsReport()
    faces = p.faces()
    thom = {f: thom_restriction(p, lam, f, graph) for f in faces}
    for i, f1 in enumerate(faces):
        for f2 in faces[i:]:
            meet = _meet_components(p, f1, f2)
            join = _join(p, f1, f2) if meet else None
            if meet and join is None:
                rep.product_failures.append(
                    f"faces {f1}, {f2} meet but have no unique minimal common face"
                )
                continue
            for v in graph.vertices:
                lhs = poly_mul(thom[f1][v], thom[f2][v])
                if not meet:
                    rhs = poly_zero()
                else:
                    acc = poly_zero()
                    for g in meet:
                        acc = poly_add(acc, thom[g][v])
                    rhs = poly_mul(thom[join][v], acc)
                if lhs != rhs:
                    rep.product_failures.append(
                        f"tau({f1})*tau({f2}) != tau(join)*sum at vertex {v}"
                    )
    for j in range(p.n):
        t = poly_var(p.n, j)
        for v in graph.vertices:
            acc = poly_zero()
            for F in p.facets():
                if lam.vec(F)[j]:
                    acc = poly_add(acc, thom[F][v])
            if acc != t:
                rep.linearity_failures.append(
                    f"sum_F <r_{j + 1}, lambda(F)> tau(F) != r_{j + 1} at vertex {v}"
                )
    return rep
