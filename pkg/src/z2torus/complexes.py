"""Triangulations labelled by carrier faces, and mod-2 homology.

A carrier complex is a finite simplicial complex together with a map
sending each simplex to the face of Q whose relative interior contains
the simplex's interior.  Instances either supply one (a genuine
triangulation of Q) or the engine substitutes the coned order complex,
in which case verdicts are properties of that surrogate model.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gf2 import Matrix, compose_is_zero
from .poset import FacePoset

Simplex = tuple[int, ...]


class CarrierComplex:
    """Simplicial complex with a carrier face label on every simplex."""

    def __init__(
        self,
        poset: FacePoset,
        n_points: int,
        simplices: dict[Simplex, str],
        vertex_labels: list[str] | None = None,
    ):
        self.poset = poset
        self.n_points = n_points
        self.simplices = dict(simplices)
        self.vertex_labels = vertex_labels
        for sx in simplices:
            if list(sx) != sorted(set(sx)):
                raise ValueError(f"simplex {sx} is not a sorted vertex tuple")
            if sx and not (0 <= sx[0] and sx[-1] < n_points):
                raise ValueError(f"simplex {sx} uses points outside 0..{n_points - 1}")

    def dim(self) -> int:
        return max((len(sx) - 1 for sx in self.simplices), default=-1)

    def by_dim(self) -> list[list[Simplex]]:
        out: list[list[Simplex]] = [[] for _ in range(self.dim() + 1)]
        for sx in self.simplices:
            out[len(sx) - 1].append(sx)
        for level in out:
            level.sort()
        return out

    def carrier(self, sx: Simplex) -> str:
        return self.simplices[sx]

    def __repr__(self) -> str:
        return f"CarrierComplex(points={self.n_points}, simplices={len(self.simplices)})"


@dataclass(frozen=True)
class Gf2ChainComplex:
    """dims[d] cells in degree d; boundaries[d] maps degree d to d-1."""

    dims: tuple[int, ...]
    boundaries: tuple[Matrix, ...]


def _facets(sx: Simplex) -> list[Simplex]:
    return [sx[:i] + sx[i + 1 :] for i in range(len(sx))]


def chain_complex(c: CarrierComplex) -> Gf2ChainComplex:
    """Mod-2 simplicial chain complex, cells in canonical sorted order."""
    levels = c.by_dim()
    if not levels:
        return Gf2ChainComplex((), ())
    index = [{sx: i for i, sx in enumerate(level)} for level in levels]
    dims = tuple(len(level) for level in levels)
    boundaries: list[Matrix] = [Matrix.zero(dims[0], 0)]
    for d in range(1, len(levels)):
        rows = []
        for sx in levels[d]:
            bits = 0
            for tau in _facets(sx):
                try:
                    bits ^= 1 << index[d - 1][tau]
                except KeyError:
                    raise ValueError(f"complex not closed: {sx} misses facet {tau}")
            rows.append(bits)
        boundaries.append(Matrix.from_rows(rows, dims[d - 1]))
    return Gf2ChainComplex(dims, tuple(boundaries))


def betti_mod2(cc: Gf2ChainComplex) -> tuple[int, ...]:
    """Unreduced mod-2 Betti numbers.  Verifies boundary-squared = 0."""
    D = len(cc.dims) - 1
    for d in range(2, D + 1):
        if not compose_is_zero(cc.boundaries[d], cc.boundaries[d - 1]):
            raise ValueError(f"boundary composite in degree {d} is nonzero")
    ranks = [0] * (D + 2)
    for d in range(1, D + 1):
        ranks[d] = cc.boundaries[d].rank()
    return tuple(cc.dims[d] - ranks[d] - ranks[d + 1] for d in range(D + 1))


def reduced_betti(cc: Gf2ChainComplex) -> tuple[int, ...]:
    b = betti_mod2(cc)
    if not b:
        return ()
    return (b[0] - 1,) + b[1:]


def face_subcomplex(c: CarrierComplex, f: str, regrade: bool = False) -> CarrierComplex:
    """Subcomplex of simplices carried inside the face f.

    With regrade=True the result lives over the face poset of f itself,
    so it is a mode-B triangulation of the restricted instance.
    """
    keep = {sx: cf for sx, cf in c.simplices.items() if c.poset.leq(cf, f)}
    used = sorted({v for sx in keep for v in sx})
    renum = {v: i for i, v in enumerate(used)}
    simplices = {tuple(renum[v] for v in sx): cf for sx, cf in keep.items()}
    labels = None
    if c.vertex_labels is not None:
        labels = [c.vertex_labels[v] for v in used]
    poset = c.poset.restrict(f) if regrade else c.poset
    return CarrierComplex(poset, len(used), simplices, vertex_labels=labels)


@dataclass
class AcyclicityReport:
    """Reduced Betti numbers of every face's subcomplex."""

    per_face: dict[str, tuple[int, ...]]
    empty_faces: list[str]

    @property
    def verdict(self) -> bool:
        return not self.empty_faces and all(
            all(b == 0 for b in bs) for bs in self.per_face.values()
        )

    def witnesses(self) -> list[str]:
        out = [f"face {f} carries no simplex" for f in self.empty_faces]
        for f, bs in sorted(self.per_face.items()):
            if any(bs):
                out.append(f"face {f} has reduced mod-2 Betti {bs}")
        return out


def is_face_acyclic(c: CarrierComplex) -> AcyclicityReport:
    """Is every face's subcomplex mod-2 acyclic (reduced homology zero)?"""
    per_face: dict[str, tuple[int, ...]] = {}
    empty: list[str] = []
    for f in c.poset.faces():
        sub = face_subcomplex(c, f)
        if not sub.simplices:
            empty.append(f)
            continue
        per_face[f] = reduced_betti(chain_complex(sub))
    return AcyclicityReport(per_face, empty)


@dataclass
class CarrierReport:
    closure: list[str] = field(default_factory=list)
    carriers: list[str] = field(default_factory=list)
    face_strata: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.closure or self.carriers or self.face_strata)

    def witnesses(self) -> list[str]:
        return self.closure + self.carriers + self.face_strata


def validate_carriers(c: CarrierComplex, require_face_dims: bool = True) -> CarrierReport:
    """Closure, carrier monotonicity, and per-face pseudo-manifold checks.

    For each face f the carried subcomplex must be pure, with every wall
    ((d-1)-simplex) in two top simplices when carried by f itself and in
    one when carried by a proper subface.  require_face_dims additionally
    demands that the subcomplex of f has dimension dim(f), i.e. that the
    complex is a genuine triangulation of Q rather than a surrogate.
    """
    rep = CarrierReport()
    p = c.poset
    for sx, cf in sorted(c.simplices.items()):
        if cf not in p.codims:
            rep.carriers.append(f"simplex {sx} carried by unknown face {cf!r}")
            continue
        if len(sx) == 1:
            continue
        for tau in _facets(sx):
            if tau not in c.simplices:
                rep.closure.append(f"simplex {sx} misses facet {tau}")
            elif not p.leq(c.simplices[tau], cf):
                rep.carriers.append(
                    f"carrier of {tau} ({c.simplices[tau]}) not inside carrier of {sx} ({cf})"
                )
    used = {v for sx in c.simplices for v in sx}
    for v in range(c.n_points):
        if v not in used:
            rep.carriers.append(f"point {v} appears in no simplex")
    if not rep.ok:
        return rep

    for f in p.faces():
        sub = {sx for sx, cf in c.simplices.items() if p.leq(cf, f)}
        if not sub:
            rep.face_strata.append(f"face {f} carries no simplex")
            continue
        d = max(len(sx) - 1 for sx in sub)
        if require_face_dims and d != p.dim_face(f):
            rep.face_strata.append(
                f"subcomplex of face {f} has dimension {d}, face has dimension {p.dim_face(f)}"
            )
        cofaces: dict[Simplex, int] = {sx: 0 for sx in sub}
        for sx in sub:
            if len(sx) >= 2:
                for tau in _facets(sx):
                    cofaces[tau] += 1
        for sx in sub:
            if len(sx) - 1 < d and cofaces[sx] == 0:
                rep.face_strata.append(
                    f"face {f}: simplex {sx} is maximal below dimension {d}"
                )
        for sx in sub:
            if len(sx) - 1 != d - 1:
                continue
            want = 2 if c.simplices[sx] == f else 1
            got = cofaces[sx]
            if got != want:
                rep.face_strata.append(
                    f"face {f}: wall {sx} lies in {got} top simplices, wanted {want}"
                )
    return rep
