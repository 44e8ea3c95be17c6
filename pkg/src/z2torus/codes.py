"""Binary codes from facet-vertex incidence.

When the instance admits the free involution (label image a basis, Q
face-acyclic) the facet-vertex incidence matrix generates a binary code
on the fixed points; self-duality is checked per instance, never
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charfunc import CharFunction
from .errors import PreconditionError
from .gf2 import Matrix, Vec, dual_code
from .poset import FacePoset


@dataclass(frozen=True)
class BinaryCode:
    length: int
    gen: Matrix  # one row per facet, as given (not reduced)
    facets: tuple[str, ...]
    coordinates: tuple[str, ...]  # vertices, canonical order

    @property
    def dim(self) -> int:
        return self.gen.rank()

    def rows(self) -> list[str]:
        return [str(Vec(r, self.length)) for r in self.gen.rows]


def facet_code(p: FacePoset, lam: CharFunction) -> BinaryCode:
    """Code generated by facet-vertex incidence vectors.

    Caller is responsible for the m-involution existing (that is what
    makes the fixed set of the involution the support of this code).
    """
    vertices = p.vertices()
    if not vertices:
        raise PreconditionError("poset has no vertices, code is empty")
    vindex = {v: i for i, v in enumerate(vertices)}
    rows = []
    for F in p.facets():
        bits = 0
        for v in vertices:
            if p.leq(v, F):
                bits |= 1 << vindex[v]
        rows.append(bits)
    return BinaryCode(
        len(vertices),
        Matrix.from_rows(rows, len(vertices)),
        tuple(p.facets()),
        tuple(vertices),
    )


def is_self_dual(code: BinaryCode) -> bool:
    """True iff the code equals its dual (canonical RREFs coincide)."""
    own = code.gen.rref()[0]
    dual = dual_code(code.gen).rref()[0]
    return own == dual


def min_distance(code: BinaryCode) -> int:
    """Minimum weight over all nonzero codewords, by exhaustive
    enumeration of the row space (Gray-code order)."""
    basis = code.gen.rref()[0].rows
    dim = len(basis)
    if dim == 0:
        raise PreconditionError("zero code has no minimum distance")
    if dim > 24:
        raise PreconditionError(f"dimension {dim} > 24, enumeration refused")
    best = None
    word = 0
    prev = 0
    for i in range(1, 1 << dim):
        gray = i ^ (i >> 1)
        word ^= basis[(gray ^ prev).bit_length() - 1]
        prev = gray
        w = word.bit_count()
        if best is None or w < best:
            best = w
    return best
