"""Corner cuts: the new poset, the new labels, and the counting laws."""

import pytest

from z2torus import corpus
from z2torus.blowup import acyclicity_preservation, blowup_counts_check, cut_face
from z2torus.charfunc import validate_lambda
from z2torus.complexes import betti_mod2, chain_complex, CarrierComplex
from z2torus.errors import InputError, PreconditionError
from z2torus.poset import (
    FacePoset,
    fh_vectors,
    gorenstein_quick_checks,
    order_complex,
    validate,
)


class TestCutTriangle:
    def test_quadrilateral_shape(self):
        inst = corpus.triangle()
        cut = cut_face(inst.poset, inst.lam, "p12")
        p = cut.poset
        assert len(p.codims) == 9
        assert len(p.facets()) == 4 and len(p.vertices()) == 4
        assert cut.new_facet == "p12|F1,F2"
        assert validate(p).ok

    def test_new_labels(self):
        inst = corpus.triangle()
        cut = cut_face(inst.poset, inst.lam, "p12")
        lam = cut.lam
        assert str(lam.vec("F1")) == "10"
        assert str(lam.vec("F2")) == "01"
        assert str(lam.vec("F3")) == "11"
        assert str(lam.vec("p12|F1,F2")) == "11"
        assert validate_lambda(cut.poset, lam).ok

    def test_new_vertices_sit_on_the_right_facets(self):
        # the subset names the directions cut away, so the new vertex
        # p12|F1 survives on the OTHER old facet through p12
        inst = corpus.triangle()
        cut = cut_face(inst.poset, inst.lam, "p12")
        p = cut.poset
        assert p.facets_containing("p12|F1") == ["F2", "p12|F1,F2"]
        assert p.facets_containing("p12|F2") == ["F1", "p12|F1,F2"]
        assert p.facets_containing("p13") == ["F1", "F3"]

    def test_provenance(self):
        inst = corpus.triangle()
        cut = cut_face(inst.poset, inst.lam, "p12")
        assert cut.provenance["p13"] == ["p13"]
        assert cut.provenance["p12"] == ["p12|F1", "p12|F1,F2", "p12|F2"]

    def test_h_vector_and_counts(self):
        inst = corpus.triangle()
        cut = cut_face(inst.poset, inst.lam, "p12")
        fh = fh_vectors(cut.poset)
        assert (fh.f, fh.h) == ((4, 4), (1, 2, 1))
        check = blowup_counts_check(inst.poset, inst.lam, "p12", cut)
        assert check.k == 2
        assert check.vertices_ok and check.betti_ok
        assert check.vertices_after == 4 and check.betti_sum_after == 4
        assert check.formality_preserved


class TestCutCube:
    def test_vertex_cut(self):
        inst = corpus.cube()
        cut = cut_face(inst.poset, inst.lam, "V000")
        p = cut.poset
        assert len(p.facets()) == 7 and len(p.vertices()) == 10
        assert cut.new_facet == "V000|X0,Y0,Z0"
        assert str(cut.lam.vec(cut.new_facet)) == "111"
        assert validate(p).ok
        g = gorenstein_quick_checks(p)
        assert g.pseudo_manifold and g.euler_ok

    def test_vertex_cut_new_facet_is_a_triangle(self):
        inst = corpus.cube()
        cut = cut_face(inst.poset, inst.lam, "V000")
        tri = cut.poset.restrict(cut.new_facet)
        assert tri.n == 2
        assert len(tri.facets()) == 3 and len(tri.vertices()) == 3

    def test_vertex_cut_counts(self):
        inst = corpus.cube()
        check = blowup_counts_check(inst.poset, inst.lam, "V000")
        assert check.k == 3
        assert check.vertices_before == 8 and check.vertices_face == 1
        assert check.vertices_after == 10 and check.vertices_ok
        assert check.betti_sum_before == 8 and check.betti_sum_face == 1
        assert check.betti_sum_after == 10 and check.betti_ok
        assert check.hsiang_before and check.hsiang_after

    def test_edge_cut_counts(self):
        inst = corpus.cube()
        check = blowup_counts_check(inst.poset, inst.lam, "EX0Y0")
        assert check.k == 2
        assert check.vertices_face == 2 and check.betti_sum_face == 2
        assert check.vertices_after == 10 and check.vertices_ok
        assert check.betti_sum_after == 10 and check.betti_ok
        assert check.formality_preserved

    def test_edge_cut_f_vector(self):
        inst = corpus.cube()
        cut = cut_face(inst.poset, inst.lam, "EX0Y0")
        assert fh_vectors(cut.poset).f == (7, 15, 10)
        assert validate(cut.poset).ok


class TestGuards:
    def test_codim_one_rejected(self):
        inst = corpus.triangle()
        with pytest.raises(PreconditionError):
            cut_face(inst.poset, inst.lam, "F1")

    def test_top_rejected(self):
        inst = corpus.triangle()
        with pytest.raises(PreconditionError):
            cut_face(inst.poset, inst.lam, "Q")

    def test_unknown_face(self):
        inst = corpus.triangle()
        with pytest.raises(InputError):
            cut_face(inst.poset, inst.lam, "nope")

    def test_id_collision(self):
        # a triangle whose third vertex happens to be named like a
        # generated id
        codims = {"Q": 0, "F1": 1, "F2": 1, "F3": 1,
                  "p12": 2, "p12|F1": 2, "p23": 2}
        covers = {
            ("F1", "Q"), ("F2", "Q"), ("F3", "Q"),
            ("p12", "F1"), ("p12", "F2"),
            ("p12|F1", "F1"), ("p12|F1", "F3"),
            ("p23", "F2"), ("p23", "F3"),
        }
        p = FacePoset(2, codims, covers)
        with pytest.raises(InputError, match="collides"):
            cut_face(p, corpus.triangle().lam, "p12")


class TestDualSubdivision:
    """Cutting a face subdivides the dual sphere without changing it."""

    def frozen_boundary_betti(self, poset, want):
        oc = order_complex(poset)
        top = poset.top()
        proper = {sx: c for sx, c in oc.simplices.items() if c != top}
        boundary = CarrierComplex(poset, oc.n_points - 1, proper)
        assert betti_mod2(chain_complex(boundary)) == want

    def test_triangle_cut_keeps_the_circle(self):
        inst = corpus.triangle()
        cut = cut_face(inst.poset, inst.lam, "p12")
        self.frozen_boundary_betti(inst.poset, (1, 1))
        self.frozen_boundary_betti(cut.poset, (1, 1))

    def test_cube_cuts_keep_the_sphere(self):
        inst = corpus.cube()
        for f in ("V000", "EX0Y0"):
            cut = cut_face(inst.poset, inst.lam, f)
            self.frozen_boundary_betti(cut.poset, (1, 0, 1))

    def test_dual_cell_count_change(self):
        # cutting a codim-k face replaces its dual cell with a cone over
        # its boundary: face counts grow by the new-face grid
        inst = corpus.cube()
        cut = cut_face(inst.poset, inst.lam, "V000")
        assert len(cut.poset.codims) == 33
        cut2 = cut_face(inst.poset, inst.lam, "EX0Y0")
        assert len(cut2.poset.codims) == 33


class TestAcyclicityPreservation:
    def test_triangle_versus_quadrilateral_mode_b(self):
        tri_poset = corpus.triangle().poset
        tri_complex = CarrierComplex(
            tri_poset,
            3,
            {
                (0,): "p12", (1,): "p13", (2,): "p23",
                (0, 1): "F1", (0, 2): "F2", (1, 2): "F3",
                (0, 1, 2): "Q",
            },
        )
        quad = corpus.cut_triangle()
        cmp = acyclicity_preservation(tri_complex, quad.triangulation)
        assert cmp.before and cmp.after and cmp.agree

    def test_formality_preserved_on_small_cuts(self):
        for name, f in (
            ("triangle", "p12"),
            ("square_torus", "BL"),
            ("square_klein", "TR"),
            ("bigon", "v1"),
        ):
            inst = corpus.BUILDERS[name]()
            check = blowup_counts_check(inst.poset, inst.lam, f)
            assert check.vertices_ok and check.betti_ok, (name, f)
            assert check.formality_preserved, (name, f)

    def test_iterated_cuts(self):
        inst = corpus.triangle()
        cut = cut_face(inst.poset, inst.lam, "p12")
        again = cut_face(cut.poset, cut.lam, "p13")
        assert validate(again.poset).ok
        assert len(again.poset.vertices()) == 5
        check = blowup_counts_check(cut.poset, cut.lam, "p13", again)
        assert check.vertices_ok and check.betti_ok
