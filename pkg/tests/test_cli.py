"""End-to-end command-line behavior: formats, exit codes, round trips."""

import json

import pytest

from z2torus import corpus
from z2torus.cli import main
from z2torus.instance import load_instance, save_instance, serialize_instance


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def bundled(name):
    return str(corpus.bundled_path(name))


class TestBundledData:
    def test_files_parse_and_match_builders(self):
        for name in corpus.BUNDLED:
            inst = corpus.bundled(name)
            built = corpus.BUILDERS[name]()
            assert inst.poset == built.poset, name
            assert serialize_instance(inst) == serialize_instance(built), name


class TestValidate:
    def test_triangle(self, capsys):
        rc, out, _ = run(capsys, "validate", bundled("triangle"))
        assert rc == 0
        assert "name=triangle dim=2 faces=7 facets=3 vertices=3" in out
        assert "mode: A (order-complex surrogate)" in out

    def test_annulus_findings(self, capsys):
        rc, out, _ = run(capsys, "validate", bundled("annulus"))
        assert rc == 1
        assert "has_vertex=fail" in out
        assert "gorenstein_quick: pseudo_manifold=false euler_ok=false" in out
        assert "mode: B points=6 simplices=24 carriers=ok" in out


class TestFormality:
    def test_triangle_line(self, capsys):
        rc, out, _ = run(capsys, "formality", bundled("triangle"))
        assert rc == 0
        assert "hsiang=true criterion=surrogate-true h_identity=true" in out
        assert "agree=true" in out

    def test_square_torus_mode_b(self, capsys):
        rc, out, _ = run(capsys, "formality", bundled("square_torus"))
        assert rc == 0
        assert "hsiang=true criterion=true h_identity=true agree=true" in out

    def test_annulus(self, capsys):
        rc, out, _ = run(capsys, "formality", bundled("annulus"))
        assert rc == 0
        assert "hsiang=false criterion=false h_identity=false agree=true" in out


class TestNumericFragments:
    def test_hvector(self, capsys):
        rc, out, _ = run(capsys, "hvector", bundled("cube"))
        assert rc == 0 and out == "f=(6, 12, 8) h=(1, 3, 3, 1)\n"

    def test_betti(self, capsys):
        rc, out, _ = run(capsys, "betti", bundled("cube"))
        assert rc == 0 and out == "mode=A betti=(1, 3, 3, 1) sum=8\n"

    def test_gkm_default_degree(self, capsys):
        rc, out, _ = run(capsys, "gkm", bundled("triangle"))
        assert rc == 0
        assert "equivariant_dims=(1, 3, 6, 9, 12)" in out
        assert "match=true" in out

    def test_gkm_max_deg(self, capsys):
        rc, out, _ = run(capsys, "gkm", bundled("triangle"), "--max-deg", "3")
        assert rc == 0
        assert "equivariant_dims=(1, 3, 6, 9) face_ring_dims=(1, 3, 6, 9)" in out

    def test_gkm_annulus_skipped(self, capsys):
        rc, out, _ = run(capsys, "gkm", bundled("annulus"))
        assert rc == 2 and out.startswith("gkm: skipped")


class TestCode:
    def test_cube_block(self, capsys):
        rc, out, _ = run(capsys, "code", bundled("cube"))
        assert rc == 0
        lines = out.splitlines()
        assert lines[0] == "m_involution=true g=111"
        assert lines[1:7] == [
            "11110000",
            "00001111",
            "11001100",
            "00110011",
            "10101010",
            "01010101",
        ]
        assert lines[7] == "[8,4,4] self_dual=true"

    def test_triangle(self, capsys):
        rc, out, _ = run(capsys, "code", bundled("triangle"))
        assert rc == 0
        assert out.splitlines()[0].startswith("m_involution=false")
        assert out.splitlines()[-1] == "[3,2,2] self_dual=false"

    def test_annulus_skipped(self, capsys):
        rc, out, _ = run(capsys, "code", bundled("annulus"))
        assert rc == 2
        assert "code: skipped" in out


class TestFixedLocus:
    def test_cube_diagonal(self, capsys):
        rc, out, _ = run(capsys, "fixed-locus", bundled("cube"), "--g", "111")
        assert rc == 0
        assert "discrete=true count=8" in out

    def test_cube_coordinate(self, capsys):
        rc, out, _ = run(capsys, "fixed-locus", bundled("cube"), "--g", "100")
        assert rc == 0
        assert "faces=X0,X1 discrete=false count=none" in out

    def test_zero_rejected(self, capsys):
        rc, _, err = run(capsys, "fixed-locus", bundled("cube"), "--g", "000")
        assert rc == 1 and "error:" in err

    def test_wrong_width(self, capsys):
        rc, _, err = run(capsys, "fixed-locus", bundled("cube"), "--g", "10")
        assert rc == 1 and "3" in err


class TestBlowup:
    def test_round_trip(self, capsys, tmp_path):
        out_file = tmp_path / "quad.json"
        rc, out, _ = run(
            capsys, "blowup", bundled("triangle"), "--face", "p12", "--out", str(out_file)
        )
        assert rc == 0
        assert "new_facet=p12|F1,F2 label=11" in out
        assert f"wrote {out_file}" in out

        rc, out, _ = run(capsys, "betti", str(out_file))
        assert rc == 0 and out == "mode=A betti=(1, 2, 1) sum=4\n"

        rc, out, _ = run(capsys, "validate", str(out_file))
        assert rc == 0

    def test_iterated_cut_through_files(self, capsys, tmp_path):
        quad = tmp_path / "quad.json"
        penta = tmp_path / "penta.json"
        run(capsys, "blowup", bundled("triangle"), "--face", "p12", "--out", str(quad))
        rc, out, _ = run(capsys, "blowup", str(quad), "--face", "p13", "--out", str(penta))
        assert rc == 0
        rc, out, _ = run(capsys, "hvector", str(penta))
        assert out == "f=(5, 5) h=(1, 3, 1)\n"

    def test_facet_rejected(self, capsys, tmp_path):
        rc, _, err = run(
            capsys, "blowup", bundled("triangle"), "--face", "F1",
            "--out", str(tmp_path / "x.json"),
        )
        assert rc == 2 and "codimension" in err

    def test_unknown_face(self, capsys, tmp_path):
        rc, _, err = run(
            capsys, "blowup", bundled("triangle"), "--face", "zz",
            "--out", str(tmp_path / "x.json"),
        )
        assert rc == 1 and "unknown face" in err


class TestReport:
    @pytest.mark.parametrize("name", list(corpus.BUNDLED))
    def test_report_is_the_concatenation(self, capsys, name):
        parts = []
        for cmd in ("validate", "hvector", "betti", "formality", "gkm", "code"):
            _, out, _ = run(capsys, cmd, bundled(name))
            parts.append(out)
        rc, whole, _ = run(capsys, "report", bundled(name))
        assert whole == "".join(parts)
        expected_rc = 2 if name == "annulus" else 0
        assert rc == expected_rc


class TestParseErrors:
    def test_not_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        rc, _, err = run(capsys, "validate", str(bad))
        assert rc == 1 and "not valid JSON" in err

    def test_missing_file(self, capsys, tmp_path):
        rc, _, err = run(capsys, "validate", str(tmp_path / "nope.json"))
        assert rc == 1 and "cannot read" in err

    def test_unknown_key(self, capsys, tmp_path):
        data = json.loads(corpus.bundled_path("triangle").read_text())
        data["extra"] = 1
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        rc, _, err = run(capsys, "validate", str(bad))
        assert rc == 1 and "unknown key" in err

    def test_dependent_lambda(self, capsys, tmp_path):
        data = json.loads(corpus.bundled_path("triangle").read_text())
        data["lambda"]["F2"] = [1, 0]
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        rc, _, err = run(capsys, "validate", str(bad))
        assert rc == 1 and "dependent" in err

    def test_bad_carrier(self, capsys, tmp_path):
        data = json.loads(corpus.bundled_path("square_torus").read_text())
        data["triangulation"]["simplices"][0]["carrier"] = "nope"
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        rc, _, err = run(capsys, "validate", str(bad))
        assert rc == 1 and "unknown face" in err

    def test_missing_lambda_for_betti(self, capsys, tmp_path):
        data = json.loads(corpus.bundled_path("triangle").read_text())
        del data["lambda"]
        f = tmp_path / "nolam.json"
        f.write_text(json.dumps(data))
        rc, out, _ = run(capsys, "hvector", str(f))
        assert rc == 0
        rc, _, err = run(capsys, "betti", str(f))
        assert rc == 1 and "no lambda" in err

    def test_broken_poset(self, capsys, tmp_path):
        # dropping one vertex-facet inclusion leaves p23 inside a single
        # facet, so the poset is neither nice nor simplicial
        data = json.loads(corpus.bundled_path("triangle").read_text())
        data["inclusions"] = [
            pair for pair in data["inclusions"] if pair != ["p23", "F2"]
        ]
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(data))
        rc, _, err = run(capsys, "validate", str(bad))
        assert rc == 1 and "p23" in err


class TestSerialization:
    def test_save_load_round_trip(self, tmp_path):
        inst = corpus.cut_triangle()
        path = tmp_path / "cut.json"
        save_instance(inst, path)
        back = load_instance(path)
        assert back.poset == inst.poset
        assert back.lam.values == inst.lam.values
        assert back.triangulation.simplices == inst.triangulation.simplices
