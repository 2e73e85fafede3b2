"""Command-line surface: formats, determinism, exit codes."""

import json

import pytest

from graphtorsion.cli import main

OCTA_TORSION_GOLDEN = (
    '{"torsion": "3/4","torsion_dirac_route": "3/4","mckean_singer": "1",'
    '"dirac_pseudo_det": "7077888","hodge_dets": ["2304","7077888","3072"],'
    '"dirac_dets": ["2304","3072"],"f_vector": [6,12,8],"betti": [1,0,1],'
    '"tree_product_even": "2304","tree_product_odd": "3072"}\n'
)


@pytest.fixture
def octa_file(tmp_path):
    path = tmp_path / "octa.json"
    assert main(["gen", "octahedron", "-o", str(path)]) == 0
    return str(path)


class TestGen:
    def test_octahedron_file(self, octa_file):
        doc = json.loads(open(octa_file).read())
        assert len(doc["vertices"]) == 6 and len(doc["edges"]) == 12

    def test_stdout(self, capsys):
        assert main(["gen", "cycle", "5"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["edges"]) == 5

    def test_bad_params(self, capsys):
        assert main(["gen", "cycle", "2"]) == 2


class TestTorsion:
    def test_octahedron_golden_bytes(self, octa_file, capsys):
        assert main(["torsion", "--graph", octa_file]) == 0
        assert capsys.readouterr().out == OCTA_TORSION_GOLDEN

    def test_complex_input(self, tmp_path, capsys):
        p = tmp_path / "c.json"
        p.write_text('{"facets": [[1,2,3]]}')
        assert main(["torsion", "--complex", str(p)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["torsion"] == "3"
        assert doc["f_vector"] == [3, 3, 1]

    def test_sqrt_display(self, tmp_path, capsys):
        p = tmp_path / "c4.json"
        assert main(["gen", "cycle", "4", "-o", str(p)]) == 0
        assert main(["torsion", "--graph", str(p), "--sqrt"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["torsion_sqrt"] == "4"

    def test_sqrt_symbolic(self, octa_file, capsys):
        assert main(["torsion", "--graph", octa_file, "--sqrt"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["torsion_sqrt"] == "sqrt(3/4)"

    def test_malformed_file_exit_2(self, tmp_path, capsys):
        p = tmp_path / "bad.json"
        p.write_text('{"vertices": [0,1], bad')
        assert main(["torsion", "--graph", str(p)]) == 2
        assert "line 1" in capsys.readouterr().err

    def test_missing_input_exit_2(self):
        assert main(["torsion"]) == 2

    def test_determinism(self, octa_file, capsys):
        main(["torsion", "--graph", octa_file])
        first = capsys.readouterr().out
        main(["torsion", "--graph", octa_file])
        assert capsys.readouterr().out == first


class TestTreesCommand:
    def test_octahedron(self, octa_file, capsys):
        assert main(["trees", "--graph", octa_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["spanning_trees"] == "384"
        assert doc["dual_spanning_trees"] == "384"
        assert doc["duality"] == "equal"

    def test_house_negative(self, tmp_path, capsys):
        p = tmp_path / "house.json"
        p.write_text(json.dumps({
            "vertices": [0, 1, 2, 3, 4],
            "edges": [[0, 1], [1, 2], [2, 3], [3, 0], [2, 4], [3, 4]],
        }))
        assert main(["trees", "--graph", str(p)]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["duality"] == "not_a_2_sphere"
        assert doc["spanning_trees"] == "11"
        assert doc["dual_spanning_trees"] == "4"


class TestCheckCommand:
    def test_sphere(self, octa_file, capsys):
        assert main(["check", "--graph", octa_file, "--sphere", "2"]) == 0
        assert json.loads(capsys.readouterr().out)["verdict"] == "yes"

    def test_contractible(self, tmp_path, capsys):
        p = tmp_path / "w.json"
        main(["gen", "wheel", "6", "-o", str(p)])
        capsys.readouterr()
        assert main(["check", "--graph", str(p), "--contractible"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["contractible"] == "yes"
        assert len(doc["witness"]) == 6

    def test_budget(self, tmp_path, capsys):
        p = tmp_path / "i.json"
        main(["gen", "icosahedron", "-o", str(p)])
        capsys.readouterr()
        assert main(["check", "--graph", str(p), "--contractible",
                     "--budget", "0"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["contractible"] == "unknown"
        assert doc["budget_exhausted"] is True


class TestOtherCommands:
    def test_betti(self, octa_file, capsys):
        assert main(["betti", "--graph", octa_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc == {"f_vector": [6, 12, 8], "betti": [1, 0, 1],
                       "euler_characteristic": 2}

    def test_wu(self, octa_file, capsys):
        assert main(["wu", "--graph", octa_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["wu_characteristic"] == 2
        assert doc["wu_torsion"] == "3/28"

    def test_zeta_torsion(self, octa_file, capsys):
        assert main(["zeta", "--graph", octa_file, "--torsion"]) == 0
        assert json.loads(capsys.readouterr().out)["zeta_torsion"] == "0.75"

    def test_zeta_csv(self, octa_file, capsys):
        assert main(["zeta", "--graph", octa_file, "--csv", "0", "2", "5"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "s,zeta" and len(lines) == 6

    def test_bary_operator(self, capsys):
        assert main(["bary", "--operator", "2"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["operator"] == [[1, 1, 1], [0, 2, 6], [0, 0, 6]]

    def test_bary_limit(self, octa_file, capsys):
        assert main(["bary", "--limit", "2", "--steps", "1",
                     "--graph", octa_file]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["torsions"] == ["3/4", "13/24"]

    def test_bary_limit_odd_exit_1(self, tmp_path, capsys):
        p = tmp_path / "c4.json"
        main(["gen", "cycle", "4", "-o", str(p)])
        assert main(["bary", "--limit", "1", "--steps", "1",
                     "--graph", str(p)]) == 1

    def test_dump_d0(self, tmp_path, capsys):
        p = tmp_path / "e.json"
        p.write_text('{"facets": [[1,2]]}')
        assert main(["dump", "--complex", str(p), "--what", "d0"]) == 0
        assert capsys.readouterr().out == "-1 1\n"

    def test_dump_dirac(self, tmp_path, capsys):
        p = tmp_path / "e.json"
        p.write_text('{"facets": [[1,2]]}')
        assert main(["dump", "--complex", str(p), "--what", "D"]) == 0
        assert capsys.readouterr().out == "0 0 -1\n0 0 1\n-1 1 0\n"


class TestExperimentCommands:
    def test_er_sweep_deterministic(self, capsys):
        args = ["experiment", "er", "--n", "6", "--p", "1/2",
                "--samples", "3", "--seed", "5"]
        assert main(args) == 0
        first = capsys.readouterr().out
        assert main(args) == 0
        assert capsys.readouterr().out == first
        assert first.startswith("#")

    def test_er_sweep_p1_column(self, capsys):
        assert main(["experiment", "er", "--n", "5", "--p", "1",
                     "--samples", "2", "--seed", "0"]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        assert out[-1].startswith("1,5,")

    def test_er_sweep_n_cap_exit_2(self):
        assert main(["experiment", "er", "--n", "15", "--p", "1/2",
                     "--samples", "1"]) == 2

    def test_sequence(self, capsys):
        assert main(["experiment", "sequence", "--target", "cycle_complement",
                     "--n-max", "5"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == ["n,A", "3,1", "4,4", "5,25"]

    def test_conjecture(self, capsys):
        assert main(["experiment", "conjecture", "--target", "cylinders",
                     "--n-range", "4", "4", "--m-range", "2", "2"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[1] == "4,2,8,8,True"

    def test_extremal(self, capsys):
        assert main(["experiment", "extremal", "--n", "4"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["max_A"] == "16" and doc["min_A"] == "4"
