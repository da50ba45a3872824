import json

import pytest

from hyperlab.abelian import FGAbelianGroup
from hyperlab.cayley_dickson import CDElement
from hyperlab.cli import main, run
from hyperlab.heyting import FiniteTopology


def payload(argv):
    result = run(argv)
    # every payload must survive a JSON round trip
    assert json.loads(result.to_json()) == json.loads(result.to_json())
    return result


class TestTable:
    def test_octonion_compare_clean(self):
        result = payload(["table", "--level", "3", "--compare"])
        assert result.code == 0
        assert result.payload["mismatches"] == []

    def test_sedenion_compare_is_diagnostic(self):
        result = payload(["table", "--level", "4", "--compare"])
        assert result.code == 0
        cells = result.payload["diagnostics"]["mismatched_cells"]
        assert len(cells) == 6

    def test_dense_export(self):
        result = payload(["table", "--level", "1", "--dense"])
        table = result.payload["table"]
        assert table["kind"] == "structure_constants"
        assert table["gamma"][1][1][0] == -1

    def test_unsupported_compare_level(self):
        result = payload(["table", "--level", "2", "--compare"])
        assert result.code == 2


class TestProps:
    def test_level4_exhaustive(self):
        result = payload(["props", "--level", "4", "--mode", "exhaustive-basis"])
        assert result.code == 0
        verdicts = {v["identity"]: v for v in result.payload["identities"]}
        assert verdicts["associative"]["passed"] is False
        assert verdicts["flexible"]["passed"] is True
        witness = verdicts["associative"]["witness"]
        elements = [CDElement.from_json_dict(w) for w in witness]
        a, b, c = elements
        assert (a * b) * c != a * (b * c)

    def test_seed_determines_output(self):
        a = payload(["props", "--level", "4", "--mode", "random-sample",
                     "--count", "50", "--seed", "5"])
        b = payload(["props", "--level", "4", "--mode", "random-sample",
                     "--count", "50", "--seed", "5"])
        assert a.payload == b.payload


class TestZerodiv:
    def test_level4_contains_canonical_pair(self):
        result = payload(["zerodiv", "--level", "4"])
        assert result.code == 0
        target_a = CDElement.basis(4, 3) + CDElement.basis(4, 10)
        target_b = CDElement.basis(4, 6) - CDElement.basis(4, 15)
        found = False
        for pair in result.payload["pairs"]:
            a = CDElement.from_json_dict(pair["a"])
            b = CDElement.from_json_dict(pair["b"])
            assert (a * b).is_zero()
            if a == target_a and b == target_b:
                found = True
        assert found

    def test_level3_empty(self):
        result = payload(["zerodiv", "--level", "3"])
        assert result.payload["count"] == 0


class TestQalg:
    def test_centre_of_quaternions(self):
        result = payload(["qalg", "--base", "real", "--level", "2",
                          "--op", "centre"])
        assert result.payload["centre_dimension"] == 1

    def test_nucleus_of_octonions(self):
        result = payload(["qalg", "--base", "real", "--level", "3",
                          "--op", "nucleus"])
        assert result.payload["nucleus_dimension"] == 1

    def test_embeddings_verified(self):
        result = payload(["qalg", "--base", "mat2", "--level", "2",
                          "--op", "tensor"])
        assert result.code == 0
        assert all(result.payload["embeddings"].values())

    def test_classic_limit_of_unit(self):
        result = payload(["qalg", "--base", "mat2", "--level", "1",
                          "--op", "classic-limit"])
        assert result.payload["classic_limit"] == "1"

    def test_unknown_base(self):
        result = payload(["qalg", "--base", "nonesuch", "--op", "centre"])
        assert result.code == 2


class TestHeyting:
    def test_build_chain(self):
        result = payload(["heyting", "build", "--chain", "3"])
        assert result.code == 0
        assert result.payload["classification"]["is_boolean"] is False

    def test_laws_pass_on_chain(self):
        result = payload(["heyting", "laws", "--chain", "5"])
        assert result.code == 0

    def test_quotient(self):
        result = payload(["heyting", "quotient", "--chain", "3",
                          "--filter", "1"])
        assert result.payload["quotient"]["size"] == 2

    def test_topology_file(self, tmp_path):
        topo = FiniteTopology.from_subsets(["a", "b"], [[], ["a"], ["a", "b"]])
        path = tmp_path / "topology.json"
        path.write_text(json.dumps(topo.to_json_dict()))
        result = payload(["heyting", "build", "--input", str(path)])
        assert result.payload["size"] == 3

    def test_lattice_rejection(self, tmp_path):
        from hyperlab.heyting import pentagon_lattice

        meet, join = pentagon_lattice()
        path = tmp_path / "n5.json"
        path.write_text(json.dumps({"meet": meet, "join": join}))
        result = payload(["heyting", "build", "--input", str(path)])
        assert result.code == 1
        assert result.payload["accepted"] is False
        assert "witness" in result.payload

    def test_missing_source(self):
        result = payload(["heyting", "build"])
        assert result.code == 2


class TestAbelian:
    def test_snf(self):
        result = payload(["abelian", "snf", "--matrix", "[[2,0],[0,3]]"])
        assert result.payload["factors"] == [1, 6]

    def test_ext(self):
        result = payload(["abelian", "ext", "--g", "Z28", "--h", "Z2"])
        group = FGAbelianGroup.from_json_dict(result.payload["ext"])
        assert group == FGAbelianGroup.from_divisors(2)

    def test_homology(self):
        result = payload(["abelian", "homology", "--order", "28", "--degree", "1"])
        assert result.payload["group"] == {"rank": 0, "torsion": [28]}

    def test_sphere(self):
        result = payload(["abelian", "sphere", "--n", "7", "--p", "7"])
        assert result.payload["group"] == {"rank": 1, "torsion": []}
        assert result.payload["euler_characteristic"] == 0

    def test_extension_count(self):
        result = payload(["abelian", "extension-count",
                          "--base", "Z28", "--fiber", "Z2"])
        assert result.payload["ext_order"] == 2
        assert result.payload["direct_sum_order"] == 56

    def test_bad_matrix(self):
        result = payload(["abelian", "snf", "--matrix", "not json"])
        assert result.code == 2


class TestPde:
    def test_jacobian(self):
        result = payload(["pde", "jacobian", "--system", "r1"])
        assert result.payload["jacobian"][0][4] == "2*u1_x*(2*u1_x^2 - 1)" or \
            "u1_x" in result.payload["jacobian"][0][4]

    def test_minors(self):
        result = payload(["pde", "minors", "--system", "r1", "--size", "2"])
        assert result.payload["nonzero"] == 4

    def test_scan(self, tmp_path):
        points = [
            {"u1_x": 0.0, "u1_y": 0.0, "u2_x": 0.0, "u2_y": 0.0},
            {"u1_x": 1.0, "u2_y": 0.0, "u2_x": 2 ** -0.25, "u1_y": 2 ** -0.25},
        ]
        path = tmp_path / "points.json"
        path.write_text(json.dumps(points))
        result = payload(["pde", "scan", "--system", "r1",
                          "--points", str(path), "--minor-size", "2"])
        scan = result.payload["scan"]
        assert scan[0]["classification"] == "Singular"
        assert scan[1]["classification"] == "Regular"

    def test_scan_flags_off_variety(self, tmp_path):
        path = tmp_path / "points.json"
        path.write_text(json.dumps([{"u1_x": 1.0, "u2_y": 1.0}]))
        result = payload(["pde", "scan", "--system", "r1", "--points", str(path)])
        assert result.code == 1
        assert result.payload["scan"][0]["classification"] == "OffVariety"

    def test_heat(self):
        result = payload(["pde", "heat", "--nodes", "32", "--steps", "10",
                          "--level", "2", "--seed", "1"])
        assert result.code == 0
        assert result.payload["componentwise_decoupling"] is True

    def test_dalembert(self):
        result = payload(["pde", "dalembert", "--level", "3", "--nodes", "5"])
        assert result.payload["commutative_subalgebra"] is False
        assert result.payload["max_residual"] > 0

    def test_unknown_system(self):
        result = payload(["pde", "jacobian", "--system", "nonesuch"])
        assert result.code == 2


class TestDispatch:
    def test_usage_error_exit_code(self):
        assert run(["no-such-command"]).code == 2

    def test_threads_flag_accepted(self):
        a = run(["zerodiv", "--level", "4", "--threads", "1"])
        b = run(["zerodiv", "--level", "4", "--threads", "4"])
        assert a.payload == b.payload

    def test_threads_must_be_positive(self):
        assert run(["zerodiv", "--level", "3", "--threads", "0"]).code == 2

    def test_main_prints_json(self, capsys):
        code = main(["abelian", "ext", "--g", "Z28", "--h", "Z2", "--json"])
        out = capsys.readouterr().out
        assert code == 0
        assert json.loads(out)["name"] == "Z2"

    def test_main_prints_text(self, capsys):
        code = main(["heyting", "laws", "--chain", "3"])
        out = capsys.readouterr().out
        assert code == 0
        assert "seven_conditions" in out
