import json

from click.testing import CliRunner

from gsv import encode_graph_id, generate
from gsv.cli import cli

RING6_ID = encode_graph_id(generate("ring", 6))


def run(*args, **kwargs):
    return CliRunner().invoke(cli, list(args), **kwargs)


class TestSld:
    def test_json_output(self):
        res = run("sld", "3:c", "--format", "json")
        assert res.exit_code == 0
        assert json.loads(res.output) == {"n": 3, "A": [1, 0, 3, 4], "type": "I"}

    def test_table_output(self):
        res = run("sld", "3:c")
        assert res.exit_code == 0
        lines = res.output.splitlines()
        assert lines[0].split() == ["k", "A_k"]
        assert len(lines) == 5  # header + one row per sector
        assert lines[-1].startswith("  3  4")

    def test_noise_column(self):
        res = run("sld", "3:c", "--noise", "1.0", "--format", "json")
        doc = json.loads(res.output)
        assert doc["p"] == 1.0
        assert doc["values"] == [1.0, 0.0, 0.0, 0.0]

    def test_workers_do_not_change_output(self):
        single = run("sld", RING6_ID, "--format", "json")
        multi = run("sld", RING6_ID, "--workers", "4", "--format", "json")
        assert single.output == multi.output

    def test_refused_above_auto_limit(self):
        big = encode_graph_id(generate("ring", 17))
        res = run("sld", big)
        assert res.exit_code == 1
        assert run("sld", big, "--force").exit_code == 0

    def test_hard_cap_cannot_be_forced(self):
        huge = encode_graph_id(generate("ring", 29))
        res = run("sld", huge, "--force")
        assert res.exit_code == 1

    def test_malformed_id_is_usage_error(self):
        res = run("sld", "banana")
        assert res.exit_code == 2

    def test_cache_path_reuses_results(self, tmp_path):
        from gsv.sld import brute_force_call_count, reset_brute_force_call_count

        cache = str(tmp_path / "sld.jsonl")
        reset_brute_force_call_count()
        assert run("sld", RING6_ID, "--cache-path", cache).exit_code == 0
        assert brute_force_call_count() == 1
        assert run("sld", RING6_ID, "--cache-path", cache).exit_code == 0
        assert brute_force_call_count() == 1

    def test_cache_path_env_var(self, tmp_path):
        cache = str(tmp_path / "sld.jsonl")
        res = CliRunner().invoke(
            cli, ["sld", RING6_ID], env={"GSV_CACHE_PATH": cache}
        )
        assert res.exit_code == 0
        assert (tmp_path / "sld.jsonl").exists()


class TestThresholds:
    def test_table(self):
        res = run("thresholds", RING6_ID)
        assert res.exit_code == 0
        lines = dict(
            (line.split()[0], float(line.split()[1]))
            for line in res.output.splitlines()
        )
        assert abs(lines["distillation"] - (1 - 2 ** (-1 / 3))) < 1e-9
        assert abs(lines["nSector"] - (1 - 10 ** (-1 / 12))) < 1e-9

    def test_json(self):
        res = run("thresholds", RING6_ID, "--format", "json")
        doc = json.loads(res.output)
        assert set(doc) == {"nSector", "majorization", "distillation"}


class TestStabilizers:
    def test_renders_lines(self):
        res = run("stabilizers", "2:8")
        assert res.exit_code == 0
        assert res.output.splitlines() == ["11", "XZ", "ZX", "YY"]

    def test_limit(self):
        res = run("stabilizers", RING6_ID, "--limit", "3")
        assert len(res.output.splitlines()) == 3

    def test_json(self):
        res = run("stabilizers", "2:8", "--format", "json")
        doc = json.loads(res.output)
        assert doc["total"] == 4
        assert doc["stabilizers"][3] == {"sign": 1, "paulis": "YY"}

    def test_negative_limit(self):
        assert run("stabilizers", "2:8", "--limit", "-1").exit_code == 2


class TestLc:
    def test_round_trip(self):
        star3 = encode_graph_id(generate("star", 3))
        once = run("lc", star3, "1").output.strip()
        assert once != star3
        again = run("lc", once, "1").output.strip()
        assert again == star3

    def test_bad_vertex(self):
        assert run("lc", "2:8", "5").exit_code == 2


class TestIdCommands:
    def test_decode(self):
        res = run("id", "decode", "2:8")
        assert json.loads(res.output) == {"n": 2, "edges": [[1, 2]]}

    def test_encode(self):
        res = run("id", "encode", '{"n":2,"edges":[[1,2]]}')
        assert res.output.strip() == "2:8"

    def test_encode_from_stdin(self):
        res = CliRunner().invoke(
            cli, ["id", "encode", "-"], input='{"n":3,"edges":[[1,3]]}'
        )
        assert res.output.strip() == "3:4"

    def test_encode_rejects_bad_json(self):
        assert run("id", "encode", "{").exit_code == 2

    def test_round_trip(self):
        gid = run("random", "--n", "9", "--p", "0.4", "--seed", "5").output.strip()
        doc = run("id", "decode", gid).output
        back = run("id", "encode", doc).output.strip()
        assert back == gid


class TestRandom:
    def test_deterministic(self):
        a = run("random", "--n", "10", "--p", "0.3", "--seed", "11").output
        b = run("random", "--n", "10", "--p", "0.3", "--seed", "11").output
        assert a == b

    def test_json_format(self):
        res = run("random", "--n", "4", "--p", "0.0", "--seed", "1", "--format", "json")
        doc = json.loads(res.output)
        assert doc == {"id": "4:00", "n": 4, "p": 0.0, "seed": 1}

    def test_requires_seed(self):
        assert run("random", "--n", "4", "--p", "0.5").exit_code == 2


def test_version_flag():
    res = run("--version")
    assert res.exit_code == 0
    assert "gsv" in res.output
