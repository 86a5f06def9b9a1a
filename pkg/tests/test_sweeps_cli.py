from __future__ import annotations

import io
import json

import pytest

from indom.cli import main
from indom.families import BadGraphSpec, base_b1, build_bad, example_graph, k23, k33, path, prism
from indom.graph import disjoint_union
from indom.graph6 import decode_graph6, encode_graph6
from indom.recognition import contains_subgraph
from indom.solver import i_number
from indom.sweeps import (
    cmd_verify_cubic,
    cmd_verify_dorbec,
    cmd_verify_props,
    cmd_verify_subcubic,
    parse_shard,
)
from indom.theorems import (
    check_domination_cubic,
    check_three_eighths,
    check_three_eighths_k23_free,
    check_total_weight,
    check_two_fifths,
    check_weight_k23_free,
    is_k33,
    is_prism5,
)


def _strip_times(obj):
    if isinstance(obj, dict):
        return {k: _strip_times(v) for k, v in obj.items() if k != "wall_time"}
    if isinstance(obj, list):
        return [_strip_times(v) for v in obj]
    return obj


def _graphs(records):
    return [decode_graph6(r["graph6"]) for r in records]


# -- instance checkers ------------------------------------------------------


def test_checkers_on_exceptions():
    assert not check_three_eighths(k33()).applies
    assert not check_three_eighths(prism(5)).applies
    assert check_two_fifths(prism(5)).tight
    assert not check_two_fifths(k33()).applies
    assert check_domination_cubic(k33()).holds
    assert check_three_eighths_k23_free(prism(4)).holds


def test_checker_integer_arithmetic():
    c = check_three_eighths(prism(4))
    assert (c.lhs, c.rhs) == (8 * i_number(prism(4)), 24)


def test_weight_checkers():
    P4 = path(4)
    c = check_weight_k23_free(P4)
    assert c.applies and (c.lhs, c.rhs) == (16, 18)
    assert not check_weight_k23_free(k23()).applies
    assert not check_total_weight(disjoint_union(k33(), path(2))).applies
    assert check_total_weight(base_b1().graph).tight


def test_recognisers():
    assert is_k33(k33().relabel([5, 4, 3, 2, 1, 0]))
    assert is_prism5(prism(5)) and not is_prism5(prism(4))


# -- sweeps -----------------------------------------------------------------


def test_cubic_sweep_to_six():
    rep = cmd_verify_cubic(6)
    main_rep, reed, lss = rep["reports"]
    assert [is_k33(g) for g in _graphs(main_rep["violations"])] == [True]
    assert reed["violations"] == [] and rep["ok"]


def test_cubic_sweep_to_ten():
    rep = cmd_verify_cubic(10)
    main_rep, reed, lss = rep["reports"]
    got = sorted("k33" if is_k33(g) else "prism5" if is_prism5(g) else encode_graph6(g) for g in _graphs(main_rep["violations"]))
    assert got == ["k33", "prism5"]
    assert [is_prism5(g) for g in _graphs(lss["equality"])] == [True]
    assert rep["counts"] == {"4": 1, "6": 2, "8": 5, "10": 19}
    assert all(r.get("replayed") for r in main_rep["violations"] + main_rep["equality"])


def test_cubic_sweep_rejects_large():
    with pytest.raises(ValueError):
        cmd_verify_cubic(16)


def test_shards_partition_the_sweep():
    full = cmd_verify_cubic(10)
    parts = [cmd_verify_cubic(10, shard=f"{i}/3") for i in range(3)]
    for j in range(3):
        assert sum(p["reports"][j]["checked"] for p in parts) == full["reports"][j]["checked"]
        merged = sorted(r["graph6"] for p in parts for r in p["reports"][j]["violations"])
        assert merged == sorted(r["graph6"] for r in full["reports"][j]["violations"])


def test_parse_shard():
    assert parse_shard(None) == (0, 1)
    assert parse_shard("2/5") == (2, 5)
    for bad in ("5/5", "a/b", "1", "-1/3"):
        with pytest.raises(ValueError):
            parse_shard(bad)


def test_subcubic_sweep_small():
    from indom.canon import canonical_form

    rep = cmd_verify_subcubic(6)
    assert rep["ok"] and rep["violations"] == []
    forms = {canonical_form(g) for g in _graphs(rep["equality"])}
    assert canonical_form(base_b1().graph) in forms
    assert all(r["replayed"] for r in rep["equality"])


def test_subcubic_k23_margin():
    rep = cmd_verify_subcubic(5)
    assert rep["ok"]
    from indom.recognition import weight_report

    assert weight_report(k23()).margin == 2


def test_subcubic_ten_needs_flag():
    with pytest.raises(ValueError):
        cmd_verify_subcubic(10)


def test_dorbec_sweep_small():
    rep = cmd_verify_dorbec(7)
    assert rep["ok"] and rep["checked"] > 0 and rep["skipped"] > 0
    for g in _graphs(rep["equality"]):
        assert not contains_subgraph(g, k23())


def test_parallel_matches_serial():
    a = cmd_verify_subcubic(7, jobs=1)
    b = cmd_verify_subcubic(7, jobs=2)
    assert _strip_times(a) == _strip_times(b)


def test_props_quick():
    rep = cmd_verify_props(trials=10, seed=1)
    assert rep["ok"] and {s["suite"] for s in rep["suites"]} >= {"removal-cost", "unit-attachment", "bad-graph", "templates"}
    with pytest.raises(ValueError):
        cmd_verify_props(trials=0)


def test_replay_determinism():
    assert _strip_times(cmd_verify_props(trials=5, seed=3)) == _strip_times(cmd_verify_props(trials=5, seed=3))
    assert _strip_times(cmd_verify_cubic(8)) == _strip_times(cmd_verify_cubic(8))


# -- command line -----------------------------------------------------------


def _run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_solve_k23(capsys, monkeypatch):
    code, out, _ = _run(capsys, ["solve"], encode_graph6(k23()) + "\n", monkeypatch)
    data = json.loads(out)
    assert code == 0 and (data["i"], data["w"]) == (2, 18)


def test_cli_solve_example_margin(capsys, tmp_path):
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(example_graph("fig9a")) + "\n")
    code, out, _ = _run(capsys, ["solve", str(f)])
    assert code == 0 and json.loads(out)["margin"] == 0


def test_cli_solve_edge_list(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("4\n0 1\n1 2\n2 3\n")
    code, out, _ = _run(capsys, ["solve", "--format", "edges", str(f)])
    assert code == 0 and json.loads(out)["i"] == 2


def test_cli_solve_malformed(capsys, monkeypatch):
    code, _, err = _run(capsys, ["solve"], "not a graph!\n", monkeypatch)
    assert code == 2 and "ParseError" in err


def test_cli_solve_degree_error(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("5\n0 1\n0 2\n0 3\n0 4\n")
    code, _, err = _run(capsys, ["solve", "--format", "edges", str(f)])
    assert code == 2 and "DegreeExceedsThree" in err


def test_cli_gen_bad(capsys):
    code, out, _ = _run(capsys, ["gen", "bad", "--k", "4", "--seed", "7"])
    G = decode_graph6(out.strip())
    from indom.recognition import weight_report

    r = weight_report(G)
    assert code == 0 and G.n == 21 and 8 * r.i == r.omega


def test_cli_gen_bad_explicit_and_invalid(capsys):
    code, out, _ = _run(capsys, ["gen", "bad", "--k", "2", "--attachments", "0"])
    assert code == 0 and decode_graph6(out.strip()) == build_bad(BadGraphSpec(2, (0,))).graph
    code, _, err = _run(capsys, ["gen", "bad", "--k", "2", "--attachments", "1"])
    assert code == 2 and "InvalidSpec" in err


def test_cli_gen_example(capsys):
    code, out, _ = _run(capsys, ["gen", "example", "fig10b"])
    assert code == 0 and decode_graph6(out.strip()).n == 9


def test_cli_gen_extremal(capsys):
    code, out, _ = _run(capsys, ["gen", "extremal", "fig2b", "--blocks", "2"])
    G = decode_graph6(out.strip())
    assert code == 0 and G.is_cubic() and 8 * i_number(G) == 3 * G.n
    code, _, err = _run(capsys, ["gen", "extremal", "fig2b", "--blocks", "1"])
    assert code == 2 and "InvalidBlockCount" in err


def test_cli_gen_enumeration_and_named(capsys):
    code, out, _ = _run(capsys, ["gen", "cubic", "--n", "8"])
    assert code == 0 and len(out.split()) == 5
    code, out, _ = _run(capsys, ["gen", "named", "prism", "--m", "5", "--format", "edges"])
    assert code == 0 and out.splitlines()[0] == "10"


def test_cli_gen_troublesome(capsys):
    code, out, _ = _run(capsys, ["gen", "troublesome", "--type", "1", "--k", "2"])
    assert code == 0 and decode_graph6(out.strip()).n == 12


def test_cli_verify_exit_codes_and_out(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = _run(capsys, ["verify-cubic", "--max-n", "10", "--out", str(out_file)])
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["ok"] and len(data["reports"][0]["violations"]) == 2
    code, out, _ = _run(capsys, ["verify-subcubic", "--max-n", "6", "--json"])
    assert code == 0 and json.loads(out)["ok"]
    code, _, _ = _run(capsys, ["verify-subcubic", "--max-n", "10"])
    assert code == 2
    code, out, _ = _run(capsys, ["verify-dorbec", "--max-n", "6", "--shard", "1/2"])
    assert code == 0 and "OK" in out
    code, out, _ = _run(capsys, ["verify-props", "--trials", "3", "--seed", "0"])
    assert code == 0


def test_cli_json_is_byte_identical_modulo_time(capsys):
    _, a, _ = _run(capsys, ["verify-props", "--trials", "4", "--seed", "2", "--json"])
    _, b, _ = _run(capsys, ["verify-props", "--trials", "4", "--seed", "2", "--json"])
    strip = lambda s: [ln for ln in s.splitlines() if "wall_time" not in ln]  # noqa: E731
    assert strip(a) == strip(b)


def test_cli_violation_exit_code(capsys, monkeypatch):
    import indom.cli as cli

    monkeypatch.setattr(cli, "cmd_verify_dorbec", lambda *a, **k: {"ok": False, "theorem": "t", "checked": 1,
                                                                    "violations": [{}], "unexpected": 1, "equality": []})
    code, out, _ = _run(capsys, ["verify-dorbec", "--max-n", "4"])
    assert code == 1 and "FAILED" in out


def test_records_replay_through_solve():
    rep = cmd_verify_cubic(10)
    from indom.recognition import weight_report

    for r in rep["reports"][0]["violations"]:
        G = decode_graph6(r["graph6"])
        assert 8 * weight_report(G).i == r["lhs"]
