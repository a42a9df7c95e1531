import hashlib
import json
import subprocess
import sys

import pytest

from planetrees import (InvariantViolation, ParseError, build_wheel_partition,
                        make_wheel, verify_partition)
from planetrees.cli_io import (RenderStyle, emit_edgelist, emit_partition,
                               emit_pointset, load_pointset, main,
                               parse_edgelist, parse_partition, parse_pointset,
                               render_svg)
from planetrees.presets import POINT_PRESETS, builtin_tree, figure_pointset

FIG2I_SVG_SHA = "9c03434cb3dccd8479ea11221b4579437343a91ec6d495a21d99706e8ac379da"


def fig2i_partition():
    return build_wheel_partition(builtin_tree("fig2i", 3), 3)


# ---------------------------------------------------------------------------
# text formats

def test_pointset_round_trip(wheel3):
    again = parse_pointset(emit_pointset(wheel3))
    assert again.points == wheel3.points
    assert again.config_tag == wheel3.config_tag
    assert again.labels == ("v0", "v1", "v2", "v3", "v4", "x")


def test_pointset_parse_example():
    text = """# four corners
pointset 4 general
0.0 0.0
1.0 0.0   # comments may trail
0.25 1.0
1.25 1.0
"""
    ps = parse_pointset(text)
    assert len(ps) == 4 and ps.config_tag == "general"
    assert ps.points[3] == (1.25, 1.0)


def test_pointset_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse_pointset("")
    assert exc.value.line == 1
    with pytest.raises(ParseError, match="bad header"):
        parse_pointset("points 4 general\n")
    with pytest.raises(ParseError, match="promises 2 points"):
        parse_pointset("pointset 2 general\n0 0\n")
    with pytest.raises(ParseError, match="want 'x y'"):
        parse_pointset("pointset 1 general\n0 0 0\n")
    with pytest.raises(ParseError) as exc:
        parse_pointset("pointset 1 general\nzero 0\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError, match="unknown config tag"):
        parse_pointset("pointset 2 blob\n0 0\n1 1\n")


def test_pointset_invariants():
    with pytest.raises(InvariantViolation, match="duplicate point"):
        parse_pointset("pointset 2 general\n1 1\n1 1\n")
    with pytest.raises(InvariantViolation, match="collinear triple"):
        parse_pointset("pointset 3 general\n0 0\n1 1\n2 2\n")
    with pytest.raises(InvariantViolation, match="wheel3 needs 6 points"):
        parse_pointset("pointset 2 wheel3\n0 0\n1 1\n")


def test_partition_round_trip(wheel3):
    p = fig2i_partition()
    again = parse_partition(emit_partition(p), wheel3)
    assert tuple(t.edges for t in again.trees) == tuple(t.edges for t in p.trees)
    assert verify_partition(again).ok


def test_partition_parse_errors(wheel3):
    with pytest.raises(ParseError, match="bad header"):
        parse_partition("tree 0\n0 1\n", wheel3)
    with pytest.raises(ParseError, match="on 4 points"):
        parse_partition("partition 4 2\n", wheel3)
    with pytest.raises(ParseError, match="expected 'tree 0'"):
        parse_partition("partition 6 3\ntree 1\n0 1\n", wheel3)
    with pytest.raises(ParseError, match="before any 'tree'"):
        parse_partition("partition 6 3\n0 1\n", wheel3)
    with pytest.raises(ParseError, match=r"edge \(0, 9\) invalid"):
        parse_partition("partition 6 1\ntree 0\n0 9\n", wheel3)
    with pytest.raises(ParseError, match="promises 3 trees"):
        parse_partition("partition 6 3\ntree 0\n0 1\n", wheel3)


def test_edgelist_round_trip():
    edges = ((2, 3), (0, 5), (1, 4))
    assert parse_edgelist(emit_edgelist(edges)) == ((0, 5), (1, 4), (2, 3))
    with pytest.raises(ParseError, match="bad edge"):
        parse_edgelist("0 x\n")


# ---------------------------------------------------------------------------
# packaged data and input resolution

def test_packaged_presets_match_programmatic():
    for name in POINT_PRESETS:
        packaged = load_pointset(name)
        built = figure_pointset(name)
        assert packaged.config_tag == built.config_tag, name
        assert packaged.points == built.points, name


def test_load_pointset_wheel_and_file(tmp_path, wheel3):
    assert load_pointset("wheel4").points == make_wheel(4).points
    f = tmp_path / "ps.txt"
    f.write_text(emit_pointset(wheel3))
    assert load_pointset(str(f)).points == wheel3.points
    with pytest.raises(ParseError, match="neither a file"):
        load_pointset("no-such-thing")


# ---------------------------------------------------------------------------
# rendering

def test_render_svg_partition():
    svg = render_svg(fig2i_partition())
    assert svg.count("<line ") == 15
    strokes = {part.split('"')[0] for part in svg.split('stroke="')[1:]}
    assert strokes == {"#d62728", "#1f77b4", "#2ca02c"}
    assert svg.count("<circle") == 6
    assert hashlib.sha256(svg.encode()).hexdigest() == FIG2I_SVG_SHA


def test_render_svg_deterministic_and_styled():
    p = fig2i_partition()
    assert render_svg(p) == render_svg(p)
    assert render_svg(p.trees[0]).count("<line ") == 5
    assert render_svg(p, RenderStyle(show_labels=False)).count("<text") == 0


# ---------------------------------------------------------------------------
# command line

def run_cli(*argv):
    return main(list(argv))


def test_cli_generate_and_halving(tmp_path, capsys):
    out = tmp_path / "w3.points"
    assert run_cli("generate", "--config", "wheel3", "--out", str(out)) == 0
    ps = parse_pointset(out.read_text())
    assert ps.config_tag == "wheel3"
    assert run_cli("halving", "--input", str(out)) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines == [f"{i} 5 0" for i in range(5)]


def test_cli_generate_usage_error(capsys):
    assert run_cli("generate") == 2
    assert "InvalidParameter" in capsys.readouterr().err


def test_cli_halving_labelings(capsys):
    assert run_cli("halving", "--input", "wheel3", "--labeling", "w") == 0
    assert capsys.readouterr().out.splitlines()[0] == "w 5"
    assert run_cli("halving", "--input", "wheel3", "--labeling", "h") == 1
    assert "NoHLabeling" in capsys.readouterr().err


def test_cli_classify(tmp_path, capsys):
    tree = tmp_path / "chair.edges"
    tree.write_text(emit_edgelist(builtin_tree("fig2i", 3)))
    assert run_cli("classify", "--input", "wheel3", "--tree", str(tree)) == 0
    out = capsys.readouterr().out
    assert "w_caterpillar: True" in out
    assert run_cli("classify", "--input", "wheel3", "--tree", str(tree), "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["w_caterpillar"] is True
    assert payload["p4_symmetric"]["type"] == 2


def test_cli_wheel_partition(tmp_path, wheel3, capsys):
    out = tmp_path / "parts"
    code = run_cli("wheel-partition", "--n", "3", "--tree", "builtin:fig2i",
                   "--out", str(out), "--svg")
    assert code == 0
    for i in range(3):
        assert (out / f"tree_{i}.edges").is_file()
    assert (out / "partition.svg").read_text().startswith("<svg")
    analysis = (out / "analysis.txt").read_text().splitlines()
    assert analysis[0] == "verify: pass"
    assert analysis[1] == "one_boundary_tree: 2"
    p = parse_partition((out / "partition.txt").read_text(), wheel3)
    assert verify_partition(p).ok


def test_cli_wheel_partition_rejects_path(tmp_path, capsys):
    tree = tmp_path / "p6.edges"
    tree.write_text(emit_edgelist(tuple((i, i + 1) for i in range(5))))
    code = run_cli("wheel-partition", "--n", "3", "--tree", str(tree),
                   "--out", str(tmp_path / "x"))
    assert code == 2
    assert "NotWCaterpillar" in capsys.readouterr().err


def test_cli_halving_partition(tmp_path, capsys):
    out = tmp_path / "t2"
    assert run_cli("halving-partition", "--input", "fig5", "--theorem", "2",
                   "--t", "1", "--out", str(out), "--json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["trees"] == 4 and payload["verify"] is True

    assert run_cli("halving-partition", "--input", "wheel3", "--theorem", "3",
                   "--r", "1", "--out", str(tmp_path / "t3")) == 1
    assert "HypothesisViolated" in capsys.readouterr().err

    assert run_cli("halving-partition", "--input", "wheel3", "--theorem", "3",
                   "--out", str(tmp_path / "t3b")) == 2
    assert "requires --r" in capsys.readouterr().err

    assert run_cli("halving-partition", "--input", "wheel7", "--theorem", "4",
                   "--r", "3", "--choices", "fig8", "--out", str(tmp_path / "t4")) == 0


def test_cli_choices_json(tmp_path, capsys):
    good = tmp_path / "choices.json"
    good.write_text(json.dumps({"star_side": "high", "extend_side": ["right"],
                                "line": [1, 5]}))
    out = tmp_path / "t3"
    assert run_cli("halving-partition", "--input", "fig6", "--theorem", "3",
                   "--r", "2", "--choices", str(good), "--out", str(out)) == 0
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"star": "high"}))
    assert run_cli("halving-partition", "--input", "fig6", "--theorem", "3",
                   "--r", "2", "--choices", str(bad), "--out", str(out)) == 2
    assert "unknown choices keys" in capsys.readouterr().err

    # inline JSON literal, no file needed
    assert run_cli("halving-partition", "--input", "wheel4", "--theorem", "4",
                   "--r", "2", "--choices", '{"type4": "Type2"}',
                   "--out", str(tmp_path / "t4")) == 0
    assert run_cli("halving-partition", "--input", "fig6", "--theorem", "3",
                   "--r", "2", "--choices", '{"line": [1, 5',
                   "--out", str(out)) == 2
    assert "bad choices JSON" in capsys.readouterr().err


def test_cli_verify_and_exit_codes(tmp_path, capsys):
    out = tmp_path / "parts"
    run_cli("wheel-partition", "--n", "3", "--tree", "builtin:fig2i", "--out", str(out))
    capsys.readouterr()
    part = out / "partition.txt"
    assert run_cli("verify", "--input", "wheel3", "--partition", str(part)) == 0
    assert capsys.readouterr().out.strip() == "pass"

    broken = tmp_path / "broken.txt"
    text = part.read_text().splitlines()
    # swap one edge between two trees: coverage holds, spanning breaks
    i23 = text.index("2 3")
    i12 = text.index("1 2")
    text[i23], text[i12] = text[i12], text[i23]
    broken.write_text("\n".join(text) + "\n")
    assert run_cli("verify", "--input", "wheel3", "--partition", str(broken),
                   "--json") == 1
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"] is False and payload["reason"] == "spanning"

    garbled = tmp_path / "garbled.txt"
    garbled.write_text("partition nope\n")
    assert run_cli("verify", "--input", "wheel3", "--partition", str(garbled)) == 2
    assert "ParseError" in capsys.readouterr().err


def test_cli_oracle(tmp_path, capsys):
    out = tmp_path / "oracle"
    assert run_cli("oracle", "--input", "wheel2", "--out", str(out), "--json") == 0
    assert json.loads(capsys.readouterr().out)["count"] == 6
    blocks = (out / "partitions.txt").read_text().split("partition 4 2")
    assert len([b for b in blocks if b.strip()]) == 6


def test_cli_render(tmp_path, capsys):
    tree = tmp_path / "chair.edges"
    tree.write_text(emit_edgelist(builtin_tree("fig2i", 3)))
    out = tmp_path / "t.svg"
    assert run_cli("render", "--input", "wheel3", "--tree", str(tree),
                   "--out", str(out)) == 0
    assert out.read_text().startswith("<svg")
    assert run_cli("render", "--input", "wheel3") == 2
    assert "InvalidParameter" in capsys.readouterr().err


def test_cli_unknown_subcommand():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cli_module_entrypoint(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "planetrees.cli_io", "halving", "--input", "wheel2"],
        capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip().splitlines() == [f"{i} 3 0" for i in range(3)]
