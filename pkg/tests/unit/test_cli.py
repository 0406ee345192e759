# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Unit tests for the command-line surface."""

import argparse

import pytest

from cli import EXIT_BUDGET, EXIT_FAILURE, EXIT_INPUT_ERROR, EXIT_OK, ChromaticConfig, main
from constructions import complete_r_graph
from errors import InvalidCliConfigError
from hgfile import parse_certificate, serialize_hypergraph


@pytest.mark.parametrize(
    "name,code,output",
    [
        pytest.param("loose_path_3_3.hg", EXIT_OK, "OK r=3 t=3\n", id="loose-path"),
        pytest.param("not_linear.hg", EXIT_FAILURE, "not-linear\n", id="not-linear"),
        pytest.param("fano.hg", EXIT_FAILURE, "has-berge-cycle\n", id="fano"),
    ],
)
def test_validate_tree(corpus_dir, capsys, name, code, output):
    """
    arrange: a corpus file.
    act: run validate-tree.
    assert: the exit code and the verdict line.
    """
    assert main(["validate-tree", str(corpus_dir / name)]) == code
    assert capsys.readouterr().out == output


def test_validate_tree_input_errors(write_file, tmp_path):
    """
    arrange: a garbage file and a missing path.
    act: run validate-tree on each.
    assert: exit code 2 for both.
    """
    garbage = write_file("garbage.hg", "this is not a hypergraph\n")

    assert main(["validate-tree", str(garbage)]) == EXIT_INPUT_ERROR
    assert main(["validate-tree", str(tmp_path / "missing.hg")]) == EXIT_INPUT_ERROR


def test_non_utf8_inputs_are_input_errors(corpus_dir, tmp_path):
    """
    arrange: a binary file.
    act: run validate-tree, chromatic and check-certificate on it.
    assert: exit code 2 each time.
    """
    binary = tmp_path / "binary.hg"
    binary.write_bytes(b"\xff\xfe\x00garbage\x80\x81")
    host = str(corpus_dir / "tight_gadget_3_2.hg")
    tree = str(corpus_dir / "tree_3_2.hg")

    assert main(["validate-tree", str(binary)]) == EXIT_INPUT_ERROR
    assert main(["chromatic", str(binary)]) == EXIT_INPUT_ERROR
    assert main(["check-certificate", host, tree, str(binary)]) == EXIT_INPUT_ERROR


def test_validate_tree_without_edges(write_file):
    """
    arrange: an edgeless hypergraph file.
    act: run validate-tree.
    assert: it is a semantic failure.
    """
    path = write_file("empty.hg", "3 0 3\n")

    assert main(["validate-tree", str(path)]) == EXIT_FAILURE


def test_color_or_embed_tight_gadget(corpus_dir, capsys, tmp_path):
    """
    arrange: K^(3)_4 and the 2-edge 3-tree.
    act: run color-or-embed writing the certificate, then check-certificate on it.
    assert: a validated coloring that re-validates after the round trip.
    """
    host = str(corpus_dir / "tight_gadget_3_2.hg")
    tree = str(corpus_dir / "tree_3_2.hg")
    out = tmp_path / "cert.txt"

    assert main(["color-or-embed", host, tree, "--out", str(out)]) == EXIT_OK
    assert capsys.readouterr().out == "COLORING\nvalid=true\n"
    assert parse_certificate(out.read_text()).kind == "coloring"
    assert main(["check-certificate", host, tree, str(out)]) == EXIT_OK
    assert capsys.readouterr().out == "COLORING\nvalid=true\n"


def test_color_or_embed_complete_3_graph_on_5_vertices(corpus_dir, capsys):
    """
    arrange: K^(3)_5 and the 2-edge 3-tree.
    act: run color-or-embed with an explicit matching t.
    assert: a validated embedding.
    """
    code = main(
        [
            "color-or-embed",
            str(corpus_dir / "complete_3_5.hg"),
            str(corpus_dir / "tree_3_2.hg"),
            "--t",
            "2",
        ]
    )

    assert code == EXIT_OK
    assert capsys.readouterr().out == "EMBEDDING\nvalid=true\n"


def test_color_or_embed_trace(corpus_dir, capsys):
    """
    arrange: K^(3)_4 and the 2-edge 3-tree.
    act: run color-or-embed with --trace.
    assert: recolor lines precede the verdict, starting with vertex 2 raised to color 2.
    """
    main(
        [
            "color-or-embed",
            str(corpus_dir / "tight_gadget_3_2.hg"),
            str(corpus_dir / "tree_3_2.hg"),
            "--trace",
        ]
    )

    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "recolor v=2 1->2 (s=2)"
    assert all(line.startswith("recolor v=") for line in lines[:-2])
    assert lines[-2:] == ["COLORING", "valid=true"]


@pytest.mark.parametrize(
    "tree,extra",
    [
        pytest.param("tree_2_2.hg", [], id="uniformity-mismatch"),
        pytest.param("tree_3_2.hg", ["--t", "3"], id="t-mismatch"),
        pytest.param("not_linear.hg", [], id="tree-rejected"),
        pytest.param("tree_3_2.hg", ["--root", "5"], id="bad-root"),
    ],
)
def test_color_or_embed_input_errors(corpus_dir, tree, extra):
    """
    arrange: inputs whose parameters disagree.
    act: run color-or-embed.
    assert: exit code 2.
    """
    argv = ["color-or-embed", str(corpus_dir / "tight_gadget_3_2.hg"), str(corpus_dir / tree)]

    assert main(argv + extra) == EXIT_INPUT_ERROR


def test_check_certificate_rejects_invalid_coloring(corpus_dir, write_file, capsys):
    """
    arrange: a coloring of K^(3)_4 leaving a monochromatic triple.
    act: run check-certificate.
    assert: exit code 1 and valid=false.
    """
    cert = write_file("bad.txt", "COLORING 2\n1 1 1 2\n")

    code = main(
        [
            "check-certificate",
            str(corpus_dir / "tight_gadget_3_2.hg"),
            str(corpus_dir / "tree_3_2.hg"),
            str(cert),
        ]
    )

    assert code == EXIT_FAILURE
    assert capsys.readouterr().out == "COLORING\nvalid=false\n"


@pytest.mark.parametrize(
    "name,first_line",
    [
        pytest.param("tight_gadget_3_3.hg", "3", id="complete-3-graph-6"),
        pytest.param("fano.hg", "3", id="fano"),
        pytest.param("tight_gadget_3_2.hg", "2", id="complete-3-graph-4"),
    ],
)
def test_chromatic(corpus_dir, capsys, name, first_line):
    """
    arrange: a corpus file.
    act: run chromatic.
    assert: the chromatic number, then a coloring line with one color per vertex.
    """
    assert main(["chromatic", str(corpus_dir / name)]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == first_line
    assert max(map(int, lines[1].split())) == int(first_line)


def test_chromatic_edgeless(write_file, capsys):
    """
    arrange: an edgeless file.
    act: run chromatic.
    assert: it prints 1.
    """
    path = write_file("edgeless.hg", "# no edges\n3 0 2\n")

    assert main(["chromatic", str(path)]) == EXIT_OK
    assert capsys.readouterr().out == "1\n1 1 1\n"


def test_chromatic_budget(write_file):
    """
    arrange: the complete graph on 20 vertices.
    act: run chromatic with the default cap and with a smaller one.
    assert: exit code 3.
    """
    path = write_file("k20.hg", serialize_hypergraph(complete_r_graph(20, 2)))

    assert main(["chromatic", str(path)]) == EXIT_BUDGET
    assert main(["chromatic", str(path), "--max-n", "5"]) == EXIT_BUDGET


def test_chromatic_rejects_bad_cap(corpus_dir):
    """
    arrange: a zero cap.
    act: run chromatic.
    assert: exit code 2.
    """
    assert main(["chromatic", str(corpus_dir / "fano.hg"), "--max-n", "0"]) == EXIT_INPUT_ERROR


def test_config_from_args_reports_field():
    """
    arrange: parsed arguments with a zero cap.
    act: load the chromatic configuration.
    assert: InvalidCliConfigError names the field.
    """
    args = argparse.Namespace(command="chromatic", path="x.hg", max_n=0, log_level="INFO")

    with pytest.raises(InvalidCliConfigError, match="max_n"):
        ChromaticConfig.from_args(args)


@pytest.mark.parametrize(
    "argv,header",
    [
        pytest.param(["tight-gadget", "--r", "3", "--t", "2"], "4 4 3", id="tight-gadget"),
        pytest.param(["star-example", "--n", "8"], "8 21 3", id="star-example"),
        pytest.param(["tree-path", "--r", "3", "--t", "3"], "7 3 3", id="tree-path"),
        pytest.param(["fano"], "7 7 3", id="fano"),
    ],
)
def test_generate_to_stdout(capsys, argv, header):
    """
    arrange: a family and its parameters.
    act: run generate.
    assert: a comment naming the family, then the expected header.
    """
    assert main(["generate", *argv]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith(f"# {argv[0]}")
    assert lines[1] == header


def test_generate_comment_line(capsys):
    """
    arrange: tight-gadget parameters.
    act: run generate.
    assert: the comment records the family and its parameters.
    """
    main(["generate", "tight-gadget", "--r", "3", "--t", "2"])

    assert capsys.readouterr().out.splitlines()[0] == "# tight-gadget r=3 t=2"


def test_generate_random_tree_is_deterministic(tmp_path):
    """
    arrange: two output paths.
    act: generate tree-random r=3 t=4 seed=7 twice.
    assert: the files are identical.
    """
    first, second = tmp_path / "a.hg", tmp_path / "b.hg"
    argv = ["generate", "tree-random", "--r", "3", "--t", "4", "--seed", "7"]

    assert main([*argv, "--out", str(first)]) == EXIT_OK
    assert main([*argv, "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    assert "# tree-random r=3 t=4 seed=7" in first.read_text()


@pytest.mark.parametrize(
    "argv",
    [
        pytest.param(["tight-gadget", "--r", "3"], id="missing-t"),
        pytest.param(["tree-path", "--r", "3"], id="tree-missing-t"),
        pytest.param(["complete", "--n", "2", "--r", "3"], id="r-above-n"),
        pytest.param(["hexagon"], id="unknown-family"),
        pytest.param(["tree-star", "--r", "1", "--t", "2"], id="bad-uniformity"),
    ],
)
def test_generate_rejects_bad_parameters(argv):
    """
    arrange: invalid family parameters.
    act: run generate.
    assert: exit code 2.
    """
    assert main(["generate", *argv]) == EXIT_INPUT_ERROR


def test_ramsey_upper(capsys):
    """
    arrange: r=2, k=3, t=2.
    act: run the enumeration.
    assert: key=value records ending with the census summary.
    """
    assert main(["ramsey", "--r", "2", "--k", "3", "--t", "2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert "total=1024" in lines
    assert "failures=0" in lines
    assert lines[-1] == "summary=1024 colorings, 0 failures"


def test_ramsey_lower(capsys):
    """
    arrange: r=3, k=3, t=2.
    act: run the construction check.
    assert: the construction has 4 vertices and certifies tightness.
    """
    assert main(["ramsey", "--r", "3", "--k", "3", "--t", "2", "--lower"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[-1] == (
        "summary=construction n=4, tightness certified"
    )


def test_ramsey_lower_beyond_tree_enumeration():
    """
    arrange: t = 5, above the tree enumeration limit.
    act: run the construction check.
    assert: exit code 2.
    """
    assert main(["ramsey", "--r", "2", "--k", "3", "--t", "5", "--lower"]) == EXIT_INPUT_ERROR


def test_ramsey_cap_without_slow():
    """
    arrange: r=2, k=4, t=3, which needs 45 host edges.
    act: run the enumeration.
    assert: exit code 3.
    """
    assert main(["ramsey", "--r", "2", "--k", "4", "--t", "3"]) == EXIT_BUDGET


def test_ramsey_with_tree_file(corpus_dir, capsys):
    """
    arrange: the 2-edge 3-tree file.
    act: run the (3, 3, 2) enumeration against it.
    assert: no failures.
    """
    tree = str(corpus_dir / "tree_3_2.hg")
    argv = ["ramsey", "--r", "3", "--k", "3", "--t", "2", "--tree", tree]

    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[-1] == "summary=1024 colorings, 0 failures"


def test_usage_errors():
    """
    arrange: a missing subcommand and a bad option value.
    act: run the CLI.
    assert: exit code 2.
    """
    assert main([]) == EXIT_INPUT_ERROR
    assert main(["ramsey", "--r", "two", "--k", "3", "--t", "2"]) == EXIT_INPUT_ERROR
