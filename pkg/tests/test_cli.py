"""Command-line behavior: reports, exit codes, golden outputs."""

import json

import pytest

from t0kit.cli import main
from t0kit.constructions import find_homeomorphism, product
from t0kit.finite_space import chain, sigma2
from t0kit.spacefile import parse_document, parse_space

SIGMA2 = "space S\npoints a b\nle a b\n"
CHAIN3 = "space C3\npoints p q r\nle p q\nle q r\n"


@pytest.fixture
def sigma2_file(tmp_path):
    f = tmp_path / "sigma2.space"
    f.write_text(SIGMA2)
    return str(f)


@pytest.fixture
def chain3_file(tmp_path):
    f = tmp_path / "c3.space"
    f.write_text(CHAIN3)
    return str(f)


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_check_all_seven_properties(capsys, sigma2_file):
    code, tree = run_json(capsys, ["check", sigma2_file])
    # every property holds except t1, and that drives the exit code
    assert code == 1
    props = tree["properties"]
    assert sorted(props) == sorted(
        ["sober", "cosober", "strongd", "kbsober", "owf", "t0", "t1"]
    )
    assert all(props[p]["holds"] for p in props if p != "t1")
    assert props["t1"]["holds"] is False
    assert props["t1"]["witness"]["comparable_pair"] == [0, 1]
    assert props["sober"]["caps"]["carrier_cap"] >= 1  # caps echoed


def test_check_single_property_exit_zero(capsys, sigma2_file):
    code, tree = run_json(capsys, ["check", sigma2_file, "--property", "sober"])
    assert code == 0
    assert list(tree["properties"]) == ["sober"]


def test_check_text_format(capsys, sigma2_file):
    assert main(["check", sigma2_file, "--property", "t0"]) == 0
    out = capsys.readouterr().out
    assert "space: S" in out and "holds: True" in out


def test_construct_product_document_parses(capsys, sigma2_file, chain3_file):
    assert main(["construct", "product", sigma2_file, chain3_file]) == 0
    text = capsys.readouterr().out
    doc = parse_space(text)
    assert doc.space.n == 6
    expected = product([sigma2(), chain(3)]).space
    assert find_homeomorphism(doc.space, expected) is not None
    assert "a_p" in doc.point_names


def test_construct_subspace(capsys, chain3_file):
    assert main(["construct", "subspace", chain3_file, "--points", "q,r"]) == 0
    doc = parse_space(capsys.readouterr().out)
    assert doc.point_names == ("q", "r")
    assert find_homeomorphism(doc.space, sigma2()) is not None


def test_construct_sobrify_routes(capsys, chain3_file):
    code, tree = run_json(capsys, ["construct", "sobrify", chain3_file])
    assert code == 0
    assert tree["route"] == "irreducible-closed-sets"
    doc = parse_space(tree["document"])
    assert find_homeomorphism(doc.space, chain(3)) is not None  # already sober
    code2, tree2 = run_json(
        capsys, ["construct", "sobrify", chain3_file, "--route", "bclosure"]
    )
    assert code2 == 0
    doc2 = parse_space(tree2["document"])
    assert find_homeomorphism(doc2.space, chain(3)) is not None


def test_construct_bclosure(capsys, chain3_file):
    code, tree = run_json(
        capsys, ["construct", "bclosure", chain3_file, "--points", "p,r"]
    )
    assert code == 0
    assert tree["b_closure"] == ["p", "r"]  # chain pairs are b-closed
    assert tree["is_b_closed"] is True


def test_construct_reflect_found(capsys, chain3_file):
    code, tree = run_json(
        capsys, ["construct", "reflect", chain3_file, "--class", "sober"]
    )
    assert code == 0
    assert tree["found"] is True and tree["route"] == "identity"
    assert tree["universal_property"]["holds"] is True


def test_construct_reflect_not_found(capsys, chain3_file):
    # no best two-point approximation of a three-chain exists
    code, tree = run_json(
        capsys,
        ["construct", "reflect", chain3_file, "--class", "at_most_two_points"],
    )
    assert code == 1
    assert tree["found"] is False


def test_corpus_run_matches_goldens(capsys):
    code, tree = run_json(capsys, ["corpus", "run", "--bound", "12"])
    assert code == 0
    assert tree["matched"] == tree["total"] == 13
    by_name = {r["check"]: r for r in tree["rows"]}
    owf = by_name["cofinite naturals: open well-filtered"]
    assert owf["verdict"] == "Refuted" and owf["match"] is True
    assert "witness" in owf["report"]
    assert all("seconds" in r for r in tree["rows"])


def test_corpus_text_summary(capsys):
    assert main(["corpus", "run", "--bound", "12"]) == 0
    out = capsys.readouterr().out
    assert "corpus: 13 of 13 matched" in out
    assert "witness:" in out  # refutations print their certificates


def test_enumerate_where_filter(capsys):
    code, tree = run_json(capsys, ["enumerate", "--size", "3", "--where", "!t1"])
    assert code == 0
    assert tree["total"] == 5 and tree["matched"] == 4
    code2, tree2 = run_json(
        capsys,
        ["enumerate", "--size", "3", "--where", "sober & !(t1 | cosober)"],
    )
    assert code2 == 0 and tree2["matched"] == 0
    code3, tree3 = run_json(capsys, ["enumerate", "--size", "2"])
    assert code3 == 0 and tree3["matched"] == tree3["total"] == 2


def test_export_dot_golden(capsys, sigma2_file):
    assert main(["export", sigma2_file, "--dot"]) == 0
    out = capsys.readouterr().out
    assert out == (
        "digraph S {\n"
        "  rankdir=BT;\n"
        '  0 [label="a"];\n'
        '  1 [label="b"];\n'
        "  0 -> 1;\n"
        "}\n"
    )


def test_exit_codes(capsys, tmp_path):
    assert main(["check", str(tmp_path / "missing.space")]) == 64
    bad = tmp_path / "bad.space"
    bad.write_text("space Z\npoints a b\nle a b\nle b a\n")
    assert main(["check", str(bad)]) == 2
    assert main(["enumerate", "--size", "9"]) == 3
    assert main(["enumerate", "--size", "3", "--where", "sober &"]) == 64
    assert main(["enumerate", "--size", "3", "--where", "shiny"]) == 64
    assert main(["bogus"]) == 64
    assert main(["check"]) == 64
    err = capsys.readouterr().err
    assert "usage error" in err and "cap exceeded" in err and "error:" in err


def test_export_requires_dot_flag(capsys, sigma2_file):
    assert main(["export", sigma2_file]) == 64


def test_construct_points_validation(capsys, chain3_file):
    assert main(["construct", "bclosure", chain3_file, "--points", "p,zz"]) == 2
    assert main(["construct", "bclosure", chain3_file, "--points", ""]) == 64
