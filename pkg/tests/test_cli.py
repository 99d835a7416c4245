import json
from pathlib import Path

import pytest

from antimorph.cli import main
from antimorph.reports import parse_records


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_anti_factorization_bundled_map(capsys):
    code, out, _ = run_cli(capsys, "verify", "anti-factorization",
                           "--group", "s3", "--normal", "a3",
                           "--map", "signstar.map")
    assert code == 0
    assert "anti-factorization/unique" in out
    assert "FAIL" not in out


def test_verify_with_records_format(capsys):
    code, out, _ = run_cli(capsys, "--format", "records",
                           "verify", "anti-hom", "--map", "signstar.map")
    assert code == 0
    bundle = parse_records(out)
    assert bundle.all_passed
    assert any(r.check_id.startswith("anti-homomorphism/") for r in bundle.records)


def test_verify_second_and_third(capsys):
    code, _, _ = run_cli(capsys, "verify", "second-anti-iso", "--group", "d4",
                         "--sub-b", "rot", "--sub-c", "rot2")
    assert code == 0
    code, _, _ = run_cli(capsys, "verify", "third-anti-iso", "--group", "s3",
                         "--subgroup", "s12", "--normal", "a3")
    assert code == 0


def test_verify_with_explicit_member_list(capsys):
    code, _, _ = run_cli(capsys, "verify", "third-anti-iso", "--group", "s3",
                         "--subgroup", "0,1", "--normal", "0,3,4")
    assert code == 0


def test_enum_subcommands(capsys):
    code, out, _ = run_cli(capsys, "enum-homs", "--source", "s3",
                           "--target", "s3")
    assert code == 0
    assert "# total 10" in out
    code, out, _ = run_cli(capsys, "enum-antihoms", "--source", "z2",
                           "--target", "z2")
    assert code == 0
    assert "# total 2" in out
    assert "variance anti" in out


def test_validate_subcommand(tmp_path, capsys):
    good = tmp_path / "k4.grp"
    good.write_text("group k4 order 2\n0 1\n1 0\n")
    bad = tmp_path / "broken.grp"
    bad.write_text("group broken order 2\n0 1\n0 1\n")
    code, out, _ = run_cli(capsys, "validate", str(good), str(bad))
    assert code == 1
    assert "[PASS]" in out and "[FAIL]" in out


def test_corpus_directory_loading(tmp_path, capsys):
    (tmp_path / "k9.grp").write_text(
        "group k9 order 3\n0 1 2\n1 2 0\n2 0 1\n")
    code, out, _ = run_cli(capsys, "--corpus", str(tmp_path),
                           "enum-homs", "--source", "k9", "--target", "k9")
    assert code == 0
    assert "# total 3" in out


def test_cat_subcommands(capsys):
    code, out, _ = run_cli(capsys, "cat", "caf", "--category", "arrow")
    assert code == 0 and out.startswith("factorization arrow")
    code, out, _ = run_cli(capsys, "cat", "anti", "--category", "arrow")
    assert code == 0 and out.startswith("category arrow^an")
    code, out, _ = run_cli(capsys, "cat", "equiv", "--category", "meet")
    assert code == 0
    code, out, _ = run_cli(capsys, "cat", "products", "--category", "meet",
                           "--family", "x,y")
    assert code == 0
    assert "anti-product-uniqueness" in out


def test_cat_fca_of_file(tmp_path, capsys):
    code, fct_text, _ = run_cli(capsys, "cat", "caf", "--category", "chain3")
    assert code == 0
    path = tmp_path / "chain3.fct"
    path.write_text(fct_text)
    code, out, _ = run_cli(capsys, "cat", "fca", "--input", str(path))
    assert code == 0
    assert out.startswith("category chain3")


def test_audit_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "audit", "natural-an-map", "--ring", "z4",
                           "--ideal", "even")
    assert code == 0
    code, out, _ = run_cli(capsys, "audit", "pointwise-ring", "--ring", "t2f2")
    assert code == 1  # the pointwise claim fails here, and the audit says so
    assert "witness" in out


def test_unknown_name_is_a_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "anti-hom", "--map", "nosuch.map")
    assert code == 2
    assert "error:" in err


def test_malformed_file_does_not_crash(tmp_path, capsys):
    bad = tmp_path / "bad.grp"
    bad.write_text("group bad order 2\n0 1\n")
    code, out, _ = run_cli(capsys, "validate", str(bad))
    assert code == 1


def test_report_records_are_deterministic(capsys):
    args = ["--format", "records", "verify", "groups-vs-star",
            "--objects", "z2,s3"]
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    for line in out1.strip().splitlines():
        json.loads(line)
