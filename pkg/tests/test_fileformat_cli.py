import io

import pytest

from skewbrace import parse_brace_file, serialize_brace, trivial_brace
from skewbrace.cli import main
from skewbrace.constructions import ThetaTwistSpec, theta_twist_digroup
from skewbrace.errors import ParseError, ValidationError
from skewbrace.fileformat import parse_ybe, serialize_ybe
from skewbrace.groups import cyclic_group
from skewbrace.ybe import build_r

Z2_TEXT = "skb1\n2\n0 1\n1 0\n0 1\n1 0\n"


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def s3_file(tmp_path, triv_s3):
    p = tmp_path / "s3.skb"
    p.write_text(serialize_brace(triv_s3))
    return str(p)


@pytest.fixture
def theta_file(tmp_path):
    p = tmp_path / "theta.skb"
    p.write_text(serialize_brace(theta_twist_digroup(ThetaTwistSpec.cyclic(3, 1))))
    return str(p)


# -- file format --------------------------------------------------------------


def test_serialize_order_two():
    assert serialize_brace(trivial_brace(cyclic_group(2))) == Z2_TEXT


def test_round_trip(corpus):
    for b in corpus:
        d = parse_brace_file(serialize_brace(b))
        assert d == b.digroup
        assert serialize_brace(d) == serialize_brace(b)


def test_comments_and_blank_lines():
    text = "# hello\nskb1\n\n2\n0 1\n# mid\n1 0\n0 1\n1 0\n"
    assert serialize_brace(parse_brace_file(text)) == Z2_TEXT


def test_out_of_range():
    with pytest.raises(ParseError) as exc:
        parse_brace_file("skb1\n2\n0 1\n1 2\n0 1\n1 0\n")
    assert exc.value.line == 4
    assert "out-of-range" in exc.value.reason


@pytest.mark.parametrize(
    "text",
    [
        "",
        "skb2\n2\n0 1\n1 0\n0 1\n1 0\n",
        "skb1\nx\n",
        "skb1\n2\n0 1\n1 0\n0 1\n",
        "skb1\n2\n0 1 1\n1 0\n0 1\n1 0\n",
        "skb1\n2\n0 a\n1 0\n0 1\n1 0\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_brace_file(text)


def test_identity_not_zero():
    with pytest.raises(ValidationError) as exc:
        parse_brace_file("skb1\n2\n0 1\n1 0\n1 0\n0 1\n")
    assert exc.value.reason == "identity-not-zero"


def test_not_a_group():
    with pytest.raises(ValidationError) as exc:
        parse_brace_file("skb1\n2\n0 1\n1 1\n0 1\n1 0\n")
    assert exc.value.reason == "not-a-group"


def test_ybe_round_trip(corpus):
    for b in corpus:
        rep = build_r(b)
        n, pairs = parse_ybe(serialize_ybe(rep))
        assert n == b.order and tuple(pairs) == rep.r_table


# -- CLI ----------------------------------------------------------------------


def test_cli_verify(s3_file, theta_file):
    assert run_cli("verify", s3_file) == (0, "brace: OK\n", "")
    code, out, _ = run_cli("verify", theta_file)
    assert code == 1
    assert out == "brace: FAIL\nwitness: a=1 b=1 c=4\n"


def test_cli_ideals(s3_file):
    assert run_cli("ideals", s3_file) == (0, "0\n0,1,2\n0,1,2,3,4,5\n", "")


def test_cli_commutator(s3_file):
    full = "0,1,2,3,4,5"
    code, out, _ = run_cli("commutator", s3_file, "--ideal-a", full, "--ideal-b", full)
    assert code == 0
    assert out == "set1: 0,1,2\nset2: 0,1,2\nset3: 0\ncommutator: 0,1,2\n"


def test_cli_centralizer_center(s3_file):
    assert run_cli("centralizer", s3_file, "--ideal", "0,1,2") == (0, "centralizer: 0,1,2\n", "")
    assert run_cli("center", s3_file) == (0, "center: 0\n", "")


def test_cli_huq_smith(s3_file):
    code, out, _ = run_cli("huq-smith", s3_file)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 10
    assert lines[5] == "I_R=0,1,2 I_S=0,1,2,3,4,5 huq=false smith=false"
    assert lines[-1] == "huq=smith: holds"


def test_cli_huq_smith_digroup(tmp_path):
    p = tmp_path / "t5.skb"
    p.write_text(serialize_brace(theta_twist_digroup(ThetaTwistSpec.cyclic(5, 1))))
    code, out, _ = run_cli("huq-smith", str(p))
    assert code == 1
    assert "huq=true smith=false" in out
    assert out.endswith("huq=smith: fails\n")


def test_cli_ybe_export(s3_file, tmp_path, triv_s3):
    dest = tmp_path / "r.ybe"
    code, out, _ = run_cli("ybe", s3_file, "--export", str(dest))
    assert code == 0
    assert out == "ybe: bijective=true braid=true nondegenerate=true\n"
    n, pairs = parse_ybe(dest.read_text())
    assert tuple(pairs) == build_r(triv_s3).r_table


def test_cli_quotient(s3_file):
    code, out, _ = run_cli("quotient", s3_file, "--ideal", "0,1,2")
    assert code == 0
    assert out == "# projection: 0,0,0,1,1,1\n" + Z2_TEXT


def test_cli_counterexample_z5():
    code, out, _ = run_cli("counterexample", "--base", "5", "--a", "1")
    assert code == 0
    assert out == (
        "Huq: commute = true; Smith connector: absent; "
        "witness: x=(0,1) y=(1,1) z=(2,1) star=(1,1) circ=(3,1)\n"
    )


def test_cli_enumerate(tmp_path):
    assert run_cli("enumerate", "--order", "4", "--up-to-iso") == (0, "order 4: 4 braces\n", "")
    d = tmp_path / "corpus"
    code, out, _ = run_cli("enumerate", "--order", "6", "--out-dir", str(d))
    assert code == 0
    assert out == f"order 6: 10 braces\nwrote 10 files to {d}\n"
    names = sorted(p.name for p in d.iterdir())
    assert names[0] == "brace_n6_k0.skb" and len(names) == 10
    for p in d.iterdir():
        assert run_cli("verify", str(p))[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["verify"],
        ["verify", "a.skb", "--nope"],
        ["commutator", "F", "--ideal-a", "x", "--ideal-b", "0"],
        ["enumerate", "--order", "ten"],
    ],
)
def test_cli_usage_errors(argv, s3_file):
    argv = [s3_file if a == "F" else a for a in argv]
    code, out, err = run_cli(*argv)
    assert code == 2
    assert out == ""
    assert "usage:" in err


def test_cli_bad_inputs(s3_file, tmp_path):
    assert run_cli("verify", str(tmp_path / "missing.skb"))[0] == 2
    bad = tmp_path / "bad.skb"
    bad.write_text("skb1\n2\n0 1\n1 2\n0 1\n1 0\n")
    code, _, err = run_cli("verify", str(bad))
    assert code == 2 and "out-of-range" in err
    assert run_cli("commutator", s3_file, "--ideal-a", "0,3", "--ideal-b", "0")[0] == 2
    assert run_cli("centralizer", s3_file, "--ideal", "0,9")[0] == 2
    assert run_cli("counterexample", "--base", "2", "--a", "1")[0] == 2
    assert run_cli("enumerate", "--order", "9")[0] == 2


def test_cli_deterministic(s3_file):
    assert run_cli("huq-smith", s3_file) == run_cli("huq-smith", s3_file)


def test_cli_matches_library(corpus, tmp_path):
    from skewbrace import all_ideals, center

    for k, b in enumerate(corpus):
        p = tmp_path / f"b{k}.skb"
        p.write_text(serialize_brace(b))
        _, out, _ = run_cli("ideals", str(p))
        assert out.splitlines() == [",".join(map(str, i)) for i in all_ideals(b)]
        _, out, _ = run_cli("center", str(p))
        assert out == "center: " + ",".join(map(str, center(b))) + "\n"
