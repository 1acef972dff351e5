import csv
import io
import json
import subprocess
import sys

import pytest

from wolstenholme import cli
from wolstenholme.search import SearchHit


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_compute_w_example():
    code, out, _ = run("compute", "w", "--n", "5", "--mod-exp", "3")
    assert code == 0
    assert out.strip() == "W_5 ≡ 1 (mod 5^3)"


def test_compute_m_json():
    code, out, _ = run("compute", "m", "--n", "7", "--mod-exp", "3", "--format", "json-lines")
    assert code == 0
    assert json.loads(out) == {"quantity": "M", "n": 7, "mod_exp": 3, "value": "1", "modulus": "343"}


def test_compute_bernoulli_and_quotient():
    assert run("compute", "bernoulli", "--p", "7")[1].strip() == "B_4 ≡ 3 (mod 7)"
    assert run("compute", "bernoulli", "--p", "11", "--m", "1")[1].strip() == "B_1 ≡ 5 (mod 11)"
    assert run("compute", "fermat-quotient", "--p", "7")[1].strip() == "q_7 ≡ 2 (mod 7)"


def test_compute_sums():
    code, out, _ = run("compute", "sums", "--p", "7", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    by = {r["quantity"]: r for r in rows}
    assert by["S_a"]["modulus"] == "343"
    assert by["sum 1/(i j^2)"]["value"] == "1"
    assert by["T_c"]["value"] == "0"


def test_search_wprimes_human():
    code, out, err = run("search", "wprimes", "--lo", "16000", "--hi", "17000")
    assert code == 0
    assert out == "W_16843 ≡ 1 (mod 16843^4)\n"
    assert "units" in err  # progress goes to the status stream


def test_search_quiet_has_no_progress():
    _, _, err = run("search", "wprimes", "--lo", "5", "--hi", "300", "--quiet")
    assert err == ""


def test_json_lines_round_trip():
    code, out, _ = run("search", "pseudoprimes", "--shape", "semiprime", "--bound", "100000", "--format", "json-lines", "--quiet")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    hit = SearchHit.from_json(lines[0])
    assert hit.n == 27173 and hit.to_json() == lines[0]
    rec = json.loads(lines[0])
    assert {"n", "family", "kind", "order", "factors", "residual", "modulus", "confirmed"} <= set(rec)


def test_search_shapes():
    code, out, _ = run("search", "pseudoprimes", "--shape", "any", "--bound", "30000", "--quiet")
    assert code == 0 and out.startswith("W_27173")
    code, out, _ = run("search", "pseudoprimes", "--family", "m", "--shape", "any", "--bound", "2000", "--quiet")
    assert code == 0 and out == ""
    code, out, _ = run("search", "pseudoprimes", "--shape", "square", "--bound", "500", "--quiet")
    assert code == 0 and out == ""


def test_worker_count_gives_identical_output():
    argv = ["search", "pseudoprimes", "--bound", "300000", "--format", "json-lines", "--quiet"]
    outs = {run(*argv, "--workers", str(w))[1] for w in (1, 2, 3)}
    assert len(outs) == 1


def test_checkpoint_resume(tmp_path):
    ck = str(tmp_path / "s.ckpt")
    base = ["search", "pseudoprimes", "--bound", "300000", "--format", "json-lines", "--quiet", "--checkpoint", ck]
    code, out, err = run(*base, "--stop-after", "10")
    assert code == 0 and out == "" and "--resume" in err
    code, resumed, _ = run(*base, "--resume")
    assert code == 0
    assert resumed == run("search", "pseudoprimes", "--bound", "300000", "--format", "json-lines", "--quiet")[1]


def test_corrupt_checkpoint_exit_3(tmp_path):
    ck = tmp_path / "s.ckpt"
    base = ["search", "pseudoprimes", "--bound", "100000", "--quiet", "--checkpoint", str(ck)]
    run(*base, "--stop-after", "3")
    ck.write_text(ck.read_text().replace("next 3", "next 4"))
    code, _, err = run(*base, "--resume")
    assert code == 3 and "corrupt" in err


def test_verify_exit_codes():
    assert run("verify", "--statement", "wolst-cong", "--profile", "quick", "--quiet")[0] == 0
    code, out, _ = run("verify", "--statement", "thm3-wsq", "--profile", "quick", "--quiet", "--format", "json-lines")
    assert code == 1
    assert json.loads(out)["status"] == "fail"
    assert run("verify", "--statement", "w-reflect", "--profile", "quick", "--quiet")[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--statement", "nope"],
        ["compute", "w", "--n", "4"],
        ["compute", "w", "--n", "5", "--mod-exp", "9"],
        ["search", "wprimes", "--lo", "100", "--hi", "50"],
        ["search", "pseudoprimes", "--shape", "any", "--order", "2", "--bound", "100"],
        ["search", "pseudoprimes", "--bound", "1000", "--resume"],
        ["search", "pseudoprimes", "--bound", "1000", "--workers", "0"],
        ["compute", "bernoulli", "--p", "7", "--m", "6"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "wolstenholme", "compute", "w", "--n", "27173"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "W_27173 ≡ 1 (mod 27173)"
