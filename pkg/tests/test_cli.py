import json

from apolar import load_table
from apolar.cli import run


def _run(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hf_pretty(capsys):
    code, out, err = _run(capsys, ["hf", "--form", "y0^4+y1^4", "--vars", "2"])
    assert code == 0
    assert "(1,2,2,2,1)" in out
    assert "field=p:2147483647" in out
    assert err == ""


def test_hf_json_embeds_provenance(capsys):
    code, out, _ = _run(
        capsys, ["hf", "--form", "y0^3+y1^3+y2^3", "--vars", "3", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "hf"
    assert payload["field"] == "p:2147483647"
    assert payload["seed"] == 0
    assert payload["version"]
    assert payload["values"] == [1, 3, 3, 1]


def test_hf_rational_field(capsys):
    code, out, _ = _run(
        capsys, ["hf", "--form", "1/2*y0^4 - y0*y1^3", "--vars", "2", "--field", "q"]
    )
    assert code == 0
    assert "(1,2,3,2,1)" in out


def test_hf_tsv_is_flat(capsys):
    code, out, _ = _run(
        capsys, ["hf", "--form", "y0^2", "--vars", "1", "--format", "tsv"]
    )
    assert code == 0
    rows = dict(line.split("\t") for line in out.strip().splitlines())
    assert rows["hf"] == "(1,1,1)"
    assert rows["command"] == "hf"


def test_hf_parse_error_exits_2(capsys):
    code, out, err = _run(capsys, ["hf", "--form", "y0^4 + y9", "--vars", "2"])
    assert code == 2
    assert out == ""
    assert "error:" in err


def test_usage_errors_exit_2(capsys):
    assert run(["no-such-command"]) == 2
    capsys.readouterr()
    assert run(["hf", "--vars", "2"]) == 2  # --form required
    capsys.readouterr()
    assert run(["hf", "--form", "y0^2", "--vars", "1", "--field", "p:6"]) == 2
    capsys.readouterr()
    assert run(["search-f", "--e", "3", "--r", "5"]) == 2
    capsys.readouterr()


def test_restrict_with_explicit_hyperplane(capsys):
    code, out, _ = _run(
        capsys,
        ["restrict", "--form", "y0^2*y1 + y1^2*y2 + y2^3", "--vars", "3",
         "--H", "0,0,1", "--field", "q"],
    )
    assert code == 0
    assert "restricted: y0^2*y1" in out
    assert "hf: (1,2,2,1)" in out


def test_restrict_hyperplane_length_mismatch(capsys):
    code, _, err = _run(
        capsys,
        ["restrict", "--form", "y0^3", "--vars", "3", "--H", "1,2"],
    )
    assert code == 2 and "error:" in err


def test_restrict_random_hyperplane_is_seeded(capsys):
    argv = ["restrict", "--form", "y0^3 + y1^3 + y2^3", "--vars", "3", "--seed", "5"]
    _, out1, _ = _run(capsys, argv)
    _, out2, _ = _run(capsys, argv)
    assert out1 == out2


def test_check_lemmas_passes(capsys):
    code, out, _ = _run(capsys, ["check-lemmas", "--trials", "5", "--seed", "7"])
    assert code == 0
    assert "ok: true" in out
    assert "codim-drop: 5 trials, 0 failures" in out


def test_search_f_writes_cache(tmp_path, capsys):
    cache = str(tmp_path / "bounds.json")
    code, out, _ = _run(
        capsys,
        ["search-f", "--e", "4", "--r", "13", "--budget", "5", "--cache", cache],
    )
    assert code == 0
    assert "bound=12 exact=true" in out
    table = load_table(cache)
    assert len(table) == 1 and table[0].bound == 12
    # reports never include cache timestamps
    assert "timestamp" not in out


def test_realize_reports_interval(tmp_path, capsys):
    cache = str(tmp_path / "bounds.json")
    code, out, _ = _run(
        capsys, ["realize", "--e", "4", "--r", "3", "--cache", cache]
    )
    assert code == 0
    assert "interval=[3, 6]" in out
    assert "realized: 4 of 4" in out
    assert "gaps: none" in out
    assert load_table(cache)[0].r == 3


def test_gic_pretty_ends_nondecreasing(tmp_path, capsys):
    cache = str(tmp_path / "bounds.json")
    code, out, _ = _run(
        capsys,
        ["gic", "--e", "4", "--rmin", "3", "--rmax", "6", "--budget", "5",
         "--cache", cache],
    )
    assert code == 0
    assert out.rstrip().splitlines()[-1] == "nondecreasing: true"
    # the run populated the table it verified
    assert {en.r for en in load_table(cache)} == {3, 4, 5, 6}


def test_gic_reuses_cache_and_stays_byte_identical(tmp_path, capsys):
    cache = str(tmp_path / "bounds.json")
    argv = ["gic", "--e", "4", "--rmin", "3", "--rmax", "5", "--budget", "5",
            "--cache", cache, "--format", "json"]
    _, out1, _ = _run(capsys, argv)
    _, out2, _ = _run(capsys, argv)
    assert out1 == out2


def test_env_var_sets_cache_path(tmp_path, capsys, monkeypatch):
    env_cache = tmp_path / "env.json"
    monkeypatch.setenv("APOLAR_CACHE", str(env_cache))
    code, _, _ = _run(
        capsys, ["search-f", "--e", "4", "--r", "4", "--budget", "5"]
    )
    assert code == 0
    assert env_cache.exists()
    # an explicit --cache wins over the environment
    flag_cache = tmp_path / "flag.json"
    code, _, _ = _run(
        capsys,
        ["search-f", "--e", "4", "--r", "5", "--budget", "5",
         "--cache", str(flag_cache)],
    )
    assert code == 0
    assert {en.r for en in load_table(str(env_cache))} == {4}
    assert {en.r for en in load_table(str(flag_cache))} == {5}


def test_corrupt_cache_exits_2(tmp_path, capsys):
    cache = tmp_path / "bad.json"
    cache.write_text("{broken")
    code, _, err = _run(
        capsys,
        ["gic", "--e", "4", "--rmin", "3", "--rmax", "3", "--cache", str(cache)],
    )
    assert code == 2 and "error:" in err


def test_reports_byte_identical_across_commands(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("APOLAR_CACHE", str(tmp_path / "c.json"))
    for argv in (
        ["hf", "--form", "y0^5+y1^5", "--vars", "2", "--format", "json"],
        ["check-lemmas", "--trials", "4", "--seed", "3", "--format", "tsv"],
        ["realize", "--e", "4", "--r", "4"],
    ):
        _, first, _ = _run(capsys, argv)
        _, second, _ = _run(capsys, argv)
        assert first == second, argv
