import csv

import pytest

from weakparity.cli import main
from weakparity.gameio import parse_game, write_game
from weakparity.generators import ladder_family, random_game, GenSpec


@pytest.fixture
def running(tmp_path):
    p = tmp_path / "g.wp"
    p.write_text("weakparity 2;\n0 1 0 1,2; 1 0 1 1; 2 1 1 2;\n")
    return p


def test_solve_with_stats(running, tmp_path, capsys):
    out = tmp_path / "g.sol"
    assert main(["solve", "--in", str(running), "--algo", "linear", "--out", str(out), "--stats"]) == 0
    assert out.read_text() == "0 1 1\n1 1 -\n2 2 2\n"
    assert "target_scan_steps=3" in capsys.readouterr().err


def test_stats_do_not_change_output(running, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    main(["solve", "--in", str(running), "--out", str(a), "--stats"])
    main(["solve", "--in", str(running), "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_brute_too_large(tmp_path, capsys):
    p = tmp_path / "big.wp"
    p.write_text(write_game(random_game(GenSpec(n=100, avg_degree=3, d=6, seed=4))))
    assert main(["solve", "--in", str(p), "--algo", "brute"]) == 1
    assert "enumeration limit" in capsys.readouterr().err


def test_naive_and_linear_identical(tmp_path):
    p = tmp_path / "r.wp"
    p.write_text(write_game(random_game(GenSpec(n=200, avg_degree=3, d=20, seed=5))))
    outs = []
    for algo in ("linear", "naive"):
        o = tmp_path / f"{algo}.sol"
        assert main(["solve", "--in", str(p), "--algo", algo, "--out", str(o)]) == 0
        outs.append(o.read_bytes())
    assert outs[0] == outs[1]


def test_solve_brute_small(running, tmp_path):
    o = tmp_path / "b.sol"
    assert main(["solve", "--in", str(running), "--algo", "brute", "--out", str(o)]) == 0
    assert [l.split()[:2] for l in o.read_text().splitlines()] == [["0", "1"], ["1", "1"], ["2", "2"]]
    assert main(["verify", "--in", str(running), "--solution", str(o)]) == 0


def test_solve_then_verify_generated(tmp_path):
    for seed in range(5):
        g = tmp_path / f"g{seed}.wp"
        s = tmp_path / f"g{seed}.sol"
        assert main(["gen", "--states", "60", "--priorities", "9", "--seed", str(seed),
                     "--out", str(g)]) == 0
        assert main(["solve", "--in", str(g), "--out", str(s)]) == 0
        assert main(["verify", "--in", str(g), "--solution", str(s)]) == 0


def test_verify_detects_swapped_winner(running, tmp_path, capsys):
    s = tmp_path / "bad.sol"
    s.write_text("0 1 1\n1 2 -\n2 2 2\n")
    assert main(["verify", "--in", str(running), "--solution", str(s)]) == 2
    assert "state" in capsys.readouterr().err


def test_verify_state_count_mismatch(running, tmp_path):
    s = tmp_path / "short.sol"
    s.write_text("0 1 1\n1 1 -\n")
    assert main(["verify", "--in", str(running), "--solution", str(s)]) == 1


def test_missing_file_and_usage(tmp_path):
    assert main(["solve", "--in", str(tmp_path / "nope.wp")]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["solve"])
    assert exc.value.code == 1


def test_gen_single_state(capsys):
    assert main(["gen", "--states", "1", "--priorities", "1", "--avg-degree", "1",
                 "--seed", "7"]) == 0
    g = parse_game(capsys.readouterr().out)
    assert (g.n, g.m, g.d) == (1, 1, 1)


def test_gen_ladder(capsys):
    assert main(["gen", "--family", "ladder", "--states", "8"]) == 0
    assert parse_game(capsys.readouterr().out) == ladder_family(8)


def test_bench_csv(tmp_path):
    out = tmp_path / "out.csv"
    assert main(["bench", "--family", "ladder", "--sizes", "1000,2000",
                 "--algo", "linear,naive", "--csv", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["family", "n", "m", "d", "algo", "repeat", "wall_ns",
                       "edge_relaxations", "counter_inits", "target_scan_steps"]
    assert len(rows) == 5
    again = tmp_path / "again.csv"
    main(["bench", "--family", "ladder", "--sizes", "1000,2000",
          "--algo", "linear,naive", "--csv", str(again)])
    strip = lambda rs: [r[:6] + r[7:] for r in rs]  # noqa: E731
    assert strip(rows) == strip(list(csv.reader(again.open())))


def test_bench_rejects_non_doubling(tmp_path):
    assert main(["bench", "--sizes", "100,300", "--csv", str(tmp_path / "x.csv")]) == 1
