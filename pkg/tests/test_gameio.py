import pytest

from weakparity import (GenSpec, Player, new_game, parse_game, parse_solution, random_game, solve,
                        write_game, write_solution)
from weakparity.errors import DuplicateState, MissingHeader, ParseError

from conftest import three_state

RUNNING = "weakparity 2;\n0 1 0 1,2; 1 0 1 1; 2 1 1 2;\n"


def test_single_state():
    assert parse_game("weakparity 0;\n0 0 0 0;\n") == new_game([Player.P1], [0], [(0, 0)])


def test_running_example():
    assert parse_game(RUNNING) == three_state()


def test_whitespace_comments_names():
    text = '# a comment\nweakparity   1 ;\n0 4 1 0 , 1 "start";\n\n# more\n1 3 0 1;\n'
    g = parse_game(text)
    assert g.successors(0) == [0, 1]
    assert g.names == ("start", "")
    assert parse_game(write_game(g)) == g
    assert write_game(g) == 'weakparity 1;\n0 4 1 0,1 "start";\n1 3 0 1;\n'


@pytest.mark.parametrize("text, line", [
    ("weakparity 0;\n0 0 0;\n", 2),
    ("weakparity 1;\n0 0 0 1;\n", None),
    ("weakparity 0;\n0 0 2 0;\n", 2),
    ("weakparity 0;\n0 0 0 5;\n", 2),
    ("weakparity 1;\n0 0 0 1;\n1 0 0 0\n", 3),
    ("weakparity 0;\n0 x 0 0;\n", 2),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_game(text)
    if line is not None:
        assert exc.value.line == line


def test_empty_successor_list_message():
    with pytest.raises(ParseError, match="outgoing edge"):
        parse_game("weakparity 0;\n0 0 0;\n")


def test_duplicate_and_header():
    with pytest.raises(DuplicateState):
        parse_game("weakparity 0;\n0 0 0 0;\n0 0 0 0;\n")
    with pytest.raises(MissingHeader):
        parse_game("0 0 0 0;\n")
    with pytest.raises(MissingHeader):
        parse_game("")


def test_write_is_canonical_and_deterministic(g3):
    assert write_game(g3) == "weakparity 2;\n0 1 0 1,2;\n1 0 1 1;\n2 1 1 2;\n"
    assert write_game(g3) == write_game(three_state())


def test_solution_lines(g3):
    text = write_solution(g3, solve(g3))
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    assert lines == ["0 1 1", "1 1 -", "2 2 2"]
    assert "# work: target_scan_steps=3" in text


def test_solution_loser_move_field():
    g = new_game([Player.P2, Player.P2, Player.P1], [1, 2, 3],
                 [(0, 0), (1, 2), (2, 2), (2, 0)])
    text = write_solution(g, solve(g), work=False)
    assert text == "0 2 0\n1 1 -\n2 2 - 2\n"
    back = parse_solution(text, g)
    assert back.strategy1 == {2: 2} and back.strategy2 == {0: 0, 1: 2}


def test_solution_round_trip_random():
    for seed in range(100):
        g = random_game(GenSpec(n=1 + seed % 30, avg_degree=2.5, d=1 + seed % 7, seed=seed))
        assert parse_game(write_game(g)) == g
        sol = solve(g)
        back = parse_solution(write_solution(g, sol), g)
        assert back.partition() == sol.partition()
        assert back.strategy1 == sol.strategy1 and back.strategy2 == sol.strategy2


@pytest.mark.parametrize("text", ["0 3 1\n", "0 1\n", "0 x 1\n", "0 1 1 2\n", "0 1 a\n",
                                  "0 1 1\n0 2 1\n"])
def test_solution_parse_errors(text):
    with pytest.raises(ParseError):
        parse_solution(text)


def test_solution_state_count_mismatch(g3):
    with pytest.raises(ParseError):
        parse_solution("0 1 1\n1 1 -\n", g3)
