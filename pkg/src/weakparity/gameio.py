"""Text formats for games and solutions.

Game files::

    weakparity <maxid>;
    <id> <priority> <owner> <succ>,<succ>,... ["<name>"];

Owner 0 is P1, who wins when the least priority seen is even; owner 1 is
P2.  Lines starting with ``#`` are comments.  A statement ends at ``;`` so
several records may share a line.

Solution files have one line per state::

    <id> <winner 1|2> <move|-> [<loser move>]

The third field is the winner's move when the winner owns the state and
``-`` otherwise.  When the state's owner loses there, its strategy move is
appended as a fourth field unless the state has a single successor.
Work counters follow as ``# work:`` comment lines.
"""

from __future__ import annotations

import re
from typing import Optional

from .errors import BadEndpoint, DuplicateState, MissingHeader, ParseError, SinkState
from .linear import Solution, WorkCounters
from .model import GameGraph, Player, new_game

_STATEMENT = re.compile(r'((?:[^;"]|"[^"\n]*")*);')
_HEADER = re.compile(r"weakparity\s+(\d+)")
_RECORD = re.compile(r'(\d+)\s+(\d+)\s+(\d+)(?:\s+(\d+(?:\s*,\s*\d+)*))?(?:\s*"([^"]*)")?')


def _strip_comments(text: str) -> str:
    # keep line structure so offsets still map to line numbers
    return "\n".join("" if line.lstrip().startswith("#") else line
                     for line in text.split("\n"))


def parse_game(text: str) -> GameGraph:
    body = _strip_comments(text)
    pos = 0
    maxid = None
    records: dict[int, tuple] = {}
    names_seen = False

    def line_at(offset):
        return body.count("\n", 0, offset) + 1

    while True:
        m = _STATEMENT.match(body, pos)
        if m is None:
            rest = body[pos:]
            if rest.strip():
                at = pos + len(rest) - len(rest.lstrip())
                if maxid is None:
                    raise MissingHeader(line_at(at))
                raise ParseError(line_at(at), "statement not terminated by ';'")
            break
        stmt = m.group(1).strip()
        start = m.start(1) + len(m.group(1)) - len(m.group(1).lstrip())
        line = line_at(start)
        pos = m.end()
        if not stmt:
            raise ParseError(line, "empty statement")
        if maxid is None:
            h = _HEADER.fullmatch(stmt)
            if h is None:
                raise MissingHeader(line)
            maxid = int(h.group(1))
            continue
        r = _RECORD.fullmatch(stmt)
        if r is None:
            raise ParseError(line, f"malformed record {stmt!r}")
        ident, priority, owner = int(r.group(1)), int(r.group(2)), int(r.group(3))
        if ident > maxid:
            raise ParseError(line, f"state {ident} exceeds declared maximum {maxid}")
        if ident in records:
            raise DuplicateState(line, ident)
        if owner not in (0, 1):
            raise ParseError(line, f"owner must be 0 or 1, got {owner}")
        if r.group(4) is None:
            raise ParseError(line, f"state {ident} has no successors; every state needs an outgoing edge")
        succ = [int(x) for x in r.group(4).split(",")]
        for t in succ:
            if t > maxid:
                raise ParseError(line, f"successor {t} of state {ident} exceeds declared maximum {maxid}")
        names_seen |= r.group(5) is not None
        records[ident] = (priority, owner, succ, r.group(5), line)

    if maxid is None:
        raise MissingHeader(1)
    missing = [s for s in range(maxid + 1) if s not in records]
    if missing:
        raise ParseError(line_at(len(body)), f"no record for state {missing[0]}")
    edges = [(s, t) for s in range(maxid + 1) for t in records[s][2]]
    names = [records[s][3] or "" for s in range(maxid + 1)] if names_seen else None
    try:
        return new_game([records[s][1] for s in range(maxid + 1)],
                        [records[s][0] for s in range(maxid + 1)], edges, names)
    except (SinkState, BadEndpoint) as exc:
        raise ParseError(0, str(exc)) from exc


def write_game(g: GameGraph) -> str:
    out = [f"weakparity {g.n - 1};"]
    owner, prio, sptr, succ, _, _ = g.lists()
    for s in range(g.n):
        line = f"{s} {prio[s]} {owner[s]} " + ",".join(map(str, succ[sptr[s]:sptr[s + 1]]))
        if g.names is not None and g.names[s]:
            line += f' "{g.names[s]}"'
        out.append(line + ";")
    return "\n".join(out) + "\n"


def write_solution(g: GameGraph, sol: Solution, work: bool = True) -> str:
    out = []
    for s in range(g.n):
        owner = g.owner_of(s)
        winner = sol.winner(s)
        if owner == winner:
            fields = [str(s), str(winner + 1), str(sol.strategy(owner)[s])]
        else:
            fields = [str(s), str(winner + 1), "-"]
            move = sol.strategy(owner).get(s)
            if move is not None and g.out_degree(s) > 1:
                fields.append(str(move))
        out.append(" ".join(fields))
    if work:
        out.extend(f"# work: {k}={v}" for k, v in sol.work.as_dict().items())
    return "\n".join(out) + "\n"


def parse_solution(text: str, g: Optional[GameGraph] = None) -> Solution:
    """Read a solution file.

    A move in the third field belongs to the winner, one in the fourth to
    the loser.  With `g`, every move is credited to the state's owner,
    omitted moves of single-successor states are filled back in and the
    state count is checked.
    """
    w1, w2 = set(), set()
    strategy = ({}, {})
    seen = set()
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) not in (3, 4) or not all(p.isdigit() for p in parts[:2]):
            raise ParseError(lineno, f"malformed solution line {line!r}")
        s = int(parts[0])
        if s in seen:
            raise DuplicateState(lineno, s)
        seen.add(s)
        if parts[1] not in ("1", "2"):
            raise ParseError(lineno, f"winner must be 1 or 2, got {parts[1]!r}")
        winner = Player(int(parts[1]) - 1)
        (w1 if winner == Player.P1 else w2).add(s)
        move, loser_move = parts[2], parts[3] if len(parts) == 4 else None
        if move != "-" and loser_move is not None:
            raise ParseError(lineno, "a fourth field is only allowed after '-'")
        for who, tok in ((winner, move), (winner.opponent, loser_move)):
            if tok is None or tok == "-":
                continue
            if not tok.isdigit():
                raise ParseError(lineno, f"bad successor {tok!r}")
            if g is not None and s < g.n:
                who = g.owner_of(s)
            strategy[who][s] = int(tok)
        if g is not None and s < g.n:
            owner = g.owner_of(s)
            if s not in strategy[owner] and g.out_degree(s) == 1:
                strategy[owner][s] = g.successors(s)[0]
    if g is not None and seen != set(range(g.n)):
        raise ParseError(0, f"solution covers {len(seen)} states, game has {g.n}")
    return Solution(frozenset(w1), frozenset(w2), strategy[0], strategy[1], WorkCounters())
