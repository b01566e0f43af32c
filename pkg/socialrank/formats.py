"""
Text formats

``.pr`` files hold a power relation::

    players: 1 2 3
    ranking: {1,3} ~ {1,2,3} > {1,2} ~ {2,3} > *

``.game`` files hold a multicameral weighted voting game::

    houses: 2
    quota: 4 4
    player 1 2 2

Blank lines and ``#`` comments are ignored in both.
"""
import logging
import re
from typing import Iterator

from socialrank.games import House, MulticameralGame
from socialrank.models import (
    LABEL_PATTERN,
    DataValidationError,
    DimensionMismatch,
    EmptyClass,
    EmptyCoalitionListed,
    ParseError,
    PlayerSet,
    PowerRelation,
    UnknownPlayer,
    build_power_relation,
)

logger = logging.getLogger("socialrank")

TOKEN = re.compile(r"[{}~>,*]|[A-Za-z0-9_.-]+|\S")
PLAYER_LINE = re.compile(r"\s*player\s+(?P<label>\S+)(?P<weights>.*)$")
SINK = -1


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield (line number, text) for lines with content, comments stripped"""
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        if line.strip():
            yield number, line


def _keyword(line: str, number: int, keyword: str) -> tuple[str, int]:
    """Strip a leading ``keyword:`` and return the rest with its column offset"""
    stripped = line.lstrip()
    column = len(line) - len(stripped) + 1
    if not stripped.startswith(keyword + ":"):
        raise ParseError(f"expected '{keyword}:'", number, column)
    offset = column - 1 + len(keyword) + 1
    return line[offset:], offset


######################################################################
# P O W E R   R E L A T I O N S
######################################################################
def _parse_players(rest: str, number: int, offset: int) -> PlayerSet:
    labels = []
    for match in re.finditer(r"\S+", rest):
        if not LABEL_PATTERN.fullmatch(match.group()):
            raise ParseError(f"invalid player label {match.group()!r}", number, offset + match.start() + 1)
        labels.append(match.group())
    if not labels:
        raise ParseError("no players listed", number, offset + 1)
    try:
        return PlayerSet(tuple(labels))
    except DataValidationError as error:
        raise ParseError(str(error), number, offset + 1) from error


class _RankingParser:
    """Recursive descent over the tokens of a ``ranking:`` line"""

    def __init__(self, players: PlayerSet, rest: str, number: int, offset: int):
        self.players = players
        self.number = number
        self.tokens = [(match.group(), offset + match.start() + 1) for match in TOKEN.finditer(rest)]
        self.end_column = offset + len(rest) + 1
        self.pos = 0

    def _peek(self) -> tuple[str, int]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return "", self.end_column

    def _fail(self, message: str):
        raise ParseError(message, self.number, self._peek()[1])

    def _take(self, expected: str):
        if self._peek()[0] != expected:
            self._fail(f"expected '{expected}'")
        self.pos += 1

    def parse(self) -> list[list[int]]:
        classes = [self._class()]
        while self._peek()[0] == ">":
            self.pos += 1
            classes.append(self._class())
        if self.pos < len(self.tokens):
            self._fail(f"unexpected {self._peek()[0]!r}")
        return classes

    def _class(self) -> list[int]:
        items = [self._item()]
        while self._peek()[0] == "~":
            self.pos += 1
            items.append(self._item())
        return items

    def _item(self) -> int:
        token, _ = self._peek()
        if token == "*":
            self.pos += 1
            return SINK
        if token != "{":
            self._fail("expected '{' or '*'")
        self.pos += 1
        if self._peek()[0] == "}":
            raise EmptyCoalitionListed(f"line {self.number}: the empty coalition cannot be ranked")
        mask = self._member(0)
        while self._peek()[0] == ",":
            self.pos += 1
            mask = self._member(mask)
        self._take("}")
        return mask

    def _member(self, mask: int) -> int:
        token, column = self._peek()
        if not LABEL_PATTERN.fullmatch(token):
            self._fail("expected a player label")
        try:
            bit = 1 << self.players.index(token)
        except UnknownPlayer as error:
            raise UnknownPlayer(f"line {self.number}, column {column}: unknown player {token!r}") from error
        if mask & bit:
            self._fail(f"player {token!r} repeated in a coalition")
        self.pos += 1
        return mask | bit


def parse_power_relation(text: str) -> PowerRelation:
    """Parses ``.pr`` text into a validated PowerRelation"""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("expected 'players:'", 1, 1)
    number, line = lines[0]
    rest, offset = _keyword(line, number, "players")
    players = _parse_players(rest, number, offset)

    if len(lines) < 2:
        raise ParseError("expected 'ranking:'", number + 1, 1)
    number, line = lines[1]
    rest, offset = _keyword(line, number, "ranking")
    classes = _RankingParser(players, rest, number, offset).parse()
    if len(lines) > 2:
        raise ParseError("unexpected content after the ranking", lines[2][0], 1)

    for k, items in enumerate(classes):
        if SINK in items and (len(items) > 1 or k != len(classes) - 1):
            raise ParseError("'*' must be the whole last class", number, offset + 1)
    if classes[-1] == [SINK]:
        listed = {mask for items in classes[:-1] for mask in items}
        unlisted = [mask for mask in range(1, players.full_mask + 1) if mask not in listed]
        if not unlisted:
            raise EmptyClass("'*' stands for no coalition: every coalition is already listed")
        classes[-1] = unlisted

    pr = build_power_relation(players, classes)
    logger.info("Parsed power relation: %d players, %d classes", pr.n, pr.class_count)
    return pr


def serialize_power_relation(pr: PowerRelation) -> str:
    """Renders a PowerRelation as ``.pr`` text, coalitions in ascending bit order"""
    ranking = " > ".join(" ~ ".join(pr.players.format(mask) for mask in block) for block in pr.classes)
    return f"players: {' '.join(pr.players.names)}\nranking: {ranking}"


######################################################################
# G A M E S
######################################################################
def _integers(rest: str, number: int, offset: int) -> list[int]:
    values = []
    for match in re.finditer(r"\S+", rest):
        try:
            values.append(int(match.group()))
        except ValueError as error:
            raise ParseError(f"expected an integer, got {match.group()!r}", number, offset + match.start() + 1) from error
    return values


def parse_game(text: str) -> MulticameralGame:
    """Parses ``.game`` text into a validated MulticameralGame"""
    lines = list(_content_lines(text))
    if len(lines) < 2:
        raise ParseError("expected 'houses:' and 'quota:' lines", len(text.splitlines()) + 1, 1)

    number, line = lines[0]
    rest, offset = _keyword(line, number, "houses")
    counts = _integers(rest, number, offset)
    if len(counts) != 1 or counts[0] < 1:
        raise ParseError("'houses:' takes one positive integer", number, offset + 1)
    houses = counts[0]

    number, line = lines[1]
    rest, offset = _keyword(line, number, "quota")
    quotas = _integers(rest, number, offset)
    if len(quotas) != houses:
        raise DimensionMismatch(f"line {number}: {len(quotas)} quotas for {houses} houses")

    labels = []
    weights = []
    for number, line in lines[2:]:
        match = PLAYER_LINE.match(line)
        if not match:
            raise ParseError("expected 'player <label> <weights>'", number, len(line) - len(line.lstrip()) + 1)
        label = match.group("label")
        if not LABEL_PATTERN.fullmatch(label):
            raise ParseError(f"invalid player label {label!r}", number, match.start("label") + 1)
        row = _integers(match.group("weights"), number, match.start("weights"))
        if len(row) != houses:
            raise DimensionMismatch(f"line {number}: player {label} has {len(row)} weights for {houses} houses")
        labels.append(label)
        weights.append(row)
    if not labels:
        raise ParseError("no players listed", lines[-1][0] + 1, 1)

    players = PlayerSet(tuple(labels))
    game = MulticameralGame(
        players,
        tuple(House(tuple(row[h] for row in weights), quotas[h]) for h in range(houses)),
    )
    logger.info("Parsed game: %d players, %d houses", players.n, houses)
    return game


def serialize_game(game: MulticameralGame) -> str:
    """Renders a MulticameralGame as ``.game`` text"""
    lines = [
        f"houses: {len(game.houses)}",
        "quota: " + " ".join(str(house.quota) for house in game.houses),
    ]
    for index, label in enumerate(game.players.names):
        lines.append(f"player {label} " + " ".join(str(house.weights[index]) for house in game.houses))
    return "\n".join(lines)
