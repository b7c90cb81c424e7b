"""Fillings of partition diagrams and their descent/inversion statistics.

A filling assigns a letter to every cell of a partition diagram. Letters are
nonzero integers: k > 0 is the plain letter k and -k is its barred twin,
written "k~" in text form. Two total orders on the signed alphabet matter:

  ORDER1 (interleaved):  1 < 1~ < 2 < 2~ < 3 < ...
  ORDER2 (bars_on_top):  1 < 2 < 3 < ... < 3~ < 2~ < 1~

Any other total order can be supplied as a key callable. The comparison
indicator I(x, y) is 1 when x > y, and also when x == y is barred; descents,
inversions, the major index and the inversion statistic all derive from it
through the reading order.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Iterator, NamedTuple

from .shapes import (
    Cell,
    Partition,
    arm,
    attacks,
    cell_triples,
    check_partition,
    leg,
    reading_cells,
)

ORDER1 = "interleaved"
ORDER2 = "bars_on_top"

LetterOrder = str | Callable[[int], tuple]


def letter_key(x: int, order: LetterOrder = ORDER1):
    """Sort key realizing the chosen total order on signed letters."""
    if callable(order):
        return order(x)
    if order == ORDER1:
        return (x, 0) if x > 0 else (-x, 1)
    if order == ORDER2:
        return (0, x) if x > 0 else (1, x)
    raise ValueError(f"unknown letter order: {order!r}")


def indicator(x: int, y: int, order: LetterOrder = ORDER1) -> int:
    """I(x, y): 1 when x > y in the order, or x == y with both barred."""
    if x == y:
        return 1 if x < 0 else 0
    return 1 if letter_key(x, order) > letter_key(y, order) else 0


def super_letters(npos: int, nneg: int, order: LetterOrder = ORDER1) -> tuple[int, ...]:
    """The alphabet {1..npos, -1..-nneg} sorted by the given order."""
    letters = list(range(1, npos + 1)) + [-i for i in range(1, nneg + 1)]
    return tuple(sorted(letters, key=lambda x: letter_key(x, order)))


class ShapeData(NamedTuple):
    """Precomputed reading-order geometry of one partition diagram."""

    mu: Partition
    cells: tuple[Cell, ...]
    pos: dict[Cell, int]
    row: tuple[int, ...]
    arms: tuple[int, ...]
    legs: tuple[int, ...]
    below: tuple[int, ...]          # position of the cell directly below, or -1
    attack_pairs: tuple[tuple[int, int], ...]   # positions p < p' that attack
    bottom_pairs: tuple[tuple[int, int], ...]   # attack pairs inside row 1
    triples: tuple[tuple[int, int, int], ...]   # (upper, below, right) positions
    attack_adj: tuple[tuple[int, ...], ...]     # attack neighbours per position


@lru_cache(maxsize=None)
def shape_data(mu: Partition) -> ShapeData:
    mu = check_partition(mu)
    cells = reading_cells(mu)
    pos = {c: p for p, c in enumerate(cells)}
    row = tuple(i for (i, _) in cells)
    arms = tuple(arm(mu, c) for c in cells)
    legs = tuple(leg(mu, c) for c in cells)
    below = tuple(pos.get((i - 1, j), -1) for (i, j) in cells)
    n = len(cells)
    attack_pairs = tuple(
        (p, p2) for p in range(n) for p2 in range(p + 1, n) if attacks(cells[p], cells[p2])
    )
    bottom_pairs = tuple((p, p2) for (p, p2) in attack_pairs if row[p] == 1 and row[p2] == 1)
    triples = tuple((pos[u], pos[v], pos[w]) for (u, v, w) in cell_triples(mu))
    adj: list[list[int]] = [[] for _ in range(n)]
    for p, p2 in attack_pairs:
        adj[p].append(p2)
        adj[p2].append(p)
    return ShapeData(
        mu, cells, pos, row, arms, legs, below, attack_pairs, bottom_pairs, triples,
        tuple(tuple(a) for a in adj),
    )


class Filling:
    """Entries of a filling in reading order, bound to a partition shape."""

    __slots__ = ("shape", "word")

    def __init__(self, shape: Iterable[int], word: Iterable[int]):
        self.shape = check_partition(shape)
        self.word = tuple(int(x) for x in word)
        if len(self.word) != sum(self.shape):
            raise ValueError(
                f"word length {len(self.word)} does not match |{self.shape}|"
            )
        if any(x == 0 for x in self.word):
            raise ValueError("letters must be nonzero integers")

    @classmethod
    def from_rows(cls, rows_top_to_bottom: Iterable[Iterable[int]]) -> Filling:
        rows = [list(r) for r in rows_top_to_bottom]
        shape = tuple(len(r) for r in reversed(rows))
        return cls(shape, [x for r in rows for x in r])

    def rows(self) -> list[list[int]]:
        """Entries row by row, top row first (the reading order rows)."""
        out, k = [], 0
        for i in range(len(self.shape), 0, -1):
            out.append(list(self.word[k : k + self.shape[i - 1]]))
            k += self.shape[i - 1]
        return out

    def entry(self, cell: Cell) -> int:
        return self.word[shape_data(self.shape).pos[cell]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Filling):
            return NotImplemented
        return self.shape == other.shape and self.word == other.word

    def __hash__(self) -> int:
        return hash((self.shape, self.word))

    def __repr__(self) -> str:
        return f"Filling({self.shape}, {self.word})"


def format_letter(x: int) -> str:
    return str(x) if x > 0 else f"{-x}~"


def parse_letter(text: str) -> int:
    text = text.strip()
    value = -int(text[:-1]) if text.endswith("~") else int(text)
    if value == 0:
        raise ValueError("letters must be nonzero integers")
    return value


def format_filling(filling: Filling) -> str:
    """Rows top to bottom, entries space-separated, barred letters as 'k~'."""
    return "\n".join(" ".join(format_letter(x) for x in row) for row in filling.rows())


def parse_filling(text: str) -> Filling:
    rows = [[parse_letter(tok) for tok in line.split()] for line in text.splitlines() if line.strip()]
    return Filling.from_rows(rows)


def filling_to_json(filling: Filling) -> dict:
    return {"shape": list(filling.shape), "rows": filling.rows()}


def filling_from_json(data: dict) -> Filling:
    f = Filling.from_rows(data["rows"])
    if f.shape != tuple(data["shape"]):
        raise ValueError("shape field disagrees with row lengths")
    return f


# ---------------------------------------------------------------------------
# word-level statistics (used by the hot enumeration loops)

def positive_word_statistics(word, sd: ShapeData) -> tuple[int, int]:
    """(maj, inv) for a word of positive letters; plain > is the comparison."""
    maj = 0
    armsum = 0
    pairs = 0
    legs, arms = sd.legs, sd.arms
    for p, b in enumerate(sd.below):
        if b >= 0 and word[p] > word[b]:
            maj += legs[p] + 1
            armsum += arms[p]
    for p, p2 in sd.attack_pairs:
        if word[p] > word[p2]:
            pairs += 1
    return maj, pairs - armsum


def word_statistics(word, sd: ShapeData, order: LetterOrder = ORDER1) -> tuple[int, int]:
    """(maj, inv) for a word of signed letters under the given order."""
    keys = [letter_key(x, order) for x in word]
    maj = 0
    armsum = 0
    pairs = 0
    legs, arms = sd.legs, sd.arms
    for p, b in enumerate(sd.below):
        if b >= 0:
            x, y = word[p], word[b]
            if keys[p] > keys[b] or (x == y and x < 0):
                maj += legs[p] + 1
                armsum += arms[p]
    for p, p2 in sd.attack_pairs:
        x, y = word[p], word[p2]
        if keys[p] > keys[p2] or (x == y and x < 0):
            pairs += 1
    return maj, pairs - armsum


def word_descent_positions(word, sd: ShapeData, order: LetterOrder = ORDER1) -> tuple[int, ...]:
    out = []
    for p, b in enumerate(sd.below):
        if b >= 0 and indicator(word[p], word[b], order):
            out.append(p)
    return tuple(out)


def word_attack_inversions(word, sd: ShapeData, order: LetterOrder = ORDER1) -> int:
    """|Inv|: attacking pairs (in reading order) whose indicator is 1."""
    return sum(1 for p, p2 in sd.attack_pairs if indicator(word[p], word[p2], order))


# ---------------------------------------------------------------------------
# filling-level statistics

def descent_cells(filling: Filling, order: LetterOrder = ORDER1) -> frozenset[Cell]:
    """Cells whose entry dominates the entry directly below (I = 1)."""
    sd = shape_data(filling.shape)
    return frozenset(
        sd.cells[p] for p in word_descent_positions(filling.word, sd, order)
    )


def maj(filling: Filling, order: LetterOrder = ORDER1) -> int:
    """Sum of leg + 1 over the descent cells."""
    return word_statistics(filling.word, shape_data(filling.shape), order)[0]


def inv(filling: Filling, order: LetterOrder = ORDER1) -> int:
    """|Inv| minus the arms of the descent cells."""
    return word_statistics(filling.word, shape_data(filling.shape), order)[1]


def inversion_pairs(filling: Filling, order: LetterOrder = ORDER1) -> tuple[tuple[Cell, Cell], ...]:
    """Attacking pairs (u, v), u before v in reading order, with I(s(u), s(v)) = 1."""
    sd = shape_data(filling.shape)
    w = filling.word
    return tuple(
        (sd.cells[p], sd.cells[p2])
        for p, p2 in sd.attack_pairs
        if indicator(w[p], w[p2], order)
    )


def attack_inversion_count(filling: Filling, order: LetterOrder = ORDER1) -> int:
    return word_attack_inversions(filling.word, shape_data(filling.shape), order)


def bottom_row_inversions(filling: Filling, order: LetterOrder = ORDER1) -> int:
    sd = shape_data(filling.shape)
    w = filling.word
    return sum(1 for p, p2 in sd.bottom_pairs if indicator(w[p], w[p2], order))


def inversion_triples(filling: Filling, order: LetterOrder = ORDER1) -> int:
    """Triples (upper x, lower y, right z) with I(x,z) + I(z,y) - I(x,y) = 1."""
    sd = shape_data(filling.shape)
    w = filling.word
    count = 0
    for pu, pv, pw in sd.triples:
        x, y, z = w[pu], w[pv], w[pw]
        if indicator(x, z, order) + indicator(z, y, order) - indicator(x, y, order) == 1:
            count += 1
    return count


def is_non_attacking(filling: Filling) -> bool:
    """No attacking pair carries letters of equal absolute value."""
    sd = shape_data(filling.shape)
    w = filling.word
    return all(abs(w[p]) != abs(w[p2]) for p, p2 in sd.attack_pairs)


def is_standard(filling: Filling) -> bool:
    return sorted(filling.word) == list(range(1, len(filling.word) + 1))


def standardize(filling: Filling, order: LetterOrder = ORDER1) -> Filling:
    """The unique standard filling compatible with the order and tie rules.

    Ties between equal positive letters are broken left to right along the
    reading order; ties between equal barred letters right to left.
    """
    w = filling.word
    ranked = sorted(
        range(len(w)),
        key=lambda p: (letter_key(w[p], order), p if w[p] > 0 else -p),
    )
    new = [0] * len(w)
    for rank, p in enumerate(ranked, start=1):
        new[p] = rank
    return Filling(filling.shape, new)


def inverse_descent_set(filling: Filling) -> frozenset[int]:
    """For a standard filling: the i whose i+1 occurs earlier in reading order."""
    if not is_standard(filling):
        raise ValueError("inverse descent sets are defined for standard fillings")
    w = filling.word
    where = {x: p for p, x in enumerate(w)}
    return frozenset(i for i in range(1, len(w)) if where[i + 1] < where[i])


def cocharge_word(filling: Filling) -> tuple[int, ...]:
    """Row indices read off cells ordered by decreasing entry, then decreasing
    reading order; defined for positive fillings only."""
    w = filling.word
    if any(x < 0 for x in w):
        raise ValueError("cocharge words are defined for positive fillings")
    sd = shape_data(filling.shape)
    order = sorted(range(len(w)), key=lambda p: (-w[p], -p))
    return tuple(sd.row[p] for p in order)


# ---------------------------------------------------------------------------
# enumeration

def fillings(mu: Partition, max_entry: int) -> Iterator[Filling]:
    """All fillings of mu with entries in 1..max_entry."""
    mu = check_partition(mu)
    for word in product(range(1, max_entry + 1), repeat=sum(mu)):
        yield Filling(mu, word)


def super_fillings(
    mu: Partition, npos: int, nneg: int, order: LetterOrder = ORDER1
) -> Iterator[Filling]:
    """All fillings of mu over the signed alphabet {1..npos, -1..-nneg}."""
    mu = check_partition(mu)
    letters = super_letters(npos, nneg, order)
    for word in product(letters, repeat=sum(mu)):
        yield Filling(mu, word)
