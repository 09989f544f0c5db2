"""
Fillings of key diagrams and the semistandard key tabloid predicate.

Rows are numbered from 1 at the bottom; columns from 1 at the left, with
column 0 holding the basement.  The basement cell of row r carries entry r
and exists for every row, including rows of length zero.

A :class:`Tabloid` stores ``rows[r - 1]`` for row r.  Entries range over
``1..alphabet``; the crystal operators need ``alphabet == len(shape)``, the
worked examples sometimes use larger alphabets.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterator

from .compositions import Composition, check_composition, eta
from .errors import DomainError

__all__ = [
    "Tabloid", "Cell", "Triple",
    "cell_smaller", "is_coinversion_entries", "triples", "is_coinversion",
    "is_nonattacking", "is_sskd", "enumerate_sskd", "weight",
    "reading_word", "reading_cells", "maj", "row_maj", "u_tilde_tabloid",
]

Cell = tuple[int, int]  # (row, col)


@dataclass(frozen=True, order=True)
class Tabloid:
    shape: Composition
    rows: tuple[tuple[int, ...], ...]
    alphabet: int

    def __post_init__(self):
        if len(self.rows) != len(self.shape):
            raise DomainError(f"{len(self.rows)} rows for shape {self.shape}")
        for r, (part, row) in enumerate(zip(self.shape, self.rows), start=1):
            if len(row) != part:
                raise DomainError(f"row {r} has {len(row)} entries, shape wants {part}")
            for x in row:
                if not 1 <= x <= self.alphabet:
                    raise DomainError(f"entry {x} in row {r} outside 1..{self.alphabet}")

    @classmethod
    def from_rows(cls, rows, alphabet: int | None = None) -> Tabloid:
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        shape = check_composition(len(row) for row in rows)
        return cls(shape, rows, len(rows) if alphabet is None else alphabet)

    @property
    def n(self) -> int:
        return len(self.shape)

    def entry(self, row: int, col: int) -> int:
        """Entry of cell (row, col); column 0 is the basement."""
        if col == 0:
            return row
        return self.rows[row - 1][col - 1]

    def has_cell(self, row: int, col: int) -> bool:
        return 1 <= row <= self.n and 0 <= col <= self.shape[row - 1]

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """(row, col, entry) for every non-basement cell, row by row."""
        for r, row in enumerate(self.rows, start=1):
            for c, x in enumerate(row, start=1):
                yield r, c, x

    def column(self, col: int) -> list[tuple[int, int]]:
        """(row, entry) pairs of column ``col`` from bottom to top."""
        return [(r, self.entry(r, col)) for r in range(1, self.n + 1) if self.has_cell(r, col)]

    def with_entries(self, changes: dict[Cell, int]) -> Tabloid:
        rows = [list(row) for row in self.rows]
        for (r, c), x in changes.items():
            rows[r - 1][c - 1] = x
        return Tabloid(self.shape, tuple(tuple(row) for row in rows), self.alphabet)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "alphabet": self.alphabet,
                "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json(cls, data) -> Tabloid:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            shape = check_composition(data["shape"])
            rows = tuple(tuple(int(x) for x in row) for row in data["rows"])
            alphabet = int(data.get("alphabet", len(shape)))
        except (KeyError, TypeError) as exc:
            raise DomainError(f"malformed tabloid JSON: {exc}") from None
        return cls(shape, rows, alphabet)

    def __str__(self) -> str:
        lines = []
        for r in range(self.n, 0, -1):
            lines.append(f"{r}| " + " ".join(str(x) for x in self.rows[r - 1]))
        return "\n".join(lines)


def cell_smaller(u: tuple[int, int], v: tuple[int, int]) -> bool:
    """Whether u = (entry, col) precedes v; on equal entries the right one is smaller."""
    if u[0] != v[0]:
        return u[0] < v[0]
    return u[1] > v[1]


def is_coinversion_entries(i, j, k) -> bool:
    """Cyclic test on (entry, col) pairs: i<j<k, j<k<i or k<i<j."""
    ij, jk, ki = cell_smaller(i, j), cell_smaller(j, k), cell_smaller(k, i)
    return (ij and jk) or (jk and ki) or (ki and ij)


@dataclass(frozen=True)
class Triple:
    kind: str  # "I" (third cell above the left one) or "II" (below the right one)
    left: Cell
    right: Cell
    third: Cell


def triples(shape: Composition) -> Iterator[Triple]:
    """All triples of the diagram of ``shape``, basement cells included."""
    n = len(shape)
    for r in range(1, n + 1):
        for c in range(shape[r - 1]):
            for r2 in range(r + 1, n + 1):
                if shape[r - 1] > shape[r2 - 1] and c <= shape[r2 - 1]:
                    yield Triple("I", (r, c), (r, c + 1), (r2, c))
            for r2 in range(1, r):
                if shape[r - 1] >= shape[r2 - 1] and c + 1 <= shape[r2 - 1]:
                    yield Triple("II", (r, c), (r, c + 1), (r2, c + 1))


def is_coinversion(t: Triple, T: Tabloid) -> bool:
    i, j, k = ((T.entry(*cell), cell[1]) for cell in (t.left, t.right, t.third))
    return is_coinversion_entries(i, j, k)


def is_nonattacking(T: Tabloid) -> bool:
    cols: dict[int, dict[int, int]] = {}
    for r, c, x in T.cells():
        col = cols.setdefault(c, {})
        if x in col:
            return False
        col[x] = r
    for c, col in cols.items():
        nxt = cols.get(c + 1, {})
        for x, r in col.items():
            if x in nxt and nxt[x] < r:
                return False
    return True


def is_sskd(T: Tabloid) -> bool:
    return is_nonattacking(T) and not any(is_coinversion(t, T) for t in triples(T.shape))


def enumerate_sskd(a, alphabet: int | None = None) -> list[Tabloid]:
    """Every semistandard key tabloid of shape ``a``, by exhaustive search.

    Columns are filled left to right with distinct entries, so fillings with a
    repeated entry in a column are never generated.  Sorted by reading word.
    """
    a = check_composition(a)
    N = len(a) if alphabet is None else alphabet
    if N < 1:
        raise DomainError(f"alphabet must be positive, got {N}")
    width = max(a)
    col_rows = [[r for r in range(1, len(a) + 1) if a[r - 1] >= c] for c in range(1, width + 1)]
    col_fills = [list(itertools.permutations(range(1, N + 1), len(rs))) for rs in col_rows]
    out = []
    for choice in itertools.product(*col_fills):
        rows = [[] for _ in a]
        for rs, vals in zip(col_rows, choice):
            for r, x in zip(rs, vals):
                rows[r - 1].append(x)
        T = Tabloid(a, tuple(tuple(row) for row in rows), N)
        if is_sskd(T):
            out.append(T)
    out.sort(key=reading_word)
    return out


def weight(T: Tabloid) -> Composition:
    wt = [0] * T.alphabet
    for _, _, x in T.cells():
        wt[x - 1] += 1
    return tuple(wt)


def reading_cells(T: Tabloid) -> list[Cell]:
    """Cells in column reading order: columns left to right, each bottom to top."""
    width = max(T.shape, default=0)
    return [(r, c) for c in range(1, width + 1) for r in range(1, T.n + 1) if T.shape[r - 1] >= c]


def reading_word(T: Tabloid) -> tuple[int, ...]:
    return tuple(T.entry(r, c) for r, c in reading_cells(T))


def row_maj(row) -> int:
    """Sum of legs over strict ascents of a single row."""
    return sum(len(row) - 1 - c for c in range(len(row) - 1) if row[c] < row[c + 1])


def maj(T: Tabloid) -> int:
    return sum(row_maj(row) for row in T.rows)


def u_tilde_tabloid(a) -> Tabloid:
    """Fill the diagram column by column, bottom to top, with 1..n repeating."""
    a = check_composition(a)
    n = len(a)
    rows = [[] for _ in a]
    letter = 0
    for c in range(1, max(a) + 1):
        for r in range(1, n + 1):
            if a[r - 1] >= c:
                rows[r - 1].append(letter % n + 1)
                letter += 1
    T = Tabloid(a, tuple(tuple(row) for row in rows), n)
    assert weight(T) == eta(n, sum(a))
    return T
