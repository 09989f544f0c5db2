"""
Raising and lowering operators on semistandard key tabloids.

For 1 <= i < n the operators move between entries i and i+1; the affine
operators (label 0) move between n and 1.  Both follow one pattern, with a
"low" letter (i, resp. n) that lowering turns into the "high" letter (i+1,
resp. 1):

* pair low and high letters sharing a column (for label 0, only columns
  right of the first), then bracket-match the rest along the column reading
  word, a low letter opening and a later high letter closing;
* lowering flips the leftmost unpaired low letter and raising flips the
  rightmost unpaired high letter, each followed by two sweeps over the
  consecutive columns beside it.

All operators return ``None`` for zero.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import DomainError, InvalidInput
from .tabloid import Cell, Tabloid, is_sskd, maj, reading_cells, u_tilde_tabloid, weight

__all__ = [
    "Pairing", "letters", "pairing", "pairing_iterative", "i_pairing", "zero_pairing",
    "lower", "raise_", "lower0", "raise0", "f", "e", "string_lengths",
    "unpaired_counts", "CrystalGraph", "build_crystal", "changed_cells",
]


@dataclass(frozen=True)
class Pairing:
    matched: frozenset[frozenset[Cell]]
    unpaired_low: tuple[Cell, ...]   # reading order
    unpaired_high: tuple[Cell, ...]  # reading order

    def matched_cells(self) -> set[Cell]:
        return {cell for pair in self.matched for cell in pair}


def letters(n: int, i: int) -> tuple[int, int]:
    """(low, high) letters for label ``i``."""
    if not 0 <= i < n:
        raise DomainError(f"label {i} out of range for n={n}")
    return (n, 1) if i == 0 else (i, i + 1)


def _column_pairs(T: Tabloid, i: int, low: int, high: int):
    pairs = []
    # the affine pairing leaves column 1 to the bracket scan
    for c in range(2 if i == 0 else 1, max(T.shape, default=0) + 1):
        col = dict((x, r) for r, x in T.column(c))
        if low in col and high in col:
            pairs.append(frozenset({(col[low], c), (col[high], c)}))
    return pairs


def pairing(T: Tabloid, i: int) -> Pairing:
    """i-pairing (0-pairing for ``i == 0``) via a single stack scan."""
    # a low letter opens a bracket closed by a later high letter
    low, high = letters(T.n, i)
    opener, closer = low, high
    matched = _column_pairs(T, i, low, high)
    done = {cell for pair in matched for cell in pair}
    stack: list[Cell] = []
    for cell in reading_cells(T):
        if cell in done:
            continue
        x = T.entry(*cell)
        if x == opener:
            stack.append(cell)
        elif x == closer and stack:
            matched.append(frozenset({stack.pop(), cell}))
    return _finish(T, low, high, matched)


def pairing_iterative(T: Tabloid, i: int, from_right: bool = False) -> Pairing:
    """Literal fixed-point pairing: repeatedly match any admissible pair.

    Candidates are scanned left to right, or right to left with
    ``from_right``; the result must not depend on the direction.
    """
    # a low letter opens a bracket closed by a later high letter
    low, high = letters(T.n, i)
    opener, closer = low, high
    matched = _column_pairs(T, i, low, high)
    done = {cell for pair in matched for cell in pair}
    word = [cell for cell in reading_cells(T) if T.entry(*cell) in (low, high)]
    changed = True
    while changed:
        changed = False
        positions = range(len(word))
        for q in (reversed(positions) if from_right else positions):
            if word[q] in done or T.entry(*word[q]) != closer:
                continue
            for p in range(q - 1, -1, -1):
                if word[p] in done:
                    continue
                if T.entry(*word[p]) == opener:
                    matched.append(frozenset({word[p], word[q]}))
                    done.update((word[p], word[q]))
                    changed = True
                break
            if changed:
                break
    return _finish(T, low, high, matched)


def _finish(T, low, high, matched) -> Pairing:
    done = {cell for pair in matched for cell in pair}
    free = [cell for cell in reading_cells(T) if cell not in done]
    return Pairing(
        frozenset(matched),
        tuple(cell for cell in free if T.entry(*cell) == low),
        tuple(cell for cell in free if T.entry(*cell) == high),
    )


def i_pairing(T: Tabloid, i: int) -> Pairing:
    if not 1 <= i < T.n:
        raise DomainError(f"i-pairing needs 1 <= i < n, got i={i}")
    return pairing(T, i)


def zero_pairing(T: Tabloid) -> Pairing:
    return pairing(T, 0)


def _check(T: Tabloid, check: bool):
    if T.alphabet != T.n:
        raise InvalidInput(f"crystal operators need alphabet == n, got {T.alphabet} != {T.n}")
    if check and not is_sskd(T):
        raise InvalidInput("not a semistandard key tabloid")


def _row_of(T: Tabloid, col: int, value: int):
    for r, x in T.column(col):
        if x == value and col >= 1:
            return r
    return None


def _sweep(T: Tabloid, r: int, c: int, a: int, b: int) -> dict[Cell, int]:
    """Flip cell (r, c) from a to b and swap a/b in the neighbouring columns.

    Left of c: consecutive columns with a in row r and b above it.
    Right of c: consecutive columns with a in row r and b below it.
    """
    changes = {(r, c): b}
    for step, above in ((-1, True), (1, False)):
        col = c + step
        while 1 <= col and T.has_cell(r, col) and T.entry(r, col) == a:
            rb = _row_of(T, col, b)
            if rb is None or (rb > r) != above:
                break
            changes[(r, col)] = b
            changes[(rb, col)] = a
            col += step
    return changes


def _lower(T: Tabloid, i: int) -> Tabloid | None:
    if T.n == 1:
        return None  # n = 1: low and high letters coincide, no edges
    low, high = letters(T.n, i)
    p = pairing(T, i)
    if not p.unpaired_low:
        return None
    r, c = p.unpaired_low[0]
    if i == 0:
        if c == 1 and sum(1 for x in T.shape if x) > 1:
            return None
    elif r == i and all(
        T.entry(i, cc) == i and (_row_of(T, cc, i + 1) or 0) > i for cc in range(1, c)
    ):
        return None
    return T.with_entries(_sweep(T, r, c, low, high))


def _raise(T: Tabloid, i: int) -> Tabloid | None:
    if T.n == 1:
        return None
    low, high = letters(T.n, i)
    p = pairing(T, i)
    if not p.unpaired_high:
        return None
    r, c = p.unpaired_high[-1]
    if i == 0 and c == 1 and sum(1 for x in T.shape if x) > 1:
        return None  # mirror of the column-1 clause of f_0
    if i == 0 and r < T.n and all(
        T.entry(r, cc) == 1 and (_row_of(T, cc, T.n) or 0) > r for cc in range(1, c)
    ):
        return None
    return T.with_entries(_sweep(T, r, c, high, low))


def lower(T: Tabloid, i: int, check: bool = True) -> Tabloid | None:
    """The lowering operator f_i for 1 <= i < n."""
    _check(T, check)
    if not 1 <= i < T.n:
        raise DomainError(f"lower needs 1 <= i < n, got i={i}")
    return _lower(T, i)


def raise_(T: Tabloid, i: int, check: bool = True) -> Tabloid | None:
    """The raising operator e_i for 1 <= i < n."""
    _check(T, check)
    if not 1 <= i < T.n:
        raise DomainError(f"raise needs 1 <= i < n, got i={i}")
    return _raise(T, i)


def lower0(T: Tabloid, check: bool = True) -> Tabloid | None:
    """The affine lowering operator f_0."""
    _check(T, check)
    return _lower(T, 0)


def raise0(T: Tabloid, check: bool = True) -> Tabloid | None:
    """The affine raising operator e_0."""
    _check(T, check)
    return _raise(T, 0)


def f(T: Tabloid, i: int, check: bool = False) -> Tabloid | None:
    """f_i for any label 0 <= i < n."""
    _check(T, check)
    letters(T.n, i)
    return _lower(T, i)


def e(T: Tabloid, i: int, check: bool = False) -> Tabloid | None:
    """e_i for any label 0 <= i < n."""
    _check(T, check)
    letters(T.n, i)
    return _raise(T, i)


def changed_cells(S: Tabloid, T: Tabloid) -> list[Cell]:
    return [(r, c) for (r, c, x) in S.cells() if T.entry(r, c) != x]


def string_lengths(T: Tabloid, i: int) -> tuple[int, int]:
    """(phi_i, eps_i) by iterating f_i and e_i until they vanish."""
    _check(T, False)
    out = []
    for op in (_lower, _raise):
        m, S = 0, op(T, i)
        while S is not None:
            m += 1
            S = op(S, i)
        out.append(m)
    return out[0], out[1]


def unpaired_counts(T: Tabloid, i: int) -> tuple[int, int]:
    p = pairing(T, i)
    return len(p.unpaired_low), len(p.unpaired_high)


@dataclass
class CrystalGraph:
    """Finite rooted crystal graph; nodes are tabloids or tensor words."""
    n: int
    nodes: list                       # BFS order, index = node id
    edges: dict[tuple[int, int], int]  # (node id, label) -> node id
    weights: list[tuple[int, ...]]
    grades: list[int]
    shape: tuple[int, ...] | None = None
    root: int = 0

    def __post_init__(self):
        self.index = {node: k for k, node in enumerate(self.nodes)}

    def __len__(self):
        return len(self.nodes)

    def edge_list(self) -> list[tuple[int, int, int]]:
        return sorted((u, v, i) for (u, i), v in self.edges.items())

    def successor(self, u: int, i: int) -> int | None:
        return self.edges.get((u, i))

    def restricted(self, labels) -> CrystalGraph:
        keep = set(labels)
        g = CrystalGraph(self.n, self.nodes, {k: v for k, v in self.edges.items() if k[1] in keep},
                         self.weights, self.grades, self.shape, self.root)
        return g


def build_crystal(a) -> CrystalGraph:
    """Breadth-first closure of U~_a under every f_i, labels in increasing order."""
    root = u_tilde_tabloid(a)
    n = root.n
    nodes, index, edges = [root], {root: 0}, {}
    queue = deque([root])
    while queue:
        T = queue.popleft()
        for i in range(n):
            S = _lower(T, i)
            if S is None:
                continue
            if S not in index:
                index[S] = len(nodes)
                nodes.append(S)
                queue.append(S)
            edges[(index[T], i)] = index[S]
    return CrystalGraph(n, nodes, edges, [weight(T) for T in nodes], [maj(T) for T in nodes],
                        shape=root.shape)
