"""
Weak compositions and the (affine) Weyl group action on them.

A weak composition is stored as a plain tuple of nonnegative ints.  The
simple reflections act by

    s_i . a = a with parts i, i+1 swapped           (1 <= i < n)
    s_0 . a = (a_n + 1, a_2, ..., a_{n-1}, a_1 - 1)

and every composition of degree k is reached from the minimal element
``eta(n, k)`` by a sequence of such moves.

>>> eta(3, 5)
(2, 2, 1)
>>> apply_s((2, 1, 2), 0)
(3, 1, 1)
>>> orbit_reduced_word((3, 1, 1))
(2, 0)
"""

from collections import deque

from .errors import DomainError, UnreachableError

__all__ = [
    "Composition", "ReducedWord",
    "check_composition", "eta", "apply_s", "try_apply_s", "apply_word",
    "orbit_reduced_word", "orbit_word_path", "all_shortest_words",
    "sort_decreasing", "compositions_of", "parse_composition",
    "format_composition",
]

Composition = tuple[int, ...]

# A word (j_1, ..., j_l) means s_{j_1} acts first; w = s_{j_l} ... s_{j_1}.
ReducedWord = tuple[int, ...]


def check_composition(a) -> Composition:
    a = tuple(int(x) for x in a)
    if not a:
        raise DomainError("a weak composition needs at least one part")
    if any(x < 0 for x in a):
        raise DomainError(f"negative part in {a}")
    return a


def eta(n: int, k: int) -> Composition:
    """The minimal composition of degree ``k`` with ``n`` parts."""
    if n < 1 or k < 0:
        raise DomainError(f"eta needs n >= 1 and k >= 0, got n={n}, k={k}")
    m, r = divmod(k, n)
    return (m + 1,) * r + (m,) * (n - r)


def try_apply_s(a: Composition, i: int) -> Composition | None:
    """Like :func:`apply_s` but returns None instead of raising."""
    n = len(a)
    if not 0 <= i < n:
        return None
    if i == 0:
        if a[0] == 0:
            return None
        if n == 1:
            return a
        return (a[-1] + 1,) + a[1:-1] + (a[0] - 1,)
    b = list(a)
    b[i - 1], b[i] = b[i], b[i - 1]
    return tuple(b)


def apply_s(a: Composition, i: int) -> Composition:
    a = check_composition(a)
    if not 0 <= i < len(a):
        raise DomainError(f"generator index {i} out of range for n={len(a)}")
    b = try_apply_s(a, i)
    if b is None:
        raise DomainError(f"s_0 needs a_1 >= 1, got {a}")
    return b


def apply_word(a: Composition, word) -> Composition:
    for i in word:
        a = apply_s(a, i)
    return a


def _orbit_bfs(a: Composition):
    a = check_composition(a)
    start = eta(len(a), sum(a))
    parent = {start: None}
    queue = deque([start])
    while queue:
        b = queue.popleft()
        if b == a:
            break
        for i in range(len(b)):
            c = try_apply_s(b, i)
            if c is None or c == b or c in parent:
                continue
            parent[c] = (b, i)
            queue.append(c)
    return start, parent


def orbit_word_path(a: Composition) -> list[tuple[Composition, int]]:
    """Up-steps ``(b, i)`` carrying eta to ``a``; each step maps b to s_i.b."""
    a = check_composition(a)
    start, parent = _orbit_bfs(a)
    if a not in parent:
        raise UnreachableError(f"{a} is not in the orbit of {start}")
    steps = []
    while parent[a] is not None:
        b, i = parent[a]
        steps.append((b, i))
        a = b
    steps.reverse()
    return steps


def orbit_reduced_word(a: Composition) -> ReducedWord:
    """Shortest word carrying ``eta(n, |a|)`` to ``a`` (BFS, lowest index first)."""
    return tuple(i for _, i in orbit_word_path(a))


def all_shortest_words(a: Composition) -> list[ReducedWord]:
    """Every shortest orbit word for ``a``, sorted."""
    a = check_composition(a)
    start = eta(len(a), sum(a))
    dist = {start: 0}
    layers = [[start]]
    while layers[-1] and a not in dist:
        nxt = []
        for b in layers[-1]:
            for i in range(len(b)):
                c = try_apply_s(b, i)
                if c is not None and c != b and c not in dist:
                    dist[c] = len(layers)
                    nxt.append(c)
        layers.append(nxt)
    if a not in dist:
        raise UnreachableError(f"{a} is not in the orbit of {start}")

    def back(c):
        if c == start:
            return [()]
        out = []
        for b in layers[dist[c] - 1]:
            for i in range(len(b)):
                if try_apply_s(b, i) == c:
                    out.extend(w + (i,) for w in back(b))
        return out

    return sorted(set(back(a)))


def sort_decreasing(a: Composition) -> Composition:
    return tuple(sorted(a, reverse=True))


def compositions_of(k: int, n: int):
    """All weak compositions of ``k`` into ``n`` parts, in lex order."""
    if n == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in compositions_of(k - first, n - 1):
            yield (first,) + rest


def parse_composition(text: str) -> Composition:
    text = text.strip()
    if not text:
        raise DomainError("empty composition")
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise DomainError(f"not a comma-separated composition: {text!r}") from None
    return check_composition(parts)


def format_composition(a) -> str:
    return ",".join(str(x) for x in a)
