"""
Tensor powers of the standard affine crystal, and Demazure subsets of them.

Words are tuples of letters in 1..n.  A word b_1 b_2 ... b_k stands for the
left-associated tensor ((b_1 (x) b_2) (x) ...) (x) b_k, with

    f_i(x (x) y) = f_i(x) (x) y   if eps_i(y) < phi_i(x)
                 = x (x) f_i(y)   otherwise.

String lengths of subwords are found by iterating the operators, never by a
closed-form signature rule.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from .compositions import apply_word, eta, orbit_reduced_word
from .crystal import CrystalGraph
from .errors import DomainError

__all__ = [
    "letter_f", "letter_e", "word_f", "word_e", "word_phi", "word_eps",
    "word_weight", "u_tilde_word", "demazure_op", "demazure_set",
    "build_reference_crystal", "reference_for_shape", "parse_word", "format_word",
]

Word = tuple[int, ...]


def letter_f(x: int, i: int, n: int) -> int | None:
    if n == 1:
        return None  # the affine sl_1 crystal is taken to have no edges
    if i == 0:
        return 1 if x == n else None
    return i + 1 if x == i else None


def letter_e(x: int, i: int, n: int) -> int | None:
    if n == 1:
        return None
    if i == 0:
        return n if x == 1 else None
    return i if x == i + 1 else None


@lru_cache(maxsize=None)
def word_f(w: Word, i: int, n: int) -> Word | None:
    if len(w) == 0:
        return None
    if len(w) == 1:
        y = letter_f(w[0], i, n)
        return None if y is None else (y,)
    x, y = w[:-1], w[-1]
    if word_eps((y,), i, n) < word_phi(x, i, n):
        return word_f(x, i, n) + (y,)
    z = letter_f(y, i, n)
    return None if z is None else x + (z,)


@lru_cache(maxsize=None)
def word_e(w: Word, i: int, n: int) -> Word | None:
    if len(w) == 0:
        return None
    if len(w) == 1:
        y = letter_e(w[0], i, n)
        return None if y is None else (y,)
    x, y = w[:-1], w[-1]
    if word_eps((y,), i, n) > word_phi(x, i, n):
        z = letter_e(y, i, n)
        return None if z is None else x + (z,)
    ex = word_e(x, i, n)
    return None if ex is None else ex + (y,)


@lru_cache(maxsize=None)
def word_phi(w: Word, i: int, n: int) -> int:
    m, v = 0, word_f(w, i, n)
    while v is not None:
        m += 1
        v = word_f(v, i, n)
    return m


@lru_cache(maxsize=None)
def word_eps(w: Word, i: int, n: int) -> int:
    m, v = 0, word_e(w, i, n)
    while v is not None:
        m += 1
        v = word_e(v, i, n)
    return m


def word_weight(w: Word, n: int) -> tuple[int, ...]:
    wt = [0] * n
    for x in w:
        wt[x - 1] += 1
    return tuple(wt)


def u_tilde_word(n: int, k: int) -> Word:
    """(1 2 ... n)^m 1 2 ... r where k = m n + r."""
    if n < 1 or k < 0:
        raise DomainError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    m, r = divmod(k, n)
    return tuple(range(1, n + 1)) * m + tuple(range(1, r + 1))


def demazure_op(X, i: int, n: int) -> set[Word]:
    """X together with every nonzero f_i-iterate of its members."""
    out = set()
    for w in X:
        while w is not None:
            if w in out:
                break
            out.add(w)
            w = word_f(w, i, n)
    return out


def demazure_set(n: int, k: int, word) -> set[Word]:
    X = {u_tilde_word(n, k)}
    for i in word:
        X = demazure_op(X, i, n)
    return X


def build_reference_crystal(n: int, k: int, word) -> CrystalGraph:
    """Demazure crystal D_w{u~} with f-edges restricted to the subset.

    ``word`` is applied left to right, matching ``orbit_reduced_word``.
    """
    members = demazure_set(n, k, word)
    root = u_tilde_word(n, k)
    nodes, index, edges = [root], {root: 0}, {}
    queue = deque([root])
    while queue:
        w = queue.popleft()
        for i in range(n):
            v = word_f(w, i, n)
            if v is None or v not in members:
                continue
            if v not in index:
                index[v] = len(nodes)
                nodes.append(v)
                queue.append(v)
            edges[(index[w], i)] = index[v]
    if len(nodes) != len(members):
        raise AssertionError("Demazure subset is not f-connected from its root")
    shape = apply_word(eta(n, k), word) if n > 0 else None
    return CrystalGraph(n, nodes, edges, [word_weight(w, n) for w in nodes], [0] * len(nodes),
                        shape=shape)


def reference_for_shape(a) -> CrystalGraph:
    return build_reference_crystal(len(a), sum(a), orbit_reduced_word(a))


def parse_word(text: str) -> Word:
    text = text.strip()
    return tuple(int(x) for x in text.split(",")) if text else ()


def format_word(w) -> str:
    return ",".join(str(x) for x in w)
