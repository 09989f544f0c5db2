"""
q-graded characters: E_a(X; q, 0), key polynomials, key decompositions, energy.

A :class:`QPoly` maps exponent vectors to integer polynomials in q, stored as
``{exponent: {q_degree: coefficient}}`` with no zero coefficients.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .compositions import check_composition, sort_decreasing
from .crystal import CrystalGraph, _raise, build_crystal
from .errors import DecompositionError, DomainError
from .tabloid import enumerate_sskd, maj, weight

__all__ = [
    "QPoly", "monomial", "specialized_macdonald", "graded_character",
    "divided_difference_pi", "key_polynomial", "decompose_into_keys",
    "decomposition_sum", "format_decomposition", "local_energy", "global_energy",
    "row_energy_sum",
]


class QPoly:
    """Sparse polynomial in x_1..x_n with coefficients in Z[q]."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms: dict[tuple[int, ...], dict[int, int]] = {}
        for exp, coeffs in (terms or {}).items():
            for d, c in coeffs.items():
                self._add(tuple(exp), d, c)

    def _add(self, exp, d, c):
        if c == 0:
            return
        if len(exp) != self.n:
            raise DomainError(f"exponent {exp} has length != {self.n}")
        row = self.terms.setdefault(exp, {})
        row[d] = row.get(d, 0) + c
        if row[d] == 0:
            del row[d]
            if not row:
                del self.terms[exp]

    def copy(self) -> QPoly:
        return QPoly(self.n, self.terms)

    def __add__(self, other: QPoly) -> QPoly:
        out = self.copy()
        for exp, coeffs in other.terms.items():
            for d, c in coeffs.items():
                out._add(exp, d, c)
        return out

    def __neg__(self) -> QPoly:
        return QPoly(self.n, {e: {d: -c for d, c in cs.items()} for e, cs in self.terms.items()})

    def __sub__(self, other: QPoly) -> QPoly:
        return self + (-other)

    def __mul__(self, other: QPoly) -> QPoly:
        out = QPoly(self.n)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(u + v for u, v in zip(e1, e2))
                for d1, a in c1.items():
                    for d2, b in c2.items():
                        out._add(exp, d1 + d2, a * b)
        return out

    def shift_q(self, d: int) -> QPoly:
        """Multiply by q^d."""
        return QPoly(self.n, {e: {k + d: c for k, c in cs.items()} for e, cs in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, QPoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset((e, frozenset(c.items())) for e, c in self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def at_q(self, q: int) -> dict[tuple[int, ...], int]:
        """Specialize q to an integer."""
        out = {}
        for exp, coeffs in self.terms.items():
            v = sum(c * q ** d for d, c in coeffs.items())
            if v:
                out[exp] = v
        return out

    def evaluate(self, xs, q=1):
        """Value at integer (or Fraction) point ``xs``."""
        total = 0
        for exp, coeffs in self.terms.items():
            mono = 1
            for x, e in zip(xs, exp):
                mono *= x ** e
            total += mono * sum(c * q ** d for d, c in coeffs.items())
        return total

    def sorted_terms(self) -> list[tuple[int, tuple[int, ...], int]]:
        """(q_degree, exponent, coefficient), descending q-degree then exponent."""
        flat = [(d, exp, c) for exp, cs in self.terms.items() for d, c in cs.items()]
        flat.sort(key=lambda t: (t[0], t[1]), reverse=True)
        return flat

    def __str__(self) -> str:
        parts = []
        for d, exp, c in self.sorted_terms():
            bits = [] if c == 1 else [str(c)]
            if d == 1:
                bits.append("q")
            elif d != 0:
                bits.append(f"q^{d}")
            bits.append("x^(" + ",".join(map(str, exp)) + ")")
            parts.append("*".join(bits))
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


def monomial(exp, d: int = 0, c: int = 1) -> QPoly:
    exp = tuple(exp)
    return QPoly(len(exp), {exp: {d: c}})


def specialized_macdonald(a) -> QPoly:
    """Sum of q^maj(T) x^wt(T) over SSKD(a)."""
    a = check_composition(a)
    out = QPoly(len(a))
    for T in enumerate_sskd(a):
        out._add(weight(T), maj(T), 1)
    return out


def graded_character(G: CrystalGraph) -> QPoly:
    out = QPoly(G.n)
    for wt, d in zip(G.weights, G.grades):
        out._add(tuple(wt), d, 1)
    return out


def _pi_monomial(exp, i):
    """Monomials (with sign) of the Demazure operator pi_i applied to x^exp."""
    p, r = exp[i - 1], exp[i]
    total = p + r

    def mono(t):
        e = list(exp)
        e[i - 1], e[i] = t, total - t
        return tuple(e)

    if p >= r:
        return [(mono(t), 1) for t in range(r, p + 1)]
    return [(mono(t), -1) for t in range(p + 1, r)]


def divided_difference_pi(f: QPoly, i: int) -> QPoly:
    """pi_i f = (x_i f - x_{i+1} s_i f) / (x_i - x_{i+1}), monomial by monomial."""
    if not 1 <= i < f.n:
        raise DomainError(f"pi_i needs 1 <= i < n, got i={i} for n={f.n}")
    out = QPoly(f.n)
    for exp, coeffs in f.terms.items():
        for m, sign in _pi_monomial(exp, i):
            for d, c in coeffs.items():
                out._add(m, d, sign * c)
    return out


def key_polynomial(b, chain: str = "first") -> QPoly:
    """kappa_b = pi_{j_1} ... pi_{j_l} x^{sort(b)}.

    ``chain`` picks which ascent b_i < b_{i+1} to peel off at each step
    ("first" or "last"); the answer does not depend on it.
    """
    b = check_composition(b)
    if chain not in ("first", "last"):
        raise DomainError(f"unknown chain choice {chain!r}")
    return _key(b, chain)


@lru_cache(maxsize=None)
def _key(b, chain):
    ascents = [i for i in range(1, len(b)) if b[i - 1] < b[i]]
    if not ascents:
        return monomial(b)
    i = ascents[0] if chain == "first" else ascents[-1]
    s = list(b)
    s[i - 1], s[i] = s[i], s[i - 1]
    return divided_difference_pi(_key(tuple(s), chain), i)


def _rearrangements(lam):
    from itertools import permutations
    return sorted(set(permutations(lam)))


def decompose_into_keys(a) -> list[tuple[int, tuple[int, ...]]]:
    """Split the graded character of the crystal on SSKD(a) into q^d kappa_b.

    Components are taken with the affine edges removed.  Returned in
    descending d, then ascending b.
    """
    a = check_composition(a)
    G = build_crystal(a)
    n = G.n
    # undirected components of the finite edges
    parent = list(range(len(G)))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    for (u, i), v in G.edges.items():
        if i != 0:
            parent[find(u)] = find(v)
    comps = defaultdict(list)
    for u in range(len(G)):
        comps[find(u)].append(u)
    out = []
    for members in comps.values():
        grades = {G.grades[u] for u in members}
        if len(grades) != 1:
            raise DecompositionError(f"maj not constant on a component of {a}: {sorted(grades)}")
        tops = [u for u in members if all(_raise(G.nodes[u], i) is None for i in range(1, n))]
        if len(tops) != 1:
            raise DecompositionError(f"component of {a} has {len(tops)} highest weight nodes")
        lam = sort_decreasing(G.weights[tops[0]])
        char = QPoly(n)
        for u in members:
            char._add(tuple(G.weights[u]), 0, 1)
        hits = [b for b in _rearrangements(lam) if key_polynomial(b) == char]
        if len(hits) != 1:
            raise DecompositionError(f"component of {a} with top weight {G.weights[tops[0]]} "
                                     f"matches {len(hits)} key polynomials")
        out.append((grades.pop(), hits[0]))
    out.sort(key=lambda t: (-t[0], t[1]))
    return out


def decomposition_sum(terms, n: int) -> QPoly:
    out = QPoly(n)
    for d, b in terms:
        out = out + key_polynomial(b).shift_q(d)
    return out


def format_decomposition(terms) -> str:
    return "".join(f"q^{d} * kappa_({','.join(map(str, b))})\n" for d, b in terms)


def local_energy(b: int, c: int) -> int:
    """H(b (x) c) on single letters: 1 on a strict ascent, else 0."""
    return 1 if b < c else 0


def global_energy(w) -> int:
    """sum_{i=1}^{L-1} (L - i) H(w_i (x) w_{i+1}) for a word of length L."""
    L = len(w)
    return sum((L - i) * local_energy(w[i - 1], w[i]) for i in range(1, L))


def row_energy_sum(T) -> int:
    """Global energy of each row of a tabloid, summed."""
    return sum(global_energy(row) for row in T.rows)
