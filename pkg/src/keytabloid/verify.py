"""
Exhaustive invariant sweeps behind ``keytabloid verify``.

Every check yields a :class:`CheckResult`; a check fails when it has at least
one violation, and keeps the violation with the smallest key as its witness.
Checks marked ``informational`` are reported but never fail the run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from . import crystal as C
from .characters import (decompose_into_keys, decomposition_sum, global_energy,
                         graded_character, key_polynomial, local_energy, row_energy_sum,
                         specialized_macdonald)
from .compositions import (all_shortest_words, apply_word, compositions_of, eta,
                           orbit_reduced_word, orbit_word_path, try_apply_s)
from .embeddings import check_step
from .errors import DecompositionError, UnreachableError
from .graphs import check_isomorphism
from .reference import (build_reference_crystal, demazure_op, demazure_set, u_tilde_word,
                        word_e, word_eps, word_f, word_phi)
from .tabloid import Tabloid, enumerate_sskd, maj, reading_word, u_tilde_tabloid, weight

__all__ = ["CheckResult", "SUITES", "run_suites", "shapes"]

SUITES = ("crystal", "embedding", "character", "energy")

# fixed ranges of the energy suite, independent of the sweep size
ENERGY_MAX_N = 5
ENERGY_MAX_ROW = 5


@dataclass
class CheckResult:
    suite: str
    name: str
    cases: int = 0
    violations: int = 0
    witness: object = None
    informational: bool = False
    _key: object = field(default=None, repr=False)

    @property
    def ok(self) -> bool:
        return self.informational or self.violations == 0

    def add(self, good: bool, witness=None, key=None):
        self.cases += 1
        if not good:
            self.violations += 1
            key = key if key is not None else str(witness)
            if self._key is None or key < self._key:
                self._key, self.witness = key, witness

    def line(self) -> str:
        tag = "INFO" if self.informational else ("PASS" if self.ok else "FAIL")
        text = f"{tag} {self.suite}.{self.name}: {self.cases} cases, {self.violations} violations"
        if self.violations:
            text += f"; witness {self.witness}"
        return text

    def to_json(self) -> dict:
        return {"suite": self.suite, "check": self.name, "ok": self.ok,
                "informational": self.informational, "cases": self.cases,
                "violations": self.violations, "witness": self.witness}


def shapes(max_rows: int, max_degree: int):
    """Every weak composition with 1 <= n <= max_rows parts and degree <= max_degree."""
    for n in range(1, max_rows + 1):
        for k in range(max_degree + 1):
            yield from compositions_of(k, n)


@lru_cache(maxsize=None)
def _sskd(a) -> tuple[Tabloid, ...]:
    return tuple(enumerate_sskd(a))


@lru_cache(maxsize=None)
def _crystal(a):
    return C.build_crystal(a)


def _fmt(a) -> str:
    return ",".join(map(str, a))


def _tw(a, T) -> str:
    return f"shape={_fmt(a)} rw={''.join(map(str, reading_word(T)))}"


def _reachable(max_rows, max_degree):
    out = []
    for a in shapes(max_rows, max_degree):
        try:
            orbit_word_path(a)
        except UnreachableError:
            continue
        out.append(a)
    return out


def crystal_suite(max_rows: int, max_degree: int) -> list[CheckResult]:
    R = {name: CheckResult("crystal", name) for name in (
        "orbit_reachable", "orbit_word_replay", "u_tilde_highest", "reading_word_injective",
        "closure", "inverse", "weight_steps", "sweep_neutral", "pairing_rows",
        "pairing_order_independent", "bfs_equals_enumeration", "isomorphism",
        "maj_constant_finite", "reference_word_independent", "demazure_idempotent",
        "demazure_braid")}
    div = CheckResult("crystal", "phi_equals_unpaired", informational=True)

    # reachability is cheap, so it runs two degrees further than the rest
    for a in shapes(max_rows, max_degree + 2):
        try:
            word = orbit_reduced_word(a)
        except UnreachableError:
            R["orbit_reachable"].add(False, _fmt(a), a)
            continue
        R["orbit_reachable"].add(True)
        b, good = eta(len(a), sum(a)), True
        for i in word:
            c = try_apply_s(b, i)
            good &= c is not None and c != b
            b = c if c is not None else b
        R["orbit_word_replay"].add(good and b == a, _fmt(a), a)

    for a in _reachable(max_rows, max_degree):
        n = len(a)
        S = _sskd(a)
        Sset = set(S)
        U = u_tilde_tabloid(a)
        R["u_tilde_highest"].add(
            U in Sset and weight(U) == eta(n, sum(a))
            and all(C.e(U, i) is None for i in range(1, n)), _fmt(a), a)
        R["reading_word_injective"].add(len({reading_word(T) for T in S}) == len(S), _fmt(a), a)
        for T in S:
            p = C.pairing(T, 0) if n > 1 else None
            for i in range(n if n > 1 else 0):
                low, high = C.letters(n, i)
                F, E = C.f(T, i), C.e(T, i)
                R["closure"].add((F is None or F in Sset) and (E is None or E in Sset),
                                 f"{_tw(a, T)} i={i}", (a, reading_word(T), i))
                R["inverse"].add((F is None or C.e(F, i) == T) and (E is None or C.f(E, i) == T),
                                 f"{_tw(a, T)} i={i}", (a, reading_word(T), i))
                if F is not None:
                    wt = list(weight(T))
                    wt[low - 1] -= 1
                    wt[high - 1] += 1
                    R["weight_steps"].add(weight(F) == tuple(wt), f"{_tw(a, T)} i={i}",
                                          (a, reading_word(T), i))
                pa = C.pairing(T, i)
                same = (pa == C.pairing_iterative(T, i)
                        == C.pairing_iterative(T, i, from_right=True))
                R["pairing_order_independent"].add(same, f"{_tw(a, T)} i={i}",
                                                   (a, reading_word(T), i))
                phi, eps = C.string_lengths(T, i)
                div.add((phi, eps) == C.unpaired_counts(T, i), f"{_tw(a, T)} i={i}",
                        (a, reading_word(T), i))
            if p is None:
                continue
            F = C.f(T, 0)
            if F is None:
                continue
            R["sweep_neutral"].add(len(C.pairing(F, 0).matched) == len(p.matched),
                                   _tw(a, T), (a, reading_word(T)))
            good = True
            for pair in p.matched:
                for x in pair:
                    (y,) = pair - {x}
                    if T.entry(*x) == n and F.entry(*x) == 1:
                        lx, ly = a[x[0] - 1], a[y[0] - 1]
                        if (y[0] > x[0] and not lx > ly) or (y[0] < x[0] and not lx >= ly):
                            good = False
            R["pairing_rows"].add(good, _tw(a, T), (a, reading_word(T)))

        G = _crystal(a)
        R["bfs_equals_enumeration"].add(set(G.nodes) == Sset, _fmt(a), a)
        word = orbit_reduced_word(a)
        H = build_reference_crystal(n, sum(a), word)
        iso = check_isomorphism(G, H)
        R["isomorphism"].add(bool(iso), f"{_fmt(a)} {iso.witness}", a)
        R["maj_constant_finite"].add(
            all(G.grades[u] == G.grades[v] for (u, i), v in G.edges.items() if i != 0),
            _fmt(a), a)
        words = all_shortest_words(a)
        if len(words) > 1:
            sets = {frozenset(demazure_set(n, sum(a), w)) for w in words}
            R["reference_word_independent"].add(len(sets) == 1, _fmt(a), a)
        X = demazure_set(n, sum(a), word)
        for i in range(n if n > 1 else 0):
            R["demazure_idempotent"].add(demazure_op(demazure_op(X, i, n), i, n)
                                         == demazure_op(X, i, n), f"{_fmt(a)} i={i}", (a, i))
            if n >= 3:
                j = (i + 1) % n
                lhs = demazure_op(demazure_op(demazure_op(X, i, n), j, n), i, n)
                rhs = demazure_op(demazure_op(demazure_op(X, j, n), i, n), j, n)
                R["demazure_braid"].add(lhs == rhs, f"{_fmt(a)} i={i} j={j}", (a, i))
    return list(R.values()) + [div]


def embedding_suite(max_rows: int, max_degree: int) -> list[CheckResult]:
    R = {}
    steps = set()
    for a in _reachable(max_rows, max_degree):
        steps.update(orbit_word_path(a))
    res = CheckResult("embedding", "filtration_steps")
    for b, i in sorted(steps):
        rep = check_step(b, i)
        res.add(not rep.violations, f"{_fmt(b)} i={i} {rep.violations[:1]}", (b, i))
        for v in rep.violations:
            R.setdefault(v["check"], CheckResult("embedding", v["check"])).add(
                False, f"{_fmt(b)} i={i} rw={v.get('reading_word')}", (b, i))
    return [res] + [R[k] for k in sorted(R)]


def character_suite(max_rows: int, max_degree: int) -> list[CheckResult]:
    R = {name: CheckResult("character", name) for name in (
        "graded_character", "decomposition", "decomposition_count", "key_chain_independent")}
    for a in _reachable(max_rows, max_degree):
        n = len(a)
        E = specialized_macdonald(a)
        R["graded_character"].add(graded_character(_crystal(a)) == E, _fmt(a), a)
        try:
            terms = decompose_into_keys(a)
        except DecompositionError as exc:
            R["decomposition"].add(False, f"{_fmt(a)} {exc}", a)
            continue
        total = decomposition_sum(terms, n)
        R["decomposition"].add(total == E, _fmt(a), a)
        R["decomposition_count"].add(sum(total.at_q(1).values()) == len(_sskd(a)), _fmt(a), a)
        for _, b in terms:
            R["key_chain_independent"].add(key_polynomial(b) == key_polynomial(b, "last"),
                                           _fmt(b), b)
    return list(R.values())


def energy_axiom_delta(b: int, c: int, i: int, n: int) -> int:
    """Expected change of H from b (x) c to e_i(b (x) c).

    Finite labels leave H unchanged; for label 0 the step is -1 when
    phi_0(b) >= eps_0(c) and +1 otherwise, which is the sign compatible with
    H = [b < c] under this package's tensor rule.
    """
    if i != 0:
        return 0
    return -1 if word_phi((b,), 0, n) >= word_eps((c,), 0, n) else 1


def energy_suite(max_rows: int, max_degree: int) -> list[CheckResult]:
    R = {name: CheckResult("energy", name) for name in (
        "axioms", "single_row_global_energy", "row_energy_sum")}
    for n in range(1, ENERGY_MAX_N + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                for i in range(n):
                    v = word_e((b, c), i, n)
                    if v is None:
                        continue
                    good = local_energy(*v) == local_energy(b, c) + energy_axiom_delta(b, c, i, n)
                    R["axioms"].add(good, f"n={n} {b}(x){c} i={i}", (n, b, c, i))
    for n in range(1, ENERGY_MAX_N + 1):
        for r in range(n):
            for length in range(1, ENERGY_MAX_ROW + 1):
                a = tuple(length if q == r else 0 for q in range(n))
                for T in _sskd(a):
                    R["single_row_global_energy"].add(
                        maj(T) == global_energy(reading_word(T)), _tw(a, T), (a, reading_word(T)))
    for a in _reachable(max_rows, max_degree):
        for T in _sskd(a):
            R["row_energy_sum"].add(maj(T) == row_energy_sum(T), _tw(a, T), (a, reading_word(T)))
    return list(R.values())


_RUNNERS = {"crystal": crystal_suite, "embedding": embedding_suite,
            "character": character_suite, "energy": energy_suite}


def run_suites(max_rows: int, max_degree: int, suites=SUITES):
    """Run the named suites; returns (results, seconds per suite)."""
    results, timing = [], {}
    for name in suites:
        t0 = time.perf_counter()
        results.extend(_RUNNERS[name](max_rows, max_degree))
        timing[name] = time.perf_counter() - t0
    return results, timing
