"""
Shape-changing embeddings SSKD(a) -> SSKD(s_i . a) along Bruhat up-steps.

``embed_finite`` rearranges rows i and i+1 column by column, ``embed_affine``
rearranges rows 1 and n along the diagonals (row n, col k) / (row 1, col k+1).
Each local choice keeps one triple out of co-inversion, tested with the same
orientation code that defines SSKD.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .compositions import apply_s, check_composition, orbit_word_path
from .crystal import _lower, _raise, string_lengths
from .errors import DomainError
from .tabloid import Tabloid, enumerate_sskd, is_coinversion_entries, is_sskd, reading_word

__all__ = [
    "embed_finite", "embed_affine", "embed", "is_up_step",
    "StepReport", "FiltrationReport", "check_step", "filtration_check",
]


def embed_finite(T: Tabloid, i: int) -> Tabloid:
    """E_i for 1 <= i < n, defined when a_i > a_{i+1}.

    Column k of rows i, i+1 keeps its pair of entries; only their vertical
    order is chosen, left to right, starting from the basement.
    """
    a, n = T.shape, T.n
    if not 1 <= i < n:
        raise DomainError(f"finite embedding needs 1 <= i < n, got i={i}")
    long_, short = a[i - 1], a[i]
    if long_ <= short:
        raise DomainError(f"E_{i} needs a_{i} > a_{i + 1}, got shape {a}")
    x, y = T.rows[i - 1], T.rows[i]
    lower, upper = [], []
    top, top_is_y = i + 1, True  # basement of row i+1 sits above that of row i
    for k in range(short):
        col = k + 1
        stay, other = (y[k], x[k]) if top_is_y else (x[k], y[k])
        # keep the current orientation unless the Type II triple
        # (top of col k, top of col k+1, bottom of col k+1) becomes co-inversion
        if is_coinversion_entries((top, col - 1), (stay, col), (other, col)):
            stay, other = other, stay
            top_is_y = not top_is_y
        upper.append(stay)
        lower.append(other)
        top = stay
    upper.extend(x[short:])
    rows = list(T.rows)
    rows[i - 1], rows[i] = tuple(lower), tuple(upper)
    return Tabloid(apply_s(a, i), tuple(rows), T.alphabet)


def embed_affine(T: Tabloid) -> Tabloid:
    """E_0, defined when a_n >= a_1 > 0.

    Step k (1 <= k < a_1) fills the diagonal (row n, col k), (row 1, col k+1)
    with {y_k, x_{k+1}}; row n's entries from column a_1 on are then appended
    to row 1.
    """
    a, n = T.shape, T.n
    if n < 2:
        raise DomainError("affine embedding needs n >= 2")
    a1, an = a[0], a[-1]
    if a1 == 0 or an < a1:
        raise DomainError(f"E_0 needs a_n >= a_1 > 0, got shape {a}")
    x, y = T.rows[0], T.rows[-1]
    row1, rown = [x[0]], []
    holds_x = True  # whether (1, k) of the result holds x_k
    for k in range(1, a1):
        below = row1[-1]
        up, right = (y[k - 1], x[k]) if holds_x else (x[k], y[k - 1])
        # Type I triple: (1,k), (1,k+1) with (n,k) above the left cell
        clash = (is_coinversion_entries((below, k), (right, k + 1), (up, k))
                 or up == below or up == right)
        if clash:
            up, right = right, up
        holds_x = right == x[k]
        rown.append(up)
        row1.append(right)
    row1.extend(y[a1 - 1:])
    rows = list(T.rows)
    rows[0], rows[-1] = tuple(row1), tuple(rown)
    return Tabloid(apply_s(a, 0), tuple(rows), T.alphabet)


def is_up_step(a, i: int) -> bool:
    """Whether E_i is defined on shape ``a``."""
    if i == 0:
        return len(a) >= 2 and a[-1] >= a[0] > 0
    return 1 <= i < len(a) and a[i - 1] > a[i]


def embed(T: Tabloid, i: int) -> Tabloid:
    return embed_affine(T) if i == 0 else embed_finite(T, i)


@dataclass
class StepReport:
    i: int
    source: tuple
    target: tuple
    sizes: tuple
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"i": self.i, "sizes": list(self.sizes), "violations": self.violations}


@dataclass
class FiltrationReport:
    shape: tuple
    word: tuple
    steps: list

    @property
    def ok(self) -> bool:
        return all(not s.violations for s in self.steps)

    def violations(self) -> list:
        return [v for s in self.steps for v in s.violations]

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "word": list(self.word),
                "steps": [s.to_json() for s in self.steps]}


def _word(T: Tabloid) -> str:
    return "".join(map(str, reading_word(T)))


def check_step(b, i: int) -> StepReport:
    """Check E_i : SSKD(b) -> SSKD(s_i . b) against the filtration properties.

    String lengths phi_j are compared for j != i; for j = i the codomain
    string may only grow, since that is where the new elements come from.
    """
    b = check_composition(b)
    c = apply_s(b, i)
    dom = enumerate_sskd(b)
    cod = set(enumerate_sskd(c))
    report = StepReport(i, b, c, (len(dom), len(cod)))
    bad: dict[str, list[Tabloid]] = {}

    def flag(check, T):
        bad.setdefault(check, []).append(T)

    if not is_up_step(b, i):
        report.violations.append({"check": "up-step", "witness": None, "count": 1})
        return report
    image = {}
    for T in dom:
        S = embed(T, i)
        image[T] = S
        if S not in cod or not is_sskd(S):
            flag("image", T)
    targets = set(image.values())
    if len(targets) != len(dom):
        seen = {}
        for T, S in image.items():
            if S in seen:
                flag("injective", T)
            seen[S] = T
    for S in cod:
        if _raise(S, i) is None and S not in targets:
            flag("heads", S)
    n = len(b)
    for T, S in image.items():
        for j in range(n):
            pt, ps = string_lengths(T, j)[0], string_lengths(S, j)[0]
            if (pt != ps) if j != i else (ps < pt):
                flag(f"phi_{j}", T)
            fT = _lower(T, j)
            if fT is not None and image.get(fT) != _lower(S, j):
                flag(f"intertwine_{j}", T)
    reached = set(targets)
    for S in targets:
        R = _lower(S, i)
        while R is not None and R not in reached:
            reached.add(R)
            R = _lower(R, i)
    if reached != cod:
        for S in sorted(cod ^ reached, key=reading_word):
            flag("strings", S)
    for check in sorted(bad):
        witness = min(bad[check], key=reading_word)
        report.violations.append({"check": check, "witness": witness.to_json(),
                                  "reading_word": _word(witness), "count": len(bad[check])})
    return report


def filtration_check(a) -> FiltrationReport:
    """Walk the orbit word of ``a`` from eta, checking every embedding step."""
    a = check_composition(a)
    path = orbit_word_path(a)
    steps = [check_step(b, i) for b, i in path]
    return FiltrationReport(a, tuple(i for _, i in path), steps)
