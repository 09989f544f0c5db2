import pytest

from keytabloid.compositions import compositions_of, eta
from keytabloid.crystal import (build_crystal, changed_cells, e, f, i_pairing, letters, lower,
                                lower0, pairing, pairing_iterative, raise0, raise_,
                                string_lengths, unpaired_counts, zero_pairing)
from keytabloid.errors import DomainError, InvalidInput
from keytabloid.tabloid import Tabloid, enumerate_sskd, is_sskd, maj, u_tilde_tabloid, weight


def T(*rows, alphabet=None):
    return Tabloid.from_rows(rows, alphabet)


# the six tabloids of SSKD(0,2,1), named in breadth-first order
A = T([], [1, 3], [2])
B = T([], [1, 1], [2])
C = T([], [1, 1], [3])
D = T([], [2, 2], [1])
E = T([], [2, 1], [3])
F = T([], [2, 2], [3])


class TestPairing:
    def test_letters(self):
        assert letters(3, 0) == (3, 1)
        assert letters(3, 2) == (2, 3)
        with pytest.raises(DomainError):
            letters(3, 3)

    def test_column_pair_then_unpaired_low(self):
        p = i_pairing(B, 1)
        assert p.matched == {frozenset({(3, 1), (2, 1)})}
        assert p.unpaired_low == ((2, 2),)
        assert p.unpaired_high == ()

    def test_zero_pairing_of_root(self):
        p = zero_pairing(A)
        assert p.matched == frozenset()
        assert p.unpaired_low == ((2, 2),)
        assert unpaired_counts(A, 0) == (1, 1)

    def test_zero_pairing_skips_first_column(self):
        # columns 2 and up pair a 3 with a 1 directly; column 1 is left to the scan
        U = u_tilde_tabloid((2, 2, 2))
        p = zero_pairing(U)
        assert p.matched == {frozenset({(1, 2), (3, 2)})}
        assert p.unpaired_low == ((3, 1),)
        assert p.unpaired_high == ((1, 1),)

    def test_absent_letters(self):
        assert unpaired_counts(T([1], [], []), 2) == (0, 0)
        assert unpaired_counts(D, 2) == (2, 0)

    def test_i_pairing_rejects_zero(self):
        with pytest.raises(DomainError):
            i_pairing(A, 0)

    def test_iterative_agrees(self):
        for a in [(0, 2, 1), (2, 3, 0), (1, 2, 1, 2)]:
            for S in enumerate_sskd(a):
                for i in range(len(a)):
                    p = pairing(S, i)
                    assert pairing_iterative(S, i) == p
                    assert pairing_iterative(S, i, from_right=True) == p


class TestOperators:
    def test_edges_of_021(self):
        assert lower0(A) == B
        assert lower(B, 1) == D
        assert lower(B, 2) == C
        assert lower(C, 1) == E
        assert lower(E, 1) == F

    def test_inverses(self):
        assert raise_(D, 1) == B
        assert raise_(C, 2) == B
        assert raise0(B) == A

    def test_zero_results(self):
        assert lower(A, 1) is None
        assert lower(A, 2) is None
        assert raise0(A) is None
        assert lower(F, 1) is None

    def test_first_column_clause(self):
        # the unpaired 3 of eta sits in column 1 of a multi-row shape
        assert lower0(u_tilde_tabloid((2, 2, 2))) is None

    def test_generic_dispatch(self):
        assert f(A, 0) == B and e(B, 0) == A
        assert f(B, 2) == C and e(C, 2) == B
        with pytest.raises(DomainError):
            f(A, 3)

    def test_label_range(self):
        with pytest.raises(DomainError):
            lower(A, 0)
        with pytest.raises(DomainError):
            raise_(A, 3)

    def test_input_validation(self):
        with pytest.raises(InvalidInput):
            lower(T([], [3, 1], [2]), 1)  # not semistandard
        with pytest.raises(InvalidInput):
            lower0(T([1], [2], alphabet=3))  # alphabet must equal n

    def test_changed_cells(self):
        assert changed_cells(B, D) == [(2, 1), (2, 2), (3, 1)]
        assert changed_cells(A, B) == [(2, 2)]


class TestStrings:
    def test_examples(self):
        assert [string_lengths(A, i)[0] for i in range(3)] == [1, 0, 0]
        assert string_lengths(E, 1) == (1, 1)
        assert string_lengths(C, 1) == (2, 0)

    def test_missing_letter(self):
        assert string_lengths(T([1], [], []), 2) == (0, 0)


class TestBuild:
    def test_crystal_021(self):
        G = build_crystal((0, 2, 1))
        assert G.nodes == [A, B, D, C, E, F]
        assert G.edge_list() == [(0, 1, 0), (1, 2, 1), (1, 3, 2), (3, 4, 1), (4, 5, 1)]
        assert G.root == 0 and G.shape == (0, 2, 1)
        assert G.grades == [maj(S) for S in G.nodes]
        assert G.weights[0] == (1, 1, 1)

    @pytest.mark.parametrize("n,k", [(1, 4), (2, 3), (3, 5), (4, 7)])
    def test_eta_is_a_single_node(self, n, k):
        G = build_crystal(eta(n, k))
        assert len(G) == 1 and not G.edges

    def test_crystal_311(self):
        G = build_crystal((3, 1, 1))
        assert [S.rows for S in G.nodes] == [((1, 1, 2), (2,), (3,)), ((1, 1, 3), (2,), (3,)),
                                             ((1, 1, 1), (2,), (3,))]
        assert G.edge_list() == [(0, 1, 2), (1, 2, 0)]

    def test_one_row_has_no_edges(self):
        assert build_crystal((5,)).edges == {}

    def test_restricted_drops_labels(self):
        G = build_crystal((0, 2, 1)).restricted([1, 2])
        assert [i for _, _, i in G.edge_list()] == [1, 2, 1, 1]
        assert len(G) == 6

    def test_closed_and_semistandard(self):
        for n in range(2, 4):
            for k in range(5):
                for a in compositions_of(k, n):
                    G = build_crystal(a)
                    assert set(G.nodes) == set(enumerate_sskd(a)), a
                    for (u, i), v in G.edges.items():
                        assert is_sskd(G.nodes[v])
                        assert e(G.nodes[v], i) == G.nodes[u]
                        low, high = letters(n, i)
                        wt = list(weight(G.nodes[u]))
                        wt[low - 1] -= 1
                        wt[high - 1] += 1
                        assert weight(G.nodes[v]) == tuple(wt)
