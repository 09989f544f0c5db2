import pytest

from keytabloid.compositions import apply_s, compositions_of, eta, orbit_word_path
from keytabloid.embeddings import (check_step, embed, embed_affine, embed_finite,
                                   filtration_check, is_up_step)
from keytabloid.errors import DomainError
from keytabloid.tabloid import Tabloid, enumerate_sskd, is_sskd


def T(*rows, alphabet=None):
    return Tabloid.from_rows(rows, alphabet)


class TestFinite:
    def test_swap_example(self):
        src = T([], [], [2, 1, 1, 6, 3, 3, 2], [4, 6, 5, 8, 9], alphabet=9)
        out = embed_finite(src, 3)
        assert out.shape == (0, 0, 5, 7)
        assert out.rows == ((), (), (2, 6, 5, 6, 9), (4, 1, 1, 8, 3, 3, 2))

    def test_small_example(self):
        out = embed_finite(T([1, 1, 2], [2], [3]), 1)
        assert out.rows == ((1,), (2, 1, 2), (3,))

    def test_single_cell_moves_up(self):
        out = embed_finite(T([1], []), 1)
        assert out.rows == ((), (1,))

    def test_requires_descent(self):
        with pytest.raises(DomainError):
            embed_finite(T([1], [2]), 1)
        with pytest.raises(DomainError):
            embed_finite(T([1], [2]), 2)


class TestAffine:
    def test_swap_example(self):
        src = T([1, 4, 5, 5, 7, 2], [], [], [3, 3, 8, 6, 3, 3], alphabet=8)
        out = embed_affine(src)
        assert out.shape == (7, 0, 0, 5)
        assert out.rows == ((1, 4, 3, 8, 7, 3, 3), (), (), (3, 5, 5, 6, 2))

    def test_small_example(self):
        out = embed_affine(T([1], [2, 1, 2], [3]))
        assert out.rows == ((1, 3), (2, 1, 2), ())

    def test_first_part_one(self):
        out = embed_affine(T([1], [2]))
        assert out.rows == ((1, 2), ())
        assert is_sskd(out)

    def test_requirements(self):
        with pytest.raises(DomainError):
            embed_affine(T([1, 1], [2]))  # a_n < a_1
        with pytest.raises(DomainError):
            embed_affine(T([], [1]))      # a_1 = 0
        with pytest.raises(DomainError):
            embed_affine(T([1]))          # n = 1


def test_up_steps():
    assert is_up_step((2, 2, 1), 2)
    assert not is_up_step((2, 2, 1), 1)
    assert is_up_step((2, 1, 2), 0)
    assert not is_up_step((0, 2, 1), 0)
    assert not is_up_step((3,), 0)


def test_embed_dispatch():
    S = T([1], [2, 1, 2], [3])
    assert embed(S, 0) == embed_affine(S)


class TestFiltration:
    def test_chain_to_230(self):
        rep = filtration_check((2, 3, 0))
        assert rep.ok
        assert rep.word == (2, 0, 1, 0)
        assert [s.sizes for s in rep.steps] == [(1, 2), (2, 3), (3, 6), (6, 9)]

    def test_chain_to_021(self):
        rep = filtration_check((0, 2, 1))
        assert rep.ok
        assert rep.word == (0, 2, 1)
        assert rep.steps[0].sizes[0] == 1
        assert rep.steps[-1].sizes[1] == 6

    def test_json_report(self):
        data = filtration_check((3, 1, 1)).to_json()
        assert data == {"shape": [3, 1, 1], "word": [2, 0],
                        "steps": [{"i": 2, "sizes": [1, 2], "violations": []},
                                  {"i": 0, "sizes": [2, 3], "violations": []}]}

    def test_eta_has_no_steps(self):
        rep = filtration_check(eta(3, 4))
        assert rep.ok and rep.steps == []

    def test_non_step_is_reported(self):
        rep = check_step((1, 2), 1)
        assert rep.violations[0]["check"] == "up-step"

    def test_every_step_of_small_shapes(self):
        steps = set()
        for n in range(2, 4):
            for k in range(6):
                for a in compositions_of(k, n):
                    steps.update(orbit_word_path(a))
        for b, i in steps:
            rep = check_step(b, i)
            assert not rep.violations, (b, i, rep.violations)

    def test_images_are_distinct_and_semistandard(self):
        for b, i in [((2, 1, 2), 0), ((3, 1, 1), 1), ((1, 2, 1, 2), 2)]:
            imgs = [embed(S, i) for S in enumerate_sskd(b)]
            assert len(set(imgs)) == len(imgs)
            assert all(is_sskd(S) and S.shape == apply_s(b, i) for S in imgs)
