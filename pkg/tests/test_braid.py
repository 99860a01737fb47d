import random
from math import gcd

import pytest

from twistknot.braid import (BraidWord, cable_expand, component_count,
                             connected_sum, exponent_sum, format_word,
                             full_twists, parallelize, parse_word, permutation,
                             torus_braid, twisted_torus_braid)


def compose(f, g):
    """Permutation of u*v from the permutations of u and v."""
    return tuple(g[f[i]] for i in range(len(f)))


def test_braid_word_validation():
    BraidWord(1, ())
    BraidWord(3, (1, -2, 1))
    with pytest.raises(ValueError):
        BraidWord(0, ())
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    with pytest.raises(ValueError):
        BraidWord(2, (0,))


def test_torus_braid_small_cases():
    w = torus_braid(2, 3)
    assert w.strands == 2 and w.letters == (1, 1, 1)
    assert torus_braid(5, 0).letters == ()
    w = torus_braid(3, -4)
    assert len(w.letters) == 8 and all(g < 0 for g in w.letters)
    assert component_count(w) == 1
    assert component_count(torus_braid(4, 2)) == 2


def test_torus_braid_permutation_and_components():
    for p in range(2, 13):
        for q in range(-12, 13):
            w = torus_braid(p, q)
            assert len(w.letters) == abs(q) * (p - 1)
            assert permutation(w) == tuple((i + q) % p for i in range(p))
            if q != 0:
                assert component_count(w) == gcd(p, abs(q))


def test_full_twists():
    assert full_twists(2, 1).letters == (1, 1)
    w = full_twists(3, -1)
    assert len(w.letters) == 6 and all(g < 0 for g in w.letters)
    assert full_twists(4, 0).letters == ()
    for r in range(2, 7):
        for s in (-2, -1, 1, 2):
            assert permutation(full_twists(r, s)) == tuple(range(r))


def test_twisted_torus_braid_sizes():
    w = twisted_torus_braid(20, 11, 15, -1)
    assert len(w.letters) == 209 + 210 and component_count(w) == 1
    w = twisted_torus_braid(11, 6, 8, -1)
    assert len(w.letters) == 60 + 56 and component_count(w) == 1
    assert twisted_torus_braid(7, 4, 3, 0) == torus_braid(7, 4)
    with pytest.raises(ValueError):
        twisted_torus_braid(5, 3, 5, 1)
    with pytest.raises(ValueError):
        twisted_torus_braid(5, 0, 3, 1)


def test_permutation_is_homomorphism():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(2, 7)
        w1 = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1)
                                for _ in range(rng.randint(0, 12))))
        w2 = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1)
                                for _ in range(rng.randint(0, 12))))
        assert permutation(w1 * w2) == compose(permutation(w1), permutation(w2))


def test_exponent_sum():
    assert exponent_sum(torus_braid(4, 3)) == 9
    assert exponent_sum(torus_braid(4, -3)) == -9
    assert exponent_sum(twisted_torus_braid(9, 5, 7, -1)) == 40 - 42


def test_cable_expand_identity_on_single_strands():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 6)
        w = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1)
                               for _ in range(rng.randint(0, 15))))
        out, bottom = cable_expand(w, (1,) * n)
        assert out == w and bottom == (1,) * n


def test_cable_expand_block_example():
    out, bottom = cable_expand(BraidWord(2, (1,)), (2, 1))
    assert out.strands == 3 and out.letters == (2, 1)
    assert bottom == (1, 2)


def test_cable_expand_letter_count_and_inverse_blocks():
    w = BraidWord(3, (1, 2, -2, -1))
    out, bottom = cable_expand(w, (2, 3, 1))
    # u*v per letter, widths evolving as they swap
    assert len(out.letters) == 2 * 3 + 2 * 1 + 1 * 2 + 3 * 2
    assert bottom == (2, 3, 1)
    # the word is trivial, so each block must cancel its inverse
    assert permutation(out) == tuple(range(6))


def test_cable_expand_blockwise_permutation():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randint(2, 5)
        w = BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1)
                               for _ in range(rng.randint(1, 12))))
        m = tuple(rng.randint(1, 3) for _ in range(n))
        out, bottom = cable_expand(w, m)
        f = permutation(w)
        assert bottom == tuple(m[fi] for fi in
                               sorted(range(n), key=lambda i: f[i]))
        top_off = [0]
        for width in m:
            top_off.append(top_off[-1] + width)
        bot_off = [0]
        for width in bottom:
            bot_off.append(bot_off[-1] + width)
        expected = [0] * out.strands
        for i in range(n):
            for j in range(m[i]):
                expected[top_off[i] + j] = bot_off[f[i]] + j
        assert permutation(out) == tuple(expected)


def test_cable_expand_validates_lengths():
    with pytest.raises(ValueError):
        cable_expand(BraidWord(3, (1,)), (1, 2))
    with pytest.raises(ValueError):
        cable_expand(BraidWord(2, (1,)), (1, 0))


def test_parallelize_identity_and_components():
    base = twisted_torus_braid(9, 5, 7, -1)
    assert parallelize(base, 1, 1, twist_region=(7, -1)) == base
    # width one copies leave any knot braid alone
    odd = BraidWord(4, (1, 3, 2))
    assert parallelize(odd, 1, 1) == odd
    for x1 in range(1, 5):
        for x2 in range(1, 5):
            w = parallelize(torus_braid(9, 5), x1, x2)
            assert component_count(w) == gcd(x1, x2)
            w = parallelize(base, x1, x2, twist_region=(7, -1))
            assert component_count(w) == gcd(x1, x2)


def test_parallelize_strand_counts_follow_quadruple():
    # widths: x1 on the a-pass arc, x2 on the b-pass arc
    from twistknot.modarith import coeff_quadruple
    for p0, q0 in [(3, 2), (5, 3), (9, 5)]:
        quad = coeff_quadruple(p0, q0)
        for x1, x2 in [(1, 2), (2, 1), (2, 3)]:
            w = parallelize(torus_braid(p0, q0), x1, x2)
            assert w.strands == quad.a * x1 + quad.b * x2


def test_parallelize_rejects_bad_bases():
    with pytest.raises(ValueError):
        parallelize(torus_braid(4, 2), 1, 2)      # link closure
    with pytest.raises(ValueError):
        parallelize(torus_braid(2, 3), 1, 2)      # too few strands
    with pytest.raises(ValueError):
        parallelize(BraidWord(4, (1, 3, 2)), 1, 2)   # not a cyclic shift


def test_connected_sum():
    trefoil = torus_braid(2, 3)
    granny = connected_sum(trefoil, trefoil)
    assert granny.strands == 3 and component_count(granny) == 1
    assert granny.letters == (1, 1, 1, 2, 2, 2)
    assert connected_sum(trefoil, BraidWord(1, ())) == trefoil
    with pytest.raises(ValueError):
        connected_sum(trefoil, torus_braid(4, 2))


def test_word_text_roundtrip():
    w = twisted_torus_braid(5, 3, 4, -1)
    assert parse_word(format_word(w)) == w
    assert parse_word("strands: 1\n\n") == BraidWord(1, ())
    assert parse_word("strands: 3\n1 -2 1") == BraidWord(3, (1, -2, 1))
    with pytest.raises(ValueError):
        parse_word("3\n1 2")
    with pytest.raises(ValueError):
        parse_word("strands: 3\n1 x")
