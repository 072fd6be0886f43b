import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chimneys.roots import Hyperplane
from chimneys.weyl import AffineElement, HalfApartment, weyl_group

from conftest import A2, ALPHA, ALPHA_BETA, BETA, RANK2, elements, words


def separating_count(W, x):
    """Hyperplanes strictly between the barycenters of a and x.a, counted directly."""
    b0 = W.barycenter
    bx = W.act(x, b0)
    total = 0
    for r in range(len(W.rs.positive_roots)):
        lo, hi = sorted((W.pair(r, b0), W.pair(r, bx)))
        total += math.floor(hi) - math.floor(lo)
    return total


def test_words_to_elements():
    assert A2.from_word([]) == A2.identity
    s0 = A2.from_word([0])
    assert s0.translation == (1, 1)
    assert A2.act(s0, (0, 0)) == (1, 1)
    assert A2.from_word([1, 1]) == A2.identity


def test_composition_examples():
    r = A2.reflection(Hyperplane(ALPHA, 1))  # t^{alpha} s_alpha
    assert r.translation == (1, 0)
    assert A2.compose(r, r) == A2.identity
    assert A2.invert(A2.translation((3, -1))) == A2.translation((-3, 1))
    s_alpha = A2.from_word([1])
    assert A2.compose(s_alpha, A2.translation((0, 1))).translation == (1, 1)


def test_lengths_and_words():
    assert A2.length(A2.identity) == 0
    assert A2.length(A2.translation((1, 1))) == 4
    r = A2.reflection(Hyperplane(ALPHA, 1))
    assert A2.length(r) == 3
    assert A2.reduced_word(r) == (2, 0, 2)
    assert A2.from_word((2, 0, 2)) == r


def test_hyperplane_action():
    H = Hyperplane(ALPHA, 0)
    assert A2.act_on_hyperplane(A2.translation((0, 1)), H) == Hyperplane(ALPHA, -1)
    assert A2.act_on_hyperplane(A2.identity, H) == H
    s_alpha = A2.from_word([1])
    for k in range(-3, 4):
        assert A2.act_on_hyperplane(s_alpha, Hyperplane(ALPHA, k)) == Hyperplane(ALPHA, -k)


def test_sides_of_the_base_alcove():
    top = Hyperplane(ALPHA_BETA, 1)
    assert A2.alcove_side(A2.identity, Hyperplane(ALPHA, 0)) == 1
    assert A2.alcove_side(A2.identity, top) == -1
    assert A2.alcove_side(A2.from_word([0]), top) == 1
    assert A2.halfapartment_containing(A2.identity, top) == HalfApartment(top, -1)


def test_walls():
    assert A2.wall(A2.identity, 0) == Hyperplane(ALPHA_BETA, 1)
    assert A2.wall(A2.identity, 1) == Hyperplane(ALPHA, 0)
    assert A2.wall(A2.from_word([0]), 1) == Hyperplane(BETA, 1)


def test_coset_representatives():
    S = A2.spherical
    lam = (2, 1)
    x = A2.min_coset_rep(A2.translation(lam), left=S, right=S)
    assert x == A2.x_lambda(lam)
    for w in A2.elements_up_to_length(3):
        if w.translation == (0, 0):
            assert A2.min_coset_rep(w, left=S) == A2.identity
    assert A2.x_lambda((1, 1)) == A2.from_word([0])


def test_coset_representative_is_minimal_by_brute_force():
    S = A2.spherical
    x = A2.x_lambda((1, 1))
    coset = {A2.mul(A2.finite(u), A2.translation((1, 1)), A2.finite(v))
             for u in range(A2.finite_order) for v in range(A2.finite_order)}
    assert min(A2.length(z) for z in coset) == A2.length(x) == 1


def test_orbits_and_polytopes():
    assert A2.orbit((2, 2)) == {(2, 0), (-2, 0), (0, 2), (0, -2), (2, 2), (-2, -2)}
    assert A2.polytope_points((0, 0)) == {(0, 0)}
    assert len(A2.star_alcoves((1, 2))) == 6
    # hexagon of side 2: 1 + 6 + 12 lattice points
    assert len(A2.polytope_points((2, 2))) == 19


@pytest.mark.parametrize("name", sorted(RANK2))
def test_length_matches_separating_hyperplanes(name):
    W = RANK2[name]
    for x in W.elements_up_to_length(5):
        assert W.length(x) == separating_count(W, x)
        assert len(W.reduced_word(x)) == W.length(x)


@pytest.mark.parametrize("name", sorted(RANK2))
def test_group_sizes_per_length(name):
    # Poincare series of an affine rank-2 group: the number of length-L elements grows linearly
    W = RANK2[name]
    counts = [0] * 7
    for x in W.elements_up_to_length(6):
        counts[W.length(x)] += 1
    assert counts[0] == 1 and counts[1] == 3
    assert all(a <= b for a, b in zip(counts[1:], counts[2:]))


@given(st.sampled_from(sorted(RANK2)), st.data())
def test_reduced_word_round_trip(name, data):
    W = RANK2[name]
    x = data.draw(elements(W))
    word = W.reduced_word(x)
    assert W.from_word(word) == x
    assert len(word) == separating_count(W, x)


@given(st.sampled_from(sorted(RANK2)), st.data())
def test_group_laws(name, data):
    W = RANK2[name]
    a, b, c = (data.draw(elements(W, 6)) for _ in range(3))
    assert W.compose(W.compose(a, b), c) == W.compose(a, W.compose(b, c))
    assert W.compose(a, W.invert(a)) == W.identity
    v = (3, -2)
    assert W.act(W.compose(a, b), v) == W.act(a, W.act(b, v))


@given(st.sampled_from(sorted(RANK2)), st.data())
def test_descents_match_length(name, data):
    W = RANK2[name]
    x = data.draw(elements(W))
    for s in W.letters:
        assert W.is_right_descent(x, s) == (W.length(W.right_mult(x, s)) < W.length(x))
        left = W.compose(W.generators[s], x)
        assert W.is_left_descent(s, x) == (W.length(left) < W.length(x))


@given(st.sampled_from(sorted(RANK2)), st.data())
def test_all_reduced_words(name, data):
    W = RANK2[name]
    x = data.draw(elements(W, 6))
    ws = W.reduced_words(x)
    assert W.reduced_word(x) in ws
    assert all(len(w) == W.length(x) and W.from_word(w) == x for w in ws)


def test_reduced_words_of_a_braid():
    # s1 s2 s1 = s2 s1 s2 in A2
    assert A2.reduced_words(A2.from_word([1, 2, 1])) == [(1, 2, 1), (2, 1, 2)]


def test_invalid_letters():
    with pytest.raises(ValueError):
        A2.from_word([3])
    with pytest.raises(ValueError):
        weyl_group("Z9")


def test_elements_are_hashable_and_ordered():
    xs = A2.elements_up_to_length(2)
    assert len(set(xs)) == len(xs) == 1 + 3 + 6
    assert isinstance(sorted(xs)[0], AffineElement)
