import pytest
from hypothesis import given
from hypothesis import strategies as st

from chimneys.chimney import Chimney, frame
from chimneys.gallery import (
    CROSS,
    FOLD,
    Gallery,
    OutcropSpec,
    alcoves,
    alcoves_and_panels,
    apply_e,
    apply_f,
    end_simplex,
    find_outcrops,
    is_positively_folded,
    is_valid,
    make_type,
    minimal_gallery,
    start_simplex,
)
from chimneys.roots import Hyperplane
from chimneys.shadow import pf_walks
from chimneys.weyl import weyl_group

from conftest import A2, ALPHA, ALPHA_BETA, BETA, RANK2, elements, words

A1 = weyl_group("A1")
H_ALPHA = Hyperplane(ALPHA, 0)

# A gallery whose panels p_5, p_13, p_18, p_26 lie in H_alpha,0 and whose
# alcoves c_5..c_12 and c_18..c_29 are on the far side of it.
OUTCROP_WORD = (0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0)
OUTCROP_FOLDS = (12, 25, 26)


def outcrop_gallery():
    spec = make_type(A2, (), OUTCROP_WORD, ())
    moves = tuple(FOLD if i + 1 in OUTCROP_FOLDS else CROSS for i in range(len(OUTCROP_WORD)))
    return Gallery(spec, A2.identity, moves)


def test_minimal_galleries():
    s0 = A2.from_word([0])
    g = minimal_gallery(A2, s0)
    assert g.spec.word == (0,) and g.moves == (CROSS,)
    seq, panels = alcoves_and_panels(A2, g)
    assert seq == [A2.identity, s0]
    assert panels == [Hyperplane(ALPHA_BETA, 1)]
    assert end_simplex(A2, g).rep == s0

    S = A2.spherical
    v = minimal_gallery(A2, A2.x_lambda((1, 1)), S, S)
    assert v.spec.word == (0,)
    assert end_simplex(A2, v) == A2.vertex_simplex((1, 1))
    assert minimal_gallery(A2, A2.identity).spec.word == ()


def test_folding_the_only_step():
    spec = make_type(A2, (), (0,), ())
    g = Gallery(spec, A2.identity, (FOLD,))
    assert alcoves(A2, g) == [A2.identity, A2.identity]
    assert end_simplex(A2, g).rep == A2.identity
    assert g.folds == (1,)


def test_vertex_gallery_ends_at_the_translation():
    S = A2.spherical
    g = minimal_gallery(A2, A2.x_lambda((2, 1)), S, S)
    for w in range(A2.finite_order):
        h = Gallery(g.spec, A2.finite(w), g.moves)
        assert is_valid(A2, h)
        last = alcoves(A2, h)[-1]
        assert end_simplex(A2, h) == A2.vertex_simplex(last.translation)
    assert start_simplex(A2, g) == A2.vertex_simplex((0, 0))


def test_malformed_galleries_rejected():
    spec = make_type(A2, (), (0, 1), ())
    with pytest.raises(ValueError):
        Gallery(spec, A2.identity, (CROSS,))
    with pytest.raises(ValueError):
        Gallery(spec, A2.identity, (CROSS, "jump"))
    with pytest.raises(ValueError):
        make_type(A2, (3,), (0,), ())
    with pytest.raises(ValueError):
        make_type(A2, (), (4,), ())


def test_outcrops_of_the_reference_pattern():
    g = outcrop_gallery()
    seq, panels = alcoves_and_panels(A2, g)
    assert [i + 1 for i, H in enumerate(panels) if H == H_ALPHA] == [5, 13, 18, 26]
    maximal, near, ingrowth = find_outcrops(A2, g, H_ALPHA)
    assert maximal.intervals == ((5, 13), (18, None))
    assert near is not None and near.intervals == ((5, 13), (18, 26))
    assert ingrowth.intervals == ((13, 18),)


def test_no_outcrops_away_from_h():
    g = minimal_gallery(A2, A2.from_word([0, 2]))
    maximal, near, ingrowth = find_outcrops(A2, g, Hyperplane(ALPHA, 5))
    assert not maximal and near is None and not ingrowth


def test_single_crossing():
    g = minimal_gallery(A2, A2.from_word([1, 2, 0]))
    maximal, _, _ = find_outcrops(A2, g, H_ALPHA)
    assert maximal.intervals == ((1, None),)


def test_rank_one_fold():
    H = Hyperplane(0, 0)
    g = minimal_gallery(A1, A1.from_word([1]))
    e = apply_e(A1, g, OutcropSpec(H, ((1, None),)))
    assert e.moves == (FOLD,)
    assert end_simplex(A1, e).rep == A1.identity
    assert apply_f(A1, e, OutcropSpec(H, ((1, None),))) == g


def test_outcrop_predicate_enforced():
    g = minimal_gallery(A2, A2.from_word([1, 2, 0]))
    with pytest.raises(ValueError):
        apply_e(A2, g, OutcropSpec(H_ALPHA, ((2, None),)))
    with pytest.raises(ValueError):
        apply_f(A2, g, OutcropSpec(H_ALPHA, ((1, None),)))


def test_folding_the_minimal_vertex_gallery_ending_at_two_alpha():
    S = A2.spherical
    lam_gallery = minimal_gallery(A2, A2.x_lambda((2, 2)), S, S)
    c = Chimney.make(A2, {1})
    H = Hyperplane(BETA, -1)
    for w in range(A2.finite_order):
        g = Gallery(lam_gallery.spec, A2.finite(w), lam_gallery.moves)
        if end_simplex(A2, g) == A2.vertex_simplex((2, 0)):
            break
    maximal, _, _ = find_outcrops(A2, g, H)
    folded = apply_e(A2, g, maximal)
    assert end_simplex(A2, folded) == A2.vertex_simplex((2, 1))
    assert is_positively_folded(A2, folded, c)


def random_gallery(W, data, max_len=8):
    word = data.draw(words(W, max_len))
    moves = data.draw(st.lists(st.sampled_from([CROSS, FOLD]), min_size=len(word), max_size=len(word)))
    return Gallery(make_type(W, (), word, ()), W.identity, tuple(moves))


@given(st.sampled_from(sorted(RANK2)), st.data())
def test_e_and_f_are_inverse(name, data):
    W = RANK2[name]
    g = random_gallery(W, data)
    r = data.draw(st.integers(0, len(W.rs.positive_roots) - 1))
    H = Hyperplane(r, data.draw(st.integers(-2, 2)))
    maximal, near, ingrowth = find_outcrops(W, g, H)
    for L in (maximal, near, ingrowth):
        if not L:
            continue
        op, inv = (apply_f, apply_e) if L is ingrowth else (apply_e, apply_f)
        h = op(W, g, L)
        assert h.spec == g.spec and h.first_alcove == g.first_alcove
        assert inv(W, h, L) == g


@given(st.sampled_from(sorted(RANK2)), st.data())
def test_end_alcove_coordinates_bounded_by_length(name, data):
    W = RANK2[name]
    g = random_gallery(W, data, 10)
    assert all(abs(k) <= g.length for k in W.alcove_coords(alcoves(W, g)[-1]))


@given(st.sampled_from(sorted(RANK2)), st.data())
def test_fold_free_galleries_are_positively_folded(name, data):
    W = RANK2[name]
    word = data.draw(words(W))
    c = Chimney(frozenset(data.draw(st.sets(st.sampled_from([1, 2])))), data.draw(elements(W, 3)))
    g = Gallery(make_type(W, (), word, ()), W.identity, (CROSS,) * len(word))
    assert is_positively_folded(W, g, c)


@given(st.sampled_from(sorted(RANK2)), st.data())
def test_folding_lemma(name, data):
    """e along the maximal or near-maximal wall(y, s)-outcrop moves positivity from y to ys; f moves it back."""
    W = RANK2[name]
    y = data.draw(elements(W, 4))
    s = data.draw(st.sampled_from(W.letters))
    if W.is_right_descent(y, s):
        return
    ys = W.right_mult(y, s)
    H = W.wall(y, s)
    word = tuple(data.draw(words(W, 6)))
    spec = make_type(W, (), word, ())
    before, after = Chimney(W.spherical, y), Chimney(W.spherical, ys)
    for moves, _, _, _ in pf_walks(W, frame(W, before), W.identity, word):
        g = Gallery(spec, W.identity, moves)
        maximal, near, ingrowth = find_outcrops(W, g, H)
        assert is_positively_folded(W, apply_e(W, g, maximal), after)
        if near is not None:
            assert is_positively_folded(W, apply_e(W, g, near), after)
    for moves, _, _, _ in pf_walks(W, frame(W, after), W.identity, word):
        g = Gallery(spec, W.identity, moves)
        _, _, ingrowth = find_outcrops(W, g, H)
        assert is_positively_folded(W, apply_f(W, g, ingrowth), before)
