import pytest

from webfold.errors import NotSymmetrical, WrongShape
from webfold.matchings import (
    Matching2,
    fold2,
    is_symmetrical2,
    reflect2,
    rotate2,
    tableau_of_web2,
    web2_of_tableau,
)
from webfold.oracle import enumerate_words
from webfold.tableaux import (
    Tableau,
    evacuate,
    fold,
    from_word,
    is_rotationally_symmetric,
    promote,
)

SELF_EVAC = Tableau.from_rows([(1, 3, 4, 7), (2, 5, 6, 8)])


def test_web2_example():
    assert web2_of_tableau(SELF_EVAC).arcs == ((1, 2), (3, 6), (4, 5), (7, 8))


def test_web2_single_pair():
    t = Tableau.from_rows([(1,), (2,)])
    assert web2_of_tableau(t).arcs == ((1, 2),)


def test_web2_wrong_shape():
    with pytest.raises(WrongShape):
        web2_of_tableau(from_word("123123"))
    with pytest.raises(WrongShape):
        web2_of_tableau(from_word("11212"))


def test_round_trip_exhaustive():
    for word in enumerate_words((4, 4)):
        t = from_word(word)
        assert tableau_of_web2(web2_of_tableau(t)) == t


def test_matching_validation():
    with pytest.raises(ValueError):
        Matching2(2, ((1, 3), (2, 4)))
    with pytest.raises(ValueError):
        Matching2(2, ((1, 2), (3, 3)))


def test_reflect_fixes_symmetric_example():
    w = web2_of_tableau(SELF_EVAC)
    assert reflect2(w) == w
    assert is_symmetrical2(w)


def test_rotate_order():
    for word in enumerate_words((4, 4)):
        w = web2_of_tableau(from_word(word))
        out = w
        for _ in range(8):
            out = rotate2(out)
        assert out == w


def test_rotate_single_arc():
    w = Matching2(1, ((1, 2),))
    assert rotate2(w) == w


def test_rotation_matches_promotion():
    for word in enumerate_words((5, 5)):
        t = from_word(word)
        assert rotate2(web2_of_tableau(t)) == web2_of_tableau(promote(t))


def test_reflection_matches_evacuation():
    for word in enumerate_words((5, 5)):
        t = from_word(word)
        assert reflect2(web2_of_tableau(t)) == web2_of_tableau(evacuate(t))


def test_fold2_example():
    w = web2_of_tableau(SELF_EVAC)
    assert fold2(w) == Matching2(4, ((1, 2), (3, 4), (6, 7), (5, 8)))


def test_fold2_single_arc():
    w = Matching2(1, ((1, 2),))
    assert fold2(w) == w


def test_fold2_needs_symmetry():
    w = Matching2(3, ((1, 2), (3, 6), (4, 5)))
    assert not is_symmetrical2(w)
    with pytest.raises(NotSymmetrical):
        fold2(w)


def test_folding_commutes_with_web():
    for n in range(1, 7):
        for word in enumerate_words((n, n)):
            t = from_word(word)
            if not is_rotationally_symmetric(t):
                continue
            assert fold2(web2_of_tableau(t)) == web2_of_tableau(fold(t))


def test_json_round_trip():
    w = web2_of_tableau(SELF_EVAC)
    assert Matching2.from_dict(w.to_dict()) == w
