"""Property-based checks for the pure combinatorial kernel."""

from hypothesis import given, settings
from hypothesis import strategies as st

from cubeforge.indices import lower, lower2, mixed, raise2, raise_
from cubeforge.perms import Perm, TWord, boundary_word, eval_word, length, min_rep

index = st.integers(min_value=1, max_value=50)


@given(j=index, i=index)
def test_raise_lower_roundtrip(j, i):
    assert lower(raise_(j, i), i) == j


@given(k=index, i=index, j=index)
def test_raise2_symmetry(k, i, j):
    if i != j:
        assert raise2(k, i, j) == raise2(k, j, i)


@given(k=index, i=index, j=index)
def test_mixed_factorisation(k, i, j):
    if i != j and k != lower(i, j):
        assert mixed(k, i, j) == raise_(lower(k, lower(i, j)), lower(j, i))


def words(n):
    return st.lists(st.integers(min_value=1, max_value=n - 1), max_size=10).map(
        lambda ls: TWord(n, tuple(ls))
    )


@settings(max_examples=150)
@given(w=words(5))
def test_min_rep_of_evaluation_is_reduced(w):
    p = eval_word(w)
    r = min_rep(p)
    assert eval_word(r) == p
    assert len(r) == length(p) <= len(w)


@settings(max_examples=150)
@given(w=words(5), i=st.integers(min_value=1, max_value=5))
def test_boundary_compatible_with_evaluation(w, i):
    from cubeforge.perms import boundary_perm

    assert eval_word(boundary_word(w, i)) == boundary_perm(eval_word(w), i)


@settings(max_examples=100)
@given(w=words(4), u=words(4))
def test_length_subadditive(w, u):
    joined = TWord(4, w.letters + u.letters)
    assert length(eval_word(joined)) <= length(eval_word(w)) + length(eval_word(u))
