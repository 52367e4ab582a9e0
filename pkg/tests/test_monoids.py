import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtwist import (
    ExponentVector,
    MonoidMorphism,
    ProductSplit,
    segre_morphism,
    vectors_of_degree,
    vectors_up_to_degree,
)

from helpers import rand_vector

vectors4 = st.lists(st.integers(0, 5), min_size=4, max_size=4).map(ExponentVector)


def test_negative_entries_rejected():
    with pytest.raises(ValueError):
        ExponentVector((1, -1))


@given(vectors4, vectors4, vectors4)
def test_addition_monoid_laws(u, v, w):
    zero = ExponentVector.zero(4)
    assert (u + v) + w == u + (v + w)
    assert u + v == v + u
    assert u + zero == u


def test_rank_mismatch_in_addition():
    with pytest.raises(ValueError):
        ExponentVector((1,)) + ExponentVector((1, 2))


# -- morphisms ---------------------------------------------------------------

def test_morphism_sends_zero_to_zero():
    f = segre_morphism(2, 3)
    assert f(ExponentVector.zero(f.source_rank)) == ExponentVector.zero(f.target_rank)


def test_segre_generator_images_n1_m1():
    f = segre_morphism(1, 1)
    # row-major generator order: e00, e01, e10, e11
    assert f(ExponentVector((1, 0, 0, 0))) == ExponentVector((1, 0, 1, 0))
    assert f(ExponentVector((0, 1, 0, 0))) == ExponentVector((1, 0, 0, 1))
    assert f(ExponentVector((0, 0, 0, 1))) == ExponentVector((0, 1, 0, 1))


def test_segre_morphism_ranks():
    f = segre_morphism(1, 2)
    assert f.source_rank == 6
    assert f.target_rank == 5


def test_segre_morphism_rejects_bad_ranks():
    for n, m in [(0, 1), (1, 0), (-2, 3)]:
        with pytest.raises(ValueError):
            segre_morphism(n, m)


def test_morphism_additivity_random():
    rng = random.Random(21)
    f = segre_morphism(2, 2)
    for _ in range(100):
        u = rand_vector(rng, f.source_rank)
        v = rand_vector(rng, f.source_rank)
        assert f(u + v) == f(u) + f(v)


def test_segre_image_is_row_and_column_sums():
    # independent oracle: left block i-th entry = sum_j u_ij, right block j-th = sum_i u_ij
    rng = random.Random(22)
    n, m = 2, 3
    f = segre_morphism(n, m)
    for _ in range(100):
        u = rand_vector(rng, f.source_rank)
        w = f(u)
        grid = [[u[i * (m + 1) + j] for j in range(m + 1)] for i in range(n + 1)]
        assert w.entries[:n + 1] == tuple(sum(row) for row in grid)
        assert w.entries[n + 1:] == tuple(sum(col) for col in zip(*grid))


def test_morphism_rank_mismatch():
    f = segre_morphism(1, 1)
    with pytest.raises(ValueError):
        f(ExponentVector((1, 2)))


def test_identity_morphism():
    f = MonoidMorphism.identity(3)
    u = ExponentVector((4, 0, 2))
    assert f(u) == u


# -- product splits ----------------------------------------------------------

def test_inject_and_split_examples():
    split = ProductSplit(2, 3)
    assert split.inject_left(ExponentVector((1, 4))) == ExponentVector((1, 4, 0, 0, 0))
    assert split.split(ExponentVector((1, 4, 0, 5, 6))) == (
        ExponentVector((1, 4)), ExponentVector((0, 5, 6)))


def test_split_roundtrip_random():
    rng = random.Random(23)
    split = ProductSplit(2, 3)
    for _ in range(100):
        w = rand_vector(rng, 5)
        s, t = split.split(w)
        assert split.inject_left(s) + split.inject_right(t) == w


def test_split_validation():
    with pytest.raises(ValueError):
        ProductSplit(0, 3)
    split = ProductSplit(2, 2)
    with pytest.raises(ValueError):
        split.inject_left(ExponentVector((1, 2, 3)))
    with pytest.raises(ValueError):
        split.split(ExponentVector((1, 2, 3)))


# -- degree enumeration ------------------------------------------------------

def test_vectors_of_degree_count():
    # stars and bars: C(d + r - 1, r - 1)
    assert len(list(vectors_of_degree(3, 4))) == 15
    assert len(list(vectors_up_to_degree(2, 3))) == 10


def test_vectors_of_degree_all_distinct_and_correct():
    seen = set(vectors_of_degree(4, 3))
    assert len(seen) == 20
    assert all(u.degree() == 3 for u in seen)
