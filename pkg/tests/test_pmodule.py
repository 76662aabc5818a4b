import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from intervalbasis import PersistenceModule, PersistencePair, PrimeField, RationalField
from intervalbasis.errors import IndexOutOfRange, ShapeMismatch

from helpers import example_module, random_module

Q = RationalField()


def test_shape_mismatch_reports_map_index():
    with pytest.raises(ShapeMismatch) as info:
        PersistenceModule(Q, [1, 2], [[[1, 0]]])
    assert info.value.index == 1


def test_wrong_number_of_maps():
    with pytest.raises(ShapeMismatch):
        PersistenceModule(Q, [1, 1, 1], [[[1]]])


def test_compose_example():
    m = example_module(Q)
    assert m.compose(1, 3).tolist() == [[1]]
    assert m.compose(2, 3).tolist() == [[1, 1]]
    assert m.compose(2, 2).tolist() == [[1, 0], [0, 1]]


@pytest.mark.parametrize("i,j", [(0, 1), (2, 1), (1, 4)])
def test_compose_out_of_range(i, j):
    with pytest.raises(IndexOutOfRange):
        example_module(Q).compose(i, j)


def test_truncation_appends_zero_step():
    t = example_module(Q).truncate_essential()
    assert t.dims == (1, 2, 1, 0)
    assert t.map(3).shape == (0, 1)


def test_pair_ordering():
    assert PersistencePair(1, 3) < PersistencePair(1, 4) < PersistencePair(2, 3)
    with pytest.raises(ValueError):
        PersistencePair(3, 3)


def test_with_field_and_equality():
    m = example_module(Q)
    assert m.with_field(PrimeField(3)) == example_module(PrimeField(3))
    assert m != example_module(PrimeField(3))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_compose_associative(seed):
    rng = np.random.default_rng(seed)
    m = random_module(rng, PrimeField(5), max_dim=4, max_len=5)
    f = m.field
    for i in range(1, m.n + 1):
        for j in range(i, m.n + 1):
            for k in range(j, m.n + 1):
                assert f.array_equal(m.compose(i, k), f.matmul(m.compose(j, k), m.compose(i, j)))
