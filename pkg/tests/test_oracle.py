import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from intervalbasis import PersistenceModule, PersistencePair, PrimeField, RationalField, barcode_oracle, rank_table

from helpers import example_module, random_module

Q = RationalField()


def test_example_barcode():
    assert barcode_oracle(example_module(Q)) == [PersistencePair(1, 4), PersistencePair(2, 3)]


def test_zero_maps_give_unit_bars():
    m = PersistenceModule(Q, [2, 1, 3], [np.zeros((1, 2)), np.zeros((3, 1))])
    assert barcode_oracle(m) == [PersistencePair(1, 2)] * 2 + [PersistencePair(2, 3)] + [PersistencePair(3, 4)] * 3


def test_identity_maps_give_essential_bars():
    m = PersistenceModule(Q, [2, 2, 2], [np.eye(2, dtype=int)] * 2)
    assert barcode_oracle(m) == [PersistencePair(1, 4)] * 2


def test_rank_table_diagonal():
    r = rank_table(example_module(Q))
    assert r[1, 1] == 1 and r[2, 2] == 2 and r[1, 3] == 1 and r[2, 4] == 0


@pytest.mark.parametrize("field", [PrimeField(2), PrimeField(5), Q])
@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_bar_length_conservation(field, seed):
    m = random_module(np.random.default_rng(seed), field)
    pairs = barcode_oracle(m)
    assert sum(p.death - p.birth for p in pairs) == sum(m.dims)
    for i in range(1, m.n + 1):
        assert sum(1 for p in pairs if p.birth <= i < p.death) == m.dims[i - 1]
