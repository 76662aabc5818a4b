import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from intervalbasis import ChainTower, FilteredComplex, PrimeField, RationalField, boundary_matrix, inclusion_chain_map
from intervalbasis.errors import NotAChainComplex, NotASubcomplex, NotClosedUnderFaces, ParseError
from intervalbasis.simplicial import closure, simplex

from helpers import random_filtration

Q = RationalField()
HOLLOW = [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]


def test_hollow_triangle_boundary():
    d1 = boundary_matrix(HOLLOW, 1, Q)
    assert d1.T.tolist() == [[-1, 1, 0], [-1, 0, 1], [0, -1, 1]]


def test_degree_zero_boundary_is_empty():
    assert boundary_matrix(HOLLOW, 0, Q).shape == (0, 3)
    assert boundary_matrix([(0,)], 0, Q).shape == (0, 1)
    assert boundary_matrix([(0,)], 1, Q).shape == (1, 0)


def test_triangle_boundary_signs():
    d2 = boundary_matrix(closure([(0, 1, 2)]), 2, Q)
    # d(012) = 12 - 02 + 01 in the basis 01, 02, 12
    assert d2[:, 0].tolist() == [1, -1, 1]


def test_missing_face():
    with pytest.raises(NotClosedUnderFaces) as info:
        boundary_matrix([(0,), (1,), (0, 1, 2)], 1, Q)
    assert info.value.kind == "NotClosedUnderFaces"


def test_simplex_validation():
    assert simplex([2, 0, 1]) == (0, 1, 2)
    with pytest.raises(ParseError):
        simplex([1, 1])


def test_inclusion_map():
    f = inclusion_chain_map([(0,), (2,)], [(0,), (1,), (2,)], 0, Q)
    assert f.tolist() == [[1, 0], [0, 0], [0, 1]]
    with pytest.raises(NotASubcomplex):
        inclusion_chain_map([(5,)], [(0,)], 0, Q)


def test_filtration_must_be_nested():
    with pytest.raises(NotASubcomplex):
        FilteredComplex([[[0], [1]], [[0]]])


def test_increments_and_full_steps_agree():
    a = FilteredComplex.from_increments([[[0], [1]], [[0, 1]]])
    b = FilteredComplex.from_increments([[[0], [1]], [[0], [1], [0, 1]]])
    assert a.steps == b.steps


def test_simplexwise_compilation():
    filt = FilteredComplex.from_simplexwise([([0], 0.0), ([1], 0.0), ([0, 1], 0.5), ([2], 0.5)])
    assert len(filt) == 2
    assert filt.steps[1] == frozenset({(0,), (1,), (2,), (0, 1)})


def test_tower_rejects_non_complex():
    bad = [[Q.zeros((0, 2)), Q.asarray([[1], [1]]), Q.asarray([[1]])]]
    with pytest.raises(NotAChainComplex):
        ChainTower(Q, bad, [])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([PrimeField(2), Q]))
def test_tower_of_random_filtration_is_valid(seed, field):
    filt = FilteredComplex(random_filtration(np.random.default_rng(seed)))
    tower = filt.tower(field)
    tower.validate()  # d d = 0 and chain maps commute with d
    for i in range(len(tower)):
        for k in range(tower.degrees):
            assert not field.nonzero(field.matmul(tower.boundary(i, k), tower.boundary(i, k + 1))).any()
