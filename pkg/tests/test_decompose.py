import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from intervalbasis import (PersistenceModule, PersistencePair, PrimeField, RationalField, RealField,
                           barcode_oracle, pmd, ssd, ssd_real, verify_interval_basis)
from intervalbasis import linalg

from helpers import example_module, pair_multiset, random_module

Q, R = RationalField(), RealField()
EXACT = [PrimeField(2), PrimeField(5), Q]


def test_ssd_example_steps():
    t = example_module(Q).truncate_essential()
    b1 = ssd(t, 1)
    assert b1.J == [3] and list(b1.vectors[:, 0]) == [1]
    b2 = ssd(t, 2)
    assert b2.J == [1]
    assert list(b2.vectors[:, 0]) in ([1, -1], [-1, 1])
    assert len(ssd(t, 3)) == 0


def test_ssd_real_example_steps():
    t = example_module(R).truncate_essential()
    b2 = ssd_real(t, 2)
    assert b2.J == [1]
    v = b2.vectors[:, 0]
    assert np.allclose(abs(v), [2**-0.5, 2**-0.5]) and np.isclose(v[0], -v[1])


@pytest.mark.parametrize("field", EXACT + [R])
def test_example_decomposition(field):
    m = example_module(field)
    basis, pairs = pmd(m)
    assert pairs == [PersistencePair(1, 4), PersistencePair(2, 3)]
    assert verify_interval_basis(m, basis) == []


def test_zero_module():
    m = PersistenceModule(Q, [0, 0, 0], [np.zeros((0, 0))] * 2)
    basis, pairs = pmd(m)
    assert pairs == [] and len(basis) == 0


def test_single_step():
    m = PersistenceModule(Q, [3], [])
    assert pmd(m)[1] == [PersistencePair(1, 2)] * 3


def test_certificate_detects_a_bad_basis():
    m = example_module(Q)
    basis, _ = pmd(m)
    from intervalbasis.decompose import IntervalBasis, IntervalElement

    bad = IntervalBasis([IntervalElement(Q.asarray([1, 0]), 2, 3)] + basis.elements[:1], m)
    assert verify_interval_basis(m, bad)


@pytest.mark.parametrize("field", EXACT)
@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_pmd_matches_oracle(field, seed):
    m = random_module(np.random.default_rng(seed), field)
    basis, pairs = pmd(m)
    assert pair_multiset(pairs) == pair_multiset(barcode_oracle(m))
    assert verify_interval_basis(m, basis) == []


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_real_paths_agree(seed):
    m = random_module(np.random.default_rng(seed), R, max_dim=6, max_len=5)
    b_svd, p_svd = pmd(m, use_real_path=True)
    b_gen, p_gen = pmd(m, use_real_path=False)
    assert p_svd == p_gen == barcode_oracle(m)
    assert verify_interval_basis(m, b_svd) == []


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_thread_count_does_not_change_output(seed):
    m = random_module(np.random.default_rng(seed), PrimeField(5))
    b1, p1 = pmd(m, threads=1)
    b4, p4 = pmd(m, threads=4)
    assert p1 == p4
    assert all(np.array_equal(x.vector, y.vector) for x, y in zip(b1, b4))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1))
def test_interval_basis_diagonalizes_the_module(seed):
    """In the basis of pushed-forward generators every map is a 0/1 column selection."""
    m = random_module(np.random.default_rng(seed), Q, max_dim=5, max_len=5)
    basis, _ = pmd(m)
    f = m.field

    def frame(i):
        alive = [e for e in basis if e.birth <= i < e.death]
        cols = [f.matmul(m.compose(e.birth, i), e.vector) for e in alive]
        return alive, (np.column_stack(cols) if cols else f.zeros((m.dims[i - 1], 0)))

    for i in range(1, m.n):
        src_alive, src = frame(i)
        dst_alive, dst = frame(i + 1)
        if not src_alive:
            continue
        coords = linalg.solve(dst, f.matmul(m.map(i), src), f) if dst_alive else f.zeros((0, len(src_alive)))
        for c, e in enumerate(src_alive):
            expected = [1 if d is e else 0 for d in dst_alive]
            assert [int(x) for x in coords[:, c]] == expected


def test_example_routes_agree_quickly():
    import time

    start = time.perf_counter()
    m = example_module(R)
    routes = [pmd(m, use_real_path=True)[1], pmd(m, use_real_path=False)[1], barcode_oracle(m)]
    assert time.perf_counter() - start < 1.0
    assert routes[0] == routes[1] == routes[2]
