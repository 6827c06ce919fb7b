"""Differential test of the tensor kernel against numpy object arrays.

numpy is optional for the package; these tests are skipped if it is not
available.  Entries are Fractions so both sides are exact.
"""

import itertools
import random
from fractions import Fraction

import pytest

np = pytest.importorskip("numpy")

from rbx.linalg import Tensor, contract, kron, matmul, zeros
from rbx.scalar import ParamRing


@pytest.fixture
def ring():
    return ParamRing([])


def random_pair(ring, dims, rng):
    t = zeros(ring, dims)
    arr = np.zeros(dims, dtype=object)
    arr[...] = Fraction(0)
    for idx in itertools.product(*(range(d) for d in dims)):
        if rng.random() < 0.6:
            value = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
            t[idx] = ring.const(value)
            arr[idx] = value
    return t, arr


def assert_matches(t, arr):
    assert t.dims == arr.shape
    for idx, value in t.items():
        assert value.const_value() == arr[idx], idx


class TestAgainstNumpy:
    def test_contract_matches_einsum(self, ring):
        rng = random.Random(51)
        for _ in range(20):
            a, arr_a = random_pair(ring, (3, 2, 4), rng)
            b, arr_b = random_pair(ring, (2, 4, 3), rng)
            out = contract(a, b, [(1, 0), (2, 1)])
            expected = np.einsum("ijk,jkl->il", arr_a, arr_b)
            assert_matches(out, expected)
            out = contract(a, b, [(0, 2)])
            expected = np.einsum("ijk,lmi->jklm", arr_a, arr_b)
            assert_matches(out, expected)

    def test_outer_product(self, ring):
        rng = random.Random(52)
        a, arr_a = random_pair(ring, (2, 3), rng)
        b, arr_b = random_pair(ring, (2,), rng)
        out = contract(a, b, [])
        expected = np.einsum("ij,k->ijk", arr_a, arr_b)
        assert_matches(out, expected)

    def test_transpose_and_group(self, ring):
        rng = random.Random(53)
        t, arr = random_pair(ring, (2, 3, 4), rng)
        for axes in itertools.permutations(range(3)):
            assert_matches(t.transpose(axes), np.transpose(arr, axes))
        grouped = t.group_legs([[0, 2], [1]])
        expected = np.transpose(arr, (0, 2, 1)).reshape(8, 3)
        assert_matches(grouped, expected)

    def test_matmul_and_kron(self, ring):
        rng = random.Random(54)
        a, arr_a = random_pair(ring, (3, 4), rng)
        b, arr_b = random_pair(ring, (4, 2), rng)
        assert_matches(matmul(a, b), arr_a @ arr_b)
        c, arr_c = random_pair(ring, (2, 2), rng)
        assert_matches(kron(a, c), np.kron(arr_a, arr_c))
