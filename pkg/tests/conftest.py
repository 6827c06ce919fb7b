"""Shared builders for the example structures used across the test suite."""

import pytest

from rbx.linalg import Tensor, zeros
from rbx.scalar import ParamRing
from rbx.structures import Algebra, Bialgebra, BilinearForm, Coalgebra, LinearOp


def covec(ring, entries):
    out = Tensor(ring, (len(entries),))
    for i, value in enumerate(entries):
        out[(i,)] = ring.scalar(value)
    return out


def op_from_images(ring, images):
    """Operator from per-basis images: images[j] maps row index -> coeff."""
    n = len(images)
    out = zeros(ring, (n, n))
    for j, image in enumerate(images):
        for i, value in image.items():
            out[i, j] = ring.scalar(value)
    return LinearOp(out)


def form_from_entries(ring, n, entries):
    out = zeros(ring, (n, n))
    for (i, j), value in entries.items():
        out[i, j] = ring.scalar(value)
    return BilinearForm(out)


def mul_from_table(ring, table):
    """table[i][j] maps output index -> coeff for e_i * e_j."""
    n = len(table)
    out = zeros(ring, (n, n, n))
    for i in range(n):
        for j in range(n):
            for k, value in table[i][j].items():
                out[i, j, k] = ring.scalar(value)
    return out


def comul_from_terms(ring, terms):
    """terms[i] is a list of (j, k, coeff) pieces of Delta(e_i)."""
    n = len(terms)
    out = zeros(ring, (n, n, n))
    for i, pieces in enumerate(terms):
        for j, k, value in pieces:
            out[i, j, k] = ring.scalar(value)
    return out


def make_dim2(ring=None):
    """2-dimensional unital counital bialgebra: u1 unit, u2 idempotent,
    grouplike comultiplication."""
    if ring is None:
        ring = ParamRing(["lambda", "gamma", "p1", "p2", "q1", "q2"])
    mul = mul_from_table(ring, [
        [{0: 1}, {1: 1}],
        [{1: 1}, {1: 1}],
    ])
    comul = comul_from_terms(ring, [
        [(0, 0, 1)],
        [(1, 1, 1)],
    ])
    alg = Algebra(ring, 2, mul, unit=covec(ring, [1, 0]),
                  labels=("u1", "u2"))
    coalg = Coalgebra(ring, 2, comul, counit=covec(ring, [1, 1]),
                      labels=("u1", "u2"))
    return Bialgebra(alg, coalg)


def make_dim3(ring=None):
    """3-dimensional bialgebra: u1 unit, u2 idempotent absorbing u3."""
    if ring is None:
        ring = ParamRing(["lambda", "gamma", "p1", "p2", "p3",
                          "q1", "q2", "q3"])
    mul = mul_from_table(ring, [
        [{0: 1}, {1: 1}, {2: 1}],
        [{1: 1}, {1: 1}, {2: 1}],
        [{2: 1}, {2: 1}, {}],
    ])
    comul = comul_from_terms(ring, [
        [(0, 0, 1)],
        [(0, 1, 1), (1, 0, 1), (1, 1, -1)],
        [(0, 2, 1), (2, 0, 1), (2, 1, -1)],
    ])
    alg = Algebra(ring, 3, mul, unit=covec(ring, [1, 0, 0]),
                  labels=("u1", "u2", "u3"))
    coalg = Coalgebra(ring, 3, comul, counit=covec(ring, [1, 0, 0]),
                      labels=("u1", "u2", "u3"))
    return Bialgebra(alg, coalg)


_T2_TABLE = [
    [{0: 1}, {1: 1}, {2: 1}, {3: 1}],
    [{1: 1}, {0: 1}, {3: 1}, {2: 1}],
    [{2: 1}, {3: -1}, {}, {}],
    [{3: 1}, {2: -1}, {}, {}],
]


def _t2_ring():
    return ParamRing(["lambda", "gamma", "p", "p1", "p2", "p3", "p4",
                      "q1", "q2", "q3", "q4"])


def make_t2(ring=None, variant="grouplike-right"):
    """4-dimensional unital bialgebra on u1=1, u2=g, u3=x, u4=gx.

    Two comultiplication variants exist for the non-grouplike part:
    'grouplike-right' has Delta(u3) = u3(x)u1 + u2(x)u3, and
    'grouplike-left' the leg-swapped version.
    """
    if ring is None:
        ring = _t2_ring()
    mul = mul_from_table(ring, _T2_TABLE)
    if variant == "grouplike-right":
        comul = comul_from_terms(ring, [
            [(0, 0, 1)],
            [(1, 1, 1)],
            [(2, 0, 1), (1, 2, 1)],
            [(3, 1, 1), (0, 3, 1)],
        ])
    elif variant == "grouplike-left":
        comul = comul_from_terms(ring, [
            [(0, 0, 1)],
            [(1, 1, 1)],
            [(0, 2, 1), (2, 1, 1)],
            [(1, 3, 1), (3, 0, 1)],
        ])
    else:
        raise ValueError(variant)
    labels = ("u1", "u2", "u3", "u4")
    alg = Algebra(ring, 4, mul, unit=covec(ring, [1, 0, 0, 0]), labels=labels)
    coalg = Coalgebra(ring, 4, comul, counit=covec(ring, [1, 1, 0, 0]),
                      labels=labels)
    return Bialgebra(alg, coalg)


def make_ex316(ring=None):
    """3-dimensional non-unital, non-counital bialgebra on x, y, z."""
    if ring is None:
        ring = ParamRing(["lambda1", "lambda2", "lambda3", "lambda4"])
    mul = mul_from_table(ring, [
        [{0: 1}, {1: 1}, {2: 1}],
        [{1: 1}, {1: 1}, {2: 1}],
        [{2: 1}, {}, {}],
    ])
    comul = comul_from_terms(ring, [
        [(0, 0, 1)],
        [(1, 1, 1)],
        [(2, 2, 1)],
    ])
    alg = Algebra(ring, 3, mul, labels=("x", "y", "z"))
    coalg = Coalgebra(ring, 3, comul, labels=("x", "y", "z"))
    return Bialgebra(alg, coalg)


@pytest.fixture
def dim2():
    return make_dim2()


@pytest.fixture
def dim3():
    return make_dim3()


@pytest.fixture
def t2():
    return make_t2()


@pytest.fixture
def t2_alt():
    return make_t2(variant="grouplike-left")


@pytest.fixture
def ex316():
    return make_ex316()
