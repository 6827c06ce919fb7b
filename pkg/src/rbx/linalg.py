"""Dense tensors over Scalar and the contraction/permutation toolkit.

Dimensions stay tiny (at most 16), so storage is a flat row-major list and
contraction simply skips zero entries.  Tensors are treated as immutable once
built; every public operation returns a fresh tensor.

Conventions used throughout the package:

* a linear operator is a rank-2 tensor ``m`` with ``m[i, j]`` the
  e_i-component of the image of e_j (columns are images of basis vectors);
* a multiplication C (x) C -> C is a rank-3 tensor ``mul`` with
  ``mul[i, j, k]`` the e_k-component of e_i * e_j;
* a comultiplication C -> C (x) C is a rank-3 tensor ``comul`` with
  ``comul[i, j, k]`` the (e_j (x) e_k)-component of Delta(e_i);
* a bilinear form is a rank-2 tensor ``f`` with ``f[i, j]`` = f(e_i, e_j).
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction

from .errors import BadPermutation, ParameterDependentRank, ShapeMismatch

_INDEX_CACHE = {}


def _all_indices(dims):
    try:
        return _INDEX_CACHE[dims]
    except KeyError:
        indices = list(itertools.product(*(range(d) for d in dims)))
        _INDEX_CACHE[dims] = indices
        return indices


def _strides(dims):
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    return strides


class Tensor:
    __slots__ = ("ring", "dims", "data")

    def __init__(self, ring, dims, data=None):
        self.ring = ring
        self.dims = tuple(dims)
        size = 1
        for d in self.dims:
            size *= d
        if data is None:
            self.data = [ring.zero] * size
        else:
            if len(data) != size:
                raise ShapeMismatch("data length does not match dims")
            self.data = data

    # -- indexing -------------------------------------------------------

    def _flat(self, idx):
        if len(idx) != len(self.dims):
            raise ShapeMismatch(f"index {idx} for dims {self.dims}")
        flat = 0
        for i, d in zip(idx, self.dims):
            if not 0 <= i < d:
                raise ShapeMismatch(f"index {idx} out of range for {self.dims}")
            flat = flat * d + i
        return flat

    def __getitem__(self, idx):
        if isinstance(idx, int):
            idx = (idx,)
        return self.data[self._flat(idx)]

    def __setitem__(self, idx, value):
        if isinstance(idx, int):
            idx = (idx,)
        self.data[self._flat(idx)] = value

    def add_at(self, idx, value):
        flat = self._flat(idx)
        self.data[flat] = self.data[flat] + value

    @property
    def rank(self):
        return len(self.dims)

    def items(self):
        return zip(_all_indices(self.dims), self.data)

    def nonzero_items(self):
        for idx, value in zip(_all_indices(self.dims), self.data):
            if not value.is_zero:
                yield idx, value

    # -- linear structure -------------------------------------------------

    def _check_same_shape(self, other):
        if self.dims != other.dims:
            raise ShapeMismatch(f"{self.dims} vs {other.dims}")
        if self.ring is not other.ring:
            raise ValueError("tensors from different rings")

    def __add__(self, other):
        self._check_same_shape(other)
        return Tensor(self.ring, self.dims,
                      [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        self._check_same_shape(other)
        return Tensor(self.ring, self.dims,
                      [a - b for a, b in zip(self.data, other.data)])

    def __neg__(self):
        return Tensor(self.ring, self.dims, [-a for a in self.data])

    def scale(self, scalar):
        return Tensor(self.ring, self.dims, [scalar * a for a in self.data])

    @property
    def is_zero(self):
        return all(a.is_zero for a in self.data)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if self.dims != other.dims:
            return False
        return all(a == b for a, b in zip(self.data, other.data))

    __hash__ = None

    def copy(self):
        return Tensor(self.ring, self.dims, list(self.data))

    def __repr__(self):
        nnz = sum(1 for a in self.data if not a.is_zero)
        return f"Tensor(dims={self.dims}, nnz={nnz})"

    # -- reshaping ---------------------------------------------------------

    def transpose(self, axes):
        """numpy-style transpose: out.dims[i] == self.dims[axes[i]]."""
        if sorted(axes) != list(range(self.rank)):
            raise BadPermutation(f"{axes} is not a permutation of legs")
        out_dims = tuple(self.dims[a] for a in axes)
        out = Tensor(self.ring, out_dims)
        inverse = [0] * len(axes)
        for pos, a in enumerate(axes):
            inverse[a] = pos
        for idx, value in self.nonzero_items():
            out[tuple(idx[a] for a in axes)] = value
        return out

    def group_legs(self, groups):
        """Flatten each group of legs (row-major) into a single leg."""
        flat_order = [leg for group in groups for leg in group]
        if sorted(flat_order) != list(range(self.rank)):
            raise BadPermutation("groups must partition the legs")
        out_dims = []
        for group in groups:
            size = 1
            for leg in group:
                size *= self.dims[leg]
            out_dims.append(size)
        out = Tensor(self.ring, tuple(out_dims))
        for idx, value in self.nonzero_items():
            out_idx = []
            for group in groups:
                flat = 0
                for leg in group:
                    flat = flat * self.dims[leg] + idx[leg]
                out_idx.append(flat)
            out[tuple(out_idx)] = value
        return out


def zeros(ring, dims):
    return Tensor(ring, dims)


def identity(ring, n):
    out = Tensor(ring, (n, n))
    for i in range(n):
        out[i, i] = ring.one
    return out


def from_rows(ring, rows):
    """Rank-2 tensor from a nested list of scalars (or parseable strings)."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if n_rows else 0
    out = Tensor(ring, (n_rows, n_cols))
    for i, row in enumerate(rows):
        if len(row) != n_cols:
            raise ShapeMismatch("ragged rows")
        for j, value in enumerate(row):
            out[i, j] = ring.scalar(value)
    return out


def contract(a, b, pairs):
    """Exact contraction of `a` with `b` over the given (leg_a, leg_b) pairs.

    Output legs are the free legs of `a` (in order) followed by the free legs
    of `b` (in order).
    """
    if a.ring is not b.ring:
        raise ValueError("tensors from different rings")
    legs_a = [p[0] for p in pairs]
    legs_b = [p[1] for p in pairs]
    if len(set(legs_a)) != len(legs_a) or len(set(legs_b)) != len(legs_b):
        raise ShapeMismatch("duplicate legs in contraction")
    for la, lb in pairs:
        if a.dims[la] != b.dims[lb]:
            raise ShapeMismatch(
                f"contracted extents differ: {a.dims[la]} vs {b.dims[lb]}")
    free_a = [i for i in range(a.rank) if i not in legs_a]
    free_b = [i for i in range(b.rank) if i not in legs_b]
    out = Tensor(a.ring, tuple([a.dims[i] for i in free_a]
                               + [b.dims[i] for i in free_b]))
    buckets = defaultdict(list)
    for idx, value in b.nonzero_items():
        key = tuple(idx[l] for l in legs_b)
        buckets[key].append((tuple(idx[l] for l in free_b), value))
    for idx, value in a.nonzero_items():
        key = tuple(idx[l] for l in legs_a)
        hits = buckets.get(key)
        if not hits:
            continue
        head = tuple(idx[l] for l in free_a)
        for tail, other in hits:
            out.add_at(head + tail, value * other)
    return out


def permute_legs(t, axes):
    return t.transpose(axes)


def apply_op(t, mat, leg):
    """Apply the operator `mat` along output leg `leg` of `t`.

    out[..., i, ...] = sum_j mat[i, j] * t[..., j, ...]
    """
    if mat.rank != 2:
        raise ShapeMismatch("operator must be rank 2")
    if mat.dims[1] != t.dims[leg]:
        raise ShapeMismatch(
            f"operator acts on dim {mat.dims[1]}, leg has {t.dims[leg]}")
    raw = contract(t, mat, [(leg, 1)])
    axes = list(range(t.rank - 1))
    axes.insert(leg, t.rank - 1)
    return raw.transpose(axes)


def apply_op_in(t, mat, leg):
    """Precompose with `mat` on input leg `leg` (contravariant slot).

    out[..., j, ...] = sum_i mat[i, j] * t[..., i, ...]
    """
    if mat.rank != 2:
        raise ShapeMismatch("operator must be rank 2")
    if mat.dims[0] != t.dims[leg]:
        raise ShapeMismatch("operator/leg extent mismatch")
    raw = contract(t, mat, [(leg, 0)])
    axes = list(range(t.rank - 1))
    axes.insert(leg, t.rank - 1)
    return raw.transpose(axes)


def apply_covec(t, vec, leg):
    """Contract a functional (rank-1 tensor) against leg `leg`."""
    if vec.rank != 1:
        raise ShapeMismatch("functional must be rank 1")
    return contract(t, vec, [(leg, 0)])


def sweedler_expand(t, comul, leg):
    """Replace output leg `leg` by two legs via the comultiplication.

    out[..., a, b, ...] = sum_j t[..., j, ...] * comul[j, a, b]
    with (a, b) occupying positions (leg, leg+1).
    """
    if comul.rank != 3:
        raise ShapeMismatch("comultiplication must be rank 3")
    raw = contract(t, comul, [(leg, 0)])
    axes = list(range(t.rank - 1))
    axes[leg:leg] = [t.rank - 1, t.rank]
    return raw.transpose(axes)


def join_legs(t, mul, leg_i, leg_j):
    """Multiply legs `leg_i` and `leg_j` together via the multiplication.

    out[..., k, ...] = sum_{a,b} t[..., a, ..., b, ...] * mul[a, b, k]
    with k at the position of min(leg_i, leg_j) after removal of both legs.
    """
    if mul.rank != 3:
        raise ShapeMismatch("multiplication must be rank 3")
    raw = contract(t, mul, [(leg_i, 0), (leg_j, 1)])
    target = min(leg_i, leg_j)
    # free legs of t keep their order; count how many survive before target
    pos = sum(1 for l in range(target) if l not in (leg_i, leg_j))
    axes = list(range(t.rank - 2))
    axes.insert(pos, t.rank - 2)
    return raw.transpose(axes)


def pair_form(t, form, leg_i, leg_j):
    """Contract a bilinear form against legs (leg_i, leg_j), removing both."""
    if form.rank != 2:
        raise ShapeMismatch("form must be rank 2")
    return contract(t, form, [(leg_i, 0), (leg_j, 1)])


def matmul(a, b):
    if a.rank != 2 or b.rank != 2:
        raise ShapeMismatch("matmul needs rank-2 tensors")
    return contract(a, b, [(1, 0)])


def transpose(mat):
    return mat.transpose((1, 0))


def kron(a, b):
    """Kronecker product of two rank-2 tensors (row-major pair flattening)."""
    if a.rank != 2 or b.rank != 2:
        raise ShapeMismatch("kron needs rank-2 tensors")
    outer = contract(a, b, [])
    return outer.group_legs([[0, 2], [1, 3]])


# --- exact linear algebra over the scalar field -------------------------

def _clear_row(row):
    """Row of Scalars -> row of Polys with the same vanishing pattern.

    Each entry is multiplied by the product of the other entries'
    denominators, which preserves rank over the rational-function field.
    """
    dens = [e.den for e in row]
    if all(d.is_one for d in dens):
        return [e.num for e in row]
    cleared = []
    for j, entry in enumerate(row):
        p = entry.num
        for k, d in enumerate(dens):
            if k != j and not d.is_one:
                p = p * d
        cleared.append(p)
    return cleared


def rank_unconditional(rows):
    """Rank of a matrix of Scalars, valid for every parameter value.

    Runs division-free Gaussian elimination with full pivoting, only ever
    pivoting on nonzero rational constants.  If at some stage the remaining
    submatrix is nonzero but contains no constant entry, the rank depends on
    the parameters and ParameterDependentRank is raised with one obstruction
    entry.
    """
    work = [_clear_row(row) for row in rows]
    if not work:
        return 0
    n_cols = len(work[0])
    used_rows = set()
    used_cols = set()
    rank = 0
    while True:
        pivot = None
        obstruction = None
        for i, row in enumerate(work):
            if i in used_rows:
                continue
            for j in range(n_cols):
                if j in used_cols:
                    continue
                entry = row[j]
                if entry.is_zero:
                    continue
                if entry.is_constant:
                    pivot = (i, j)
                    break
                if obstruction is None:
                    obstruction = (i, j, entry)
            if pivot:
                break
        if pivot is None:
            if obstruction is not None:
                raise ParameterDependentRank(*obstruction)
            return rank
        pi, pj = pivot
        used_rows.add(pi)
        used_cols.add(pj)
        rank += 1
        pivot_row = work[pi]
        pivot_val = pivot_row[pj]
        for i, row in enumerate(work):
            if i in used_rows or row[pj].is_zero:
                continue
            factor = row[pj]
            work[i] = [pivot_val * e - factor * p
                       for e, p in zip(row, pivot_row)]


def nullspace(rows, n_cols):
    """Basis of the solution space of a homogeneous system over Q.

    `rows` are lists of Scalars that must all be rational constants
    (ParameterDependentRank otherwise).  Returns basis vectors as lists of
    Fractions.
    """
    work = []
    for row in rows:
        frac_row = []
        for e in row:
            if not e.is_constant:
                raise ParameterDependentRank(0, 0, e)
            frac_row.append(e.const_value())
        work.append(frac_row)
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = 1 / work[r][c]
        work[r] = [inv * e for e in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                factor = work[i][c]
                work[i] = [e - factor * p for e, p in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    free_cols = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for free in free_cols:
        vec = [Fraction(0)] * n_cols
        vec[free] = Fraction(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -work[row_idx][free]
        basis.append(vec)
    return basis
