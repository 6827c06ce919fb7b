"""Finite-dimensional (co/bi)algebras given by structure constants.

Index conventions (see linalg): ``mul[i, j, k]`` is the e_k-component of
e_i e_j and ``comul[i, j, k]`` is the (e_j (x) e_k)-component of Delta(e_i).
Units/counits are rank-1 tensors.  Operators use the column convention
(column j is the image of e_j); bilinear forms store sigma(e_i, e_j) at
[i, j].
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import MissingCounit, MissingUnit, ShapeMismatch
from .linalg import (
    Tensor, apply_covec, apply_op, apply_op_in, contract, identity,
    join_legs, pair_form, rank_unconditional, sweedler_expand,
)
from .report import CheckReport


@dataclass
class LinearOp:
    """Endomorphism as a square matrix; columns are images of basis vectors."""

    mat: Tensor

    def __post_init__(self):
        if self.mat.rank != 2 or self.mat.dims[0] != self.mat.dims[1]:
            raise ShapeMismatch("operator matrix must be square")

    @property
    def dim(self):
        return self.mat.dims[0]

    @property
    def ring(self):
        return self.mat.ring

    @staticmethod
    def identity(ring, n):
        return LinearOp(identity(ring, n))

    @staticmethod
    def zero(ring, n):
        return LinearOp(linalg.zeros(ring, (n, n)))

    def __matmul__(self, other):
        return LinearOp(linalg.matmul(self.mat, other.mat))

    def __add__(self, other):
        return LinearOp(self.mat + other.mat)

    def __sub__(self, other):
        return LinearOp(self.mat - other.mat)

    def __neg__(self):
        return LinearOp(-self.mat)

    def scale(self, scalar):
        return LinearOp(self.mat.scale(scalar))

    def plus_scaled_identity(self, scalar):
        return LinearOp(self.mat + identity(self.ring, self.dim).scale(scalar))

    def transpose(self):
        return LinearOp(self.mat.transpose((1, 0)))

    @property
    def is_zero(self):
        return self.mat.is_zero

    def __eq__(self, other):
        if not isinstance(other, LinearOp):
            return NotImplemented
        return self.mat == other.mat


@dataclass
class BilinearForm:
    """Element of (C (x) C)^*: mat[i, j] = form(e_i, e_j)."""

    mat: Tensor

    def __post_init__(self):
        if self.mat.rank != 2 or self.mat.dims[0] != self.mat.dims[1]:
            raise ShapeMismatch("form matrix must be square")

    @property
    def dim(self):
        return self.mat.dims[0]

    @property
    def ring(self):
        return self.mat.ring

    @staticmethod
    def zero(ring, n):
        return BilinearForm(linalg.zeros(ring, (n, n)))

    @staticmethod
    def from_covecs(f, g):
        """Rank-one form (f (x) g)(c, d) = f(c) g(d) from two functionals."""
        return BilinearForm(contract(f, g, []))

    def __add__(self, other):
        return BilinearForm(self.mat + other.mat)

    def __sub__(self, other):
        return BilinearForm(self.mat - other.mat)

    def __neg__(self):
        return BilinearForm(-self.mat)

    def scale(self, scalar):
        return BilinearForm(self.mat.scale(scalar))

    def __eq__(self, other):
        if not isinstance(other, BilinearForm):
            return NotImplemented
        return self.mat == other.mat


@dataclass
class Algebra:
    ring: object
    dim: int
    mul: Tensor
    unit: Tensor | None = None
    labels: tuple = ()

    def __post_init__(self):
        if self.mul.dims != (self.dim,) * 3:
            raise ShapeMismatch("multiplication tensor has wrong shape")
        if self.unit is not None and self.unit.dims != (self.dim,):
            raise ShapeMismatch("unit vector has wrong shape")
        if not self.labels:
            self.labels = tuple(f"e{i+1}" for i in range(self.dim))


@dataclass
class Coalgebra:
    ring: object
    dim: int
    comul: Tensor
    counit: Tensor | None = None
    labels: tuple = ()

    def __post_init__(self):
        if self.comul.dims != (self.dim,) * 3:
            raise ShapeMismatch("comultiplication tensor has wrong shape")
        if self.counit is not None and self.counit.dims != (self.dim,):
            raise ShapeMismatch("counit vector has wrong shape")
        if not self.labels:
            self.labels = tuple(f"e{i+1}" for i in range(self.dim))


@dataclass
class Bialgebra:
    alg: Algebra
    coalg: Coalgebra

    def __post_init__(self):
        if self.alg.dim != self.coalg.dim:
            raise ShapeMismatch("algebra and coalgebra dimensions differ")

    @property
    def ring(self):
        return self.alg.ring

    @property
    def dim(self):
        return self.alg.dim

    @property
    def mul(self):
        return self.alg.mul

    @property
    def comul(self):
        return self.coalg.comul

    @property
    def unit(self):
        return self.alg.unit

    @property
    def counit(self):
        return self.coalg.counit

    @property
    def labels(self):
        return self.alg.labels


@dataclass
class Comodule:
    """Left coactions are tensors [m; h, m'], right coactions [m; m', h]."""

    side: str
    over: Coalgebra
    dim: int
    coaction: Tensor

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        n = self.over.dim
        expected = (self.dim, n, self.dim) if self.side == "left" \
            else (self.dim, self.dim, n)
        if self.coaction.dims != expected:
            raise ShapeMismatch("coaction tensor has wrong shape")


# --- residual builders ---------------------------------------------------

def assoc_residual(mul):
    """(ab)c - a(bc) as a rank-4 tensor with legs (a, b, c, out)."""
    left = contract(mul, mul, [(2, 0)])          # (a, b, c, out)
    right = contract(mul, mul, [(2, 1)])         # (b, c, a, out)
    return left - right.transpose((2, 0, 1, 3))


def coassoc_residual(comul):
    """(Delta (x) id)Delta - (id (x) Delta)Delta, legs (in, x, y, z)."""
    return sweedler_expand(comul, comul, 1) - sweedler_expand(comul, comul, 2)


def comul_multiplicative_residual(mul, comul):
    """Delta(xy) - Delta(x)Delta(y), legs (x, y, out1, out2)."""
    lhs = sweedler_expand(mul, comul, 2)
    outer = contract(comul, comul, [])           # (x, p, q, y, r, s)
    joined = join_legs(outer, mul, 1, 4)         # (x, out1, q, y, s)
    joined = join_legs(joined, mul, 2, 4)        # (x, out1, out2, y)
    return lhs - joined.transpose((0, 3, 1, 2))


def algebra_map_residual(fmat, source_mul, target_mul):
    """f(xy) - f(x)f(y), legs (x, y, out)."""
    lhs = apply_op(source_mul, fmat, 2)
    rhs = apply_op_in(apply_op_in(target_mul, fmat, 0), fmat, 1)
    return lhs - rhs


def coalgebra_map_residual(fmat, source_comul, target_comul):
    """Delta_target(f(c)) - (f (x) f)Delta_source(c), legs (c, out1, out2)."""
    lhs = apply_op_in(target_comul, fmat, 0)
    rhs = apply_op(apply_op(source_comul, fmat, 1), fmat, 2)
    return lhs - rhs


# --- checkers -------------------------------------------------------------

def check_associativity(a: Algebra) -> CheckReport:
    report = CheckReport("associativity")
    report.add_residual("associativity", assoc_residual(a.mul))
    return report


def check_coassociativity(c: Coalgebra) -> CheckReport:
    report = CheckReport("coassociativity")
    report.add_residual("coassociativity", coassoc_residual(c.comul))
    return report


def check_unit_laws(a: Algebra) -> CheckReport:
    report = CheckReport("unit-laws")
    if a.unit is None:
        raise MissingUnit("algebra has no unit")
    eye = identity(a.ring, a.dim)
    report.require_equal("unit-left", apply_covec(a.mul, a.unit, 0), eye)
    report.require_equal("unit-right", apply_covec(a.mul, a.unit, 1), eye)
    return report


def check_counit_laws(c: Coalgebra) -> CheckReport:
    report = CheckReport("counit-laws")
    if c.counit is None:
        raise MissingCounit("coalgebra has no counit")
    eye = identity(c.ring, c.dim)
    report.require_equal("counit-left", apply_covec(c.comul, c.counit, 1), eye)
    report.require_equal("counit-right", apply_covec(c.comul, c.counit, 2), eye)
    return report


def check_bialgebra(h: Bialgebra) -> CheckReport:
    report = CheckReport("bialgebra")
    report.add_child(check_associativity(h.alg))
    report.add_child(check_coassociativity(h.coalg))
    compat = CheckReport("comul-multiplicative")
    compat.add_residual(
        "comul-multiplicative",
        comul_multiplicative_residual(h.mul, h.comul))
    report.add_child(compat)
    if h.unit is not None:
        report.add_child(check_unit_laws(h.alg))
    if h.counit is not None:
        report.add_child(check_counit_laws(h.coalg))
        eps_mult = CheckReport("counit-multiplicative")
        eps_mult.require_equal(
            "counit-multiplicative",
            apply_covec(h.mul, h.counit, 2),
            contract(h.counit, h.counit, []))
        report.add_child(eps_mult)
    if h.unit is not None:
        grouplike = CheckReport("comul-of-unit")
        grouplike.require_equal(
            "comul-of-unit",
            apply_covec(h.comul, h.unit, 0),
            contract(h.unit, h.unit, []))
        report.add_child(grouplike)
        if h.counit is not None:
            normal = CheckReport("counit-of-unit")
            paired = contract(h.unit, h.counit, [(0, 0)])
            one = Tensor(h.ring, (), [h.ring.one])
            normal.require_equal("counit-of-unit", paired, one)
            report.add_child(normal)
    return report


def check_comodule(m: Comodule) -> CheckReport:
    report = CheckReport(f"{m.side}-comodule")
    h = m.over
    rho = m.coaction
    if m.side == "left":
        lhs = sweedler_expand(rho, h.comul, 1)   # (m; h1, h2, m')
        rhs = sweedler_expand(rho, rho, 2)       # (m; h, h', m')
        report.require_equal("coaction-coassociativity", lhs, rhs)
        if h.counit is not None:
            report.require_equal(
                "coaction-counit",
                apply_covec(rho, h.counit, 1),
                identity(h.ring, m.dim))
    else:
        lhs = sweedler_expand(rho, h.comul, 2)   # (m; m', h1, h2)
        rhs = sweedler_expand(rho, rho, 1)       # (m; m'', h', h)
        report.require_equal("coaction-coassociativity", lhs, rhs)
        if h.counit is not None:
            report.require_equal(
                "coaction-counit",
                apply_covec(rho, h.counit, 2),
                identity(h.ring, m.dim))
    return report


def convolution(f, g, h: Bialgebra):
    """Convolution (f * g)(c) = f(c_1) g(c_2).

    Operators convolve to an operator (products via mul); functionals
    (rank-1 tensors) convolve to functionals; a mixed pair gives an operator.
    """
    f_is_op = isinstance(f, LinearOp)
    g_is_op = isinstance(g, LinearOp)
    comul = h.comul
    if f_is_op and g_is_op:
        t = apply_op(apply_op(comul, f.mat, 1), g.mat, 2)
        out = join_legs(t, h.mul, 1, 2)          # (c, out)
        return LinearOp(out.transpose((1, 0)))
    if f_is_op and not g_is_op:
        t = apply_covec(comul, g, 2)             # (c, a)
        out = apply_op(t, f.mat, 1)
        return LinearOp(out.transpose((1, 0)))
    if not f_is_op and g_is_op:
        t = apply_covec(comul, f, 1)             # (c, b)
        out = apply_op(t, g.mat, 1)
        return LinearOp(out.transpose((1, 0)))
    return pair_form(comul, contract(f, g, []), 1, 2)


def check_nondegenerate_coalgebra(c: Coalgebra) -> bool:
    """True iff (id (x) f)Delta = 0 or (f (x) id)Delta = 0 forces f = 0.

    Decided exactly by the ranks of the two homogeneous systems; raises
    ParameterDependentRank when a verdict would depend on parameter values.
    """
    n = c.dim
    rows_right = []
    rows_left = []
    for i in range(n):
        for a in range(n):
            rows_right.append([c.comul[i, a, b] for b in range(n)])
            rows_left.append([c.comul[i, b, a] for b in range(n)])
    return rank_unconditional(rows_right) == n \
        and rank_unconditional(rows_left) == n


def check_algebra_map(fmat, source: Algebra, target: Algebra) -> CheckReport:
    report = CheckReport("algebra-map")
    report.add_residual(
        "multiplicativity", algebra_map_residual(fmat, source.mul, target.mul))
    return report


def check_coalgebra_map(fmat, source: Coalgebra, target: Coalgebra) -> CheckReport:
    report = CheckReport("coalgebra-map")
    report.add_residual(
        "comultiplicativity",
        coalgebra_map_residual(fmat, source.comul, target.comul))
    return report
