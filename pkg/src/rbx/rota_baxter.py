"""Rota-Baxter structure checkers and the constructions they feed.

Weighted operators, operator pairs on algebras (systems) and coalgebras
(cosystems), their combination on bialgebras (bisystems), the two coproducts
built from a cosystem, the weak copseudotwistor, colinearity/orthogonality
criteria, twisted pairs, and the dendriform splitting.

Every check returns a CheckReport listing all failing basis tuples with their
residual scalars; a residual counts as a failure iff it is not the
identically-zero rational function.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParameterDependentRank, PreconditionFailed, ShapeMismatch
from .linalg import apply_op, apply_op_in, identity, kron, matmul, sweedler_expand
from .report import CheckReport, Failure
from .structures import (
    Algebra, Bialgebra, Coalgebra, LinearOp, check_nondegenerate_coalgebra,
)


@dataclass
class RBSystem:
    carrier: Algebra
    R: LinearOp
    S: LinearOp

    def __post_init__(self):
        if self.R.dim != self.carrier.dim or self.S.dim != self.carrier.dim:
            raise ShapeMismatch("operator dimension differs from carrier")


@dataclass
class RBCosystem:
    carrier: Coalgebra
    Q: LinearOp
    T: LinearOp

    def __post_init__(self):
        if self.Q.dim != self.carrier.dim or self.T.dim != self.carrier.dim:
            raise ShapeMismatch("operator dimension differs from carrier")


@dataclass
class RBBisystem:
    carrier: Bialgebra
    R: LinearOp
    S: LinearOp
    Q: LinearOp
    T: LinearOp


# --- weighted single-operator checks -------------------------------------

def check_rb_algebra(a: Algebra, R: LinearOp, weight) -> CheckReport:
    """R(x)R(y) = R(xR(y)) + R(R(x)y) + weight * R(xy) on all basis pairs."""
    if R.dim != a.dim:
        raise ShapeMismatch("operator dimension differs from carrier")
    weight = a.ring.scalar(weight)
    mul, r = a.mul, R.mat
    rt = R.mat
    lhs = apply_op_in(apply_op_in(mul, rt, 0), rt, 1)
    rhs = apply_op(apply_op_in(mul, rt, 1), r, 2) \
        + apply_op(apply_op_in(mul, rt, 0), r, 2) \
        + apply_op(mul, r, 2).scale(weight)
    report = CheckReport("rb-algebra")
    report.require_equal("weighted-operator-identity", lhs, rhs)
    return report


def check_rb_coalgebra(c: Coalgebra, Q: LinearOp, weight) -> CheckReport:
    """(Q(x)Q)Delta = (id(x)Q)Delta Q + (Q(x)id)Delta Q + weight Delta Q."""
    if Q.dim != c.dim:
        raise ShapeMismatch("operator dimension differs from carrier")
    weight = c.ring.scalar(weight)
    comul, q = c.comul, Q.mat
    dq = apply_op_in(comul, q, 0)
    lhs = apply_op(apply_op(comul, q, 1), q, 2)
    rhs = apply_op(dq, q, 2) + apply_op(dq, q, 1) + dq.scale(weight)
    report = CheckReport("rb-coalgebra")
    report.require_equal("weighted-cooperator-identity", lhs, rhs)
    return report


def check_rb_bialgebra(h: Bialgebra, R: LinearOp, Q: LinearOp,
                       weight, coweight) -> CheckReport:
    report = CheckReport("rb-bialgebra")
    report.add_child(check_rb_algebra(h.alg, R, weight))
    report.add_child(check_rb_coalgebra(h.coalg, Q, coweight))
    return report


# --- operator pairs --------------------------------------------------------

def check_rb_system(a: Algebra, R: LinearOp, S: LinearOp) -> CheckReport:
    """Coupled pair identities R(x)R(y) = R(R(x)y + xS(y)) and
    S(x)S(y) = S(R(x)y + xS(y))."""
    if R.dim != a.dim or S.dim != a.dim:
        raise ShapeMismatch("operator dimension differs from carrier")
    mul = a.mul
    rt, st = R.mat, S.mat
    inner = apply_op_in(mul, rt, 0) + apply_op_in(mul, st, 1)
    report = CheckReport("rb-system")
    lhs_r = apply_op_in(apply_op_in(mul, rt, 0), rt, 1)
    report.require_equal("pair-identity-first",
                         lhs_r, apply_op(inner, R.mat, 2))
    lhs_s = apply_op_in(apply_op_in(mul, st, 0), st, 1)
    report.require_equal("pair-identity-second",
                         lhs_s, apply_op(inner, S.mat, 2))
    return report


def _cosystem_residuals(comul, Q: LinearOp, T: LinearOp):
    q, t = Q.mat, T.mat
    dq = apply_op_in(comul, q, 0)
    dt = apply_op_in(comul, t, 0)
    res1 = apply_op(apply_op(comul, q, 1), q, 2) \
        - apply_op(dq, q, 1) - apply_op(dq, t, 2)
    res2 = apply_op(apply_op(comul, t, 1), t, 2) \
        - apply_op(dt, q, 1) - apply_op(dt, t, 2)
    return res1, res2


def check_rb_cosystem(c: Coalgebra, Q: LinearOp, T: LinearOp) -> CheckReport:
    """Coupled coproduct identities for the operator pair (Q, T)."""
    if Q.dim != c.dim or T.dim != c.dim:
        raise ShapeMismatch("operator dimension differs from carrier")
    res1, res2 = _cosystem_residuals(c.comul, Q, T)
    report = CheckReport("rb-cosystem")
    report.require_zero("copair-identity-first", res1)
    report.require_zero("copair-identity-second", res2)
    return report


def check_rb_bisystem(b: RBBisystem) -> CheckReport:
    report = CheckReport("rb-bisystem")
    report.add_child(check_rb_system(b.carrier.alg, b.R, b.S))
    report.add_child(check_rb_cosystem(b.carrier.coalg, b.Q, b.T))
    return report


# --- weight degenerations ---------------------------------------------------

def weight_to_cosystems(c: Coalgebra, Q: LinearOp, weight):
    """A weighted cooperator yields the two cosystems (Q, Q+w) and (Q+w, Q)."""
    pre = check_rb_coalgebra(c, Q, weight)
    if not pre.ok:
        raise PreconditionFailed("weighted cooperator identity fails", pre)
    shifted = Q.plus_scaled_identity(c.ring.scalar(weight))
    return RBCosystem(c, Q, shifted), RBCosystem(c, shifted, Q)


def weight_to_systems(a: Algebra, R: LinearOp, weight):
    """A weighted operator yields the two systems (R, R+w) and (R+w, R)."""
    pre = check_rb_algebra(a, R, weight)
    if not pre.ok:
        raise PreconditionFailed("weighted operator identity fails", pre)
    shifted = R.plus_scaled_identity(a.ring.scalar(weight))
    return RBSystem(a, R, shifted), RBSystem(a, shifted, R)


# --- coproducts from a cosystem ---------------------------------------------

def _require_cosystem(cs: RBCosystem):
    pre = check_rb_cosystem(cs.carrier, cs.Q, cs.T)
    if not pre.ok:
        raise PreconditionFailed("operator pair is not a cosystem", pre)


def star_coproduct_tensor(cs: RBCosystem):
    comul = cs.carrier.comul
    return apply_op(comul, cs.Q.mat, 1) + apply_op(comul, cs.T.mat, 2)


def star_coproduct(cs: RBCosystem) -> Coalgebra:
    """Deformed coproduct Q(c_1)(x)c_2 + c_1(x)T(c_2); coassociative."""
    _require_cosystem(cs)
    return Coalgebra(cs.carrier.ring, cs.carrier.dim,
                     star_coproduct_tensor(cs), counit=None,
                     labels=cs.carrier.labels)


def check_pre_lie(comul) -> CheckReport:
    """Coassociator symmetric in its first two output legs."""
    if comul.rank != 3 or len(set(comul.dims)) != 1:
        raise ShapeMismatch("expected a square rank-3 coproduct tensor")
    coassociator = sweedler_expand(comul, comul, 1) \
        - sweedler_expand(comul, comul, 2)
    residual = coassociator - coassociator.transpose((0, 2, 1, 3))
    report = CheckReport("pre-lie")
    report.require_zero("coassociator-symmetry", residual)
    return report


def bullet_coproduct(cs: RBCosystem):
    """Skew coproduct Q(c_1)(x)c_2 - T(c_2)(x)c_1 with its pre-Lie verdict."""
    _require_cosystem(cs)
    comul = cs.carrier.comul
    tensor = apply_op(comul, cs.Q.mat, 1) \
        - apply_op(comul, cs.T.mat, 2).transpose((0, 2, 1))
    return tensor, check_pre_lie(tensor)


# --- weak copseudotwistor -----------------------------------------------

def copseudotwistor(cs: RBCosystem):
    """The pair map F = Q(x)id + id(x)T with its three-leg companion.

    Returns (F, F_tilde, report); the report checks both commuting squares
    and that the star coproduct equals F composed with the coproduct.
    """
    _require_cosystem(cs)
    c = cs.carrier
    ring, n = c.ring, c.dim
    eye = identity(ring, n)
    q, t = cs.Q.mat, cs.T.mat
    f = kron(q, eye) + kron(eye, t)
    f_tilde = kron(kron(q, q), eye) + kron(kron(q, eye), t) \
        + kron(kron(eye, t), t)
    # comultiplication as an n^2 x n matrix (rows are output pairs)
    dmat = c.comul.group_legs([[1, 2], [0]])
    d_on_first = kron(dmat, eye)      # Delta (x) id : n^3 x n^2
    d_on_second = kron(eye, dmat)     # id (x) Delta : n^3 x n^2
    f_on_first = kron(f, eye)
    f_on_second = kron(eye, f)
    report = CheckReport("weak-copseudotwistor")
    report.require_equal(
        "square-first",
        matmul(f_tilde, d_on_first),
        matmul(f_on_first, matmul(d_on_first, f)))
    report.require_equal(
        "square-second",
        matmul(f_tilde, d_on_second),
        matmul(f_on_second, matmul(d_on_second, f)))
    star_mat = star_coproduct_tensor(cs).group_legs([[1, 2], [0]])
    report.require_equal("star-equals-F-after-coproduct",
                         star_mat, matmul(f, dmat))
    return LinearOp(f), LinearOp(f_tilde), report


# --- colinearity and orthogonality ----------------------------------------

def check_colinearity(c: Coalgebra, op: LinearOp, side: str) -> CheckReport:
    """left: Delta Q = (id(x)Q)Delta; right: Delta T = (T(x)id)Delta."""
    if op.dim != c.dim:
        raise ShapeMismatch("operator dimension differs from carrier")
    comul = c.comul
    composed = apply_op_in(comul, op.mat, 0)
    report = CheckReport(f"{side}-colinear")
    if side == "left":
        report.require_equal("left-colinearity",
                             composed, apply_op(comul, op.mat, 2))
    elif side == "right":
        report.require_equal("right-colinearity",
                             composed, apply_op(comul, op.mat, 1))
    else:
        raise ValueError("side must be 'left' or 'right'")
    return report


def orthogonality_criterion(c: Coalgebra, Q: LinearOp, T: LinearOp) -> CheckReport:
    """For a left-colinear Q and right-colinear T the cosystem property is
    equivalent to c_1 (x) TQ(c_2) = QT(c_1) (x) c_2 = 0; on a non-degenerate
    carrier also to the operator orthogonality TQ = QT = 0."""
    pre = CheckReport("colinearity-hypotheses")
    pre.add_child(check_colinearity(c, Q, "left"))
    pre.add_child(check_colinearity(c, T, "right"))
    if not pre.ok:
        raise PreconditionFailed("colinearity hypotheses fail", pre)
    report = CheckReport("orthogonality-criterion")
    comul = c.comul
    tq = (T @ Q).mat
    qt = (Q @ T).mat
    report.require_zero("coproduct-right-orthogonality",
                        apply_op(comul, tq, 2))
    report.require_zero("coproduct-left-orthogonality",
                        apply_op(comul, qt, 1))
    try:
        nondeg = check_nondegenerate_coalgebra(c)
    except ParameterDependentRank:
        report.note("non-degeneracy verdict depends on parameters; "
                    "operator orthogonality not asserted")
        nondeg = False
    if nondeg:
        matrix_report = CheckReport("operator-orthogonality")
        matrix_report.require_zero("TQ", tq)
        matrix_report.require_zero("QT", qt)
        report.add_child(matrix_report)
        cosystem_ok = check_rb_cosystem(c, Q, T).ok
        if matrix_report.ok != cosystem_ok:
            report.note("orthogonality verdict disagrees with cosystem check")
            report.failures.append(
                Failure("criterion-equivalence", (), c.ring.one))
    return report


# --- multiplicative / comultiplicative compatibility -----------------------

def check_fg_compat(h: Bialgebra, f: LinearOp, mode: str) -> CheckReport:
    """multiplicative: f(xy) = f(x)f(y); comultiplicative: Delta f = (f(x)f)Delta."""
    if f.dim != h.dim:
        raise ShapeMismatch("operator dimension differs from carrier")
    report = CheckReport(f"{mode}-map")
    if mode == "multiplicative":
        lhs = apply_op(h.mul, f.mat, 2)
        rhs = apply_op_in(apply_op_in(h.mul, f.mat, 0), f.mat, 1)
        report.require_equal("multiplicativity", lhs, rhs)
    elif mode == "comultiplicative":
        lhs = apply_op_in(h.comul, f.mat, 0)
        rhs = apply_op(apply_op(h.comul, f.mat, 1), f.mat, 2)
        report.require_equal("comultiplicativity", lhs, rhs)
    else:
        raise ValueError("mode must be 'multiplicative' or 'comultiplicative'")
    return report


def twisted_cosystem(c: Coalgebra, Q: LinearOp, g: LinearOp) -> RBCosystem:
    """For comultiplicative g, a Q satisfying the pair identity against
    Q composed with g yields the cosystem (Q, Q o g)."""
    coalg_as_bialg = Bialgebra(
        Algebra(c.ring, c.dim, _zero_mul(c), labels=c.labels),
        c)
    g_report = check_fg_compat(coalg_as_bialg, g, "comultiplicative")
    if not g_report.ok:
        raise PreconditionFailed("twisting map is not comultiplicative",
                                 g_report)
    qg = Q @ g
    res1, _ = _cosystem_residuals(c.comul, Q, qg)
    hypothesis = CheckReport("twisted-pair-identity")
    hypothesis.require_zero("twisted-pair-identity", res1)
    if not hypothesis.ok:
        raise PreconditionFailed("twisted pair identity fails", hypothesis)
    return RBCosystem(c, Q, qg)


def _zero_mul(c: Coalgebra):
    from .linalg import zeros
    return zeros(c.ring, (c.dim,) * 3)


# --- dendriform splitting --------------------------------------------------

def check_dendriform(comul_right, comul_left) -> CheckReport:
    """Three splitting identities whose sum is coassociativity of the total
    coproduct."""
    if comul_right.dims != comul_left.dims:
        raise ShapeMismatch("split coproducts have different shapes")
    if comul_right.rank != 3 or len(set(comul_right.dims)) != 1:
        raise ShapeMismatch("expected square rank-3 coproduct tensors")
    report = CheckReport("dendriform")
    report.require_equal(
        "split-first",
        sweedler_expand(comul_right, comul_right, 1),
        sweedler_expand(comul_right, comul_right, 2)
        + sweedler_expand(comul_right, comul_left, 2))
    report.require_equal(
        "split-middle",
        sweedler_expand(comul_right, comul_left, 1),
        sweedler_expand(comul_left, comul_right, 2))
    report.require_equal(
        "split-last",
        sweedler_expand(comul_left, comul_right, 1)
        + sweedler_expand(comul_left, comul_left, 1),
        sweedler_expand(comul_left, comul_left, 2))
    return report


def dendriform_from_cosystem(cs: RBCosystem):
    """Split coproducts c_1 (x) T(c_2) and Q(c_1) (x) c_2 with their verdict."""
    _require_cosystem(cs)
    comul = cs.carrier.comul
    d_right = apply_op(comul, cs.T.mat, 2)
    d_left = apply_op(comul, cs.Q.mat, 1)
    return d_right, d_left, check_dendriform(d_right, d_left)
