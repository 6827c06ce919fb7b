"""Named checkers over structure bundles, shared by the CLI and the corpus.

Each checker declares which operator roles, form roles and weights it needs;
``run_checker`` resolves those against a bundle and returns a CheckReport.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RbxError
from .report import CheckReport, Failure
from .rota_baxter import (
    RBBisystem, check_colinearity, check_dendriform, check_fg_compat,
    check_pre_lie, check_rb_algebra, check_rb_bialgebra, check_rb_bisystem,
    check_rb_coalgebra, check_rb_cosystem, check_rb_system,
    orthogonality_criterion,
)
from .structures import (
    Bialgebra, check_associativity, check_bialgebra, check_coassociativity,
    check_nondegenerate_coalgebra,
)
from .yang_baxter import (
    CYBP, check_aybe, check_coqt, check_cybp, check_inf_coqt,
)
from .linalg import apply_op


@dataclass(frozen=True)
class CheckerSpec:
    name: str
    needs: str                      # algebra | coalgebra | bialgebra
    ops: tuple = ()
    forms: tuple = ()
    weights: tuple = ()
    run: object = None


REGISTRY = {}


def _register(name, needs, ops=(), forms=(), weights=()):
    def wrap(fn):
        REGISTRY[name] = CheckerSpec(name, needs, tuple(ops), tuple(forms),
                                     tuple(weights), fn)
        return fn
    return wrap


class MissingInput(RbxError):
    """The bundle or invocation lacks a structure/operator the checker needs."""


def _algebra(bundle):
    if bundle.algebra is None:
        raise MissingInput("this check needs a multiplication")
    return bundle.algebra


def _coalgebra(bundle):
    if bundle.coalgebra is None:
        raise MissingInput("this check needs a comultiplication")
    return bundle.coalgebra


def _bialgebra(bundle):
    h = bundle.bialgebra
    if h is None:
        raise MissingInput("this check needs both structures")
    return h


@_register("associativity", "algebra")
def _run_assoc(bundle, ops, forms, weights):
    return check_associativity(_algebra(bundle))


@_register("coassociativity", "coalgebra")
def _run_coassoc(bundle, ops, forms, weights):
    return check_coassociativity(_coalgebra(bundle))


@_register("bialgebra", "bialgebra")
def _run_bialgebra(bundle, ops, forms, weights):
    return check_bialgebra(_bialgebra(bundle))


@_register("nondegenerate", "coalgebra")
def _run_nondegenerate(bundle, ops, forms, weights):
    report = CheckReport("nondegenerate")
    degenerate = not check_nondegenerate_coalgebra(_coalgebra(bundle))
    if degenerate:
        report.failures.append(
            Failure("nondegeneracy", (), bundle.ring.one))
    return report


@_register("rb-algebra", "algebra", ops=("R",), weights=("weight",))
def _run_rb_algebra(bundle, ops, forms, weights):
    return check_rb_algebra(_algebra(bundle), ops["R"], weights["weight"])


@_register("rb-coalgebra", "coalgebra", ops=("Q",), weights=("weight",))
def _run_rb_coalgebra(bundle, ops, forms, weights):
    return check_rb_coalgebra(_coalgebra(bundle), ops["Q"], weights["weight"])


@_register("rb-bialgebra", "bialgebra", ops=("R", "Q"),
           weights=("weight", "coweight"))
def _run_rb_bialgebra(bundle, ops, forms, weights):
    return check_rb_bialgebra(_bialgebra(bundle), ops["R"], ops["Q"],
                              weights["weight"], weights["coweight"])


@_register("rb-system", "algebra", ops=("R", "S"))
def _run_rb_system(bundle, ops, forms, weights):
    return check_rb_system(_algebra(bundle), ops["R"], ops["S"])


@_register("rb-cosystem", "coalgebra", ops=("Q", "T"))
def _run_rb_cosystem(bundle, ops, forms, weights):
    return check_rb_cosystem(_coalgebra(bundle), ops["Q"], ops["T"])


@_register("rb-bisystem", "bialgebra", ops=("R", "S", "Q", "T"))
def _run_rb_bisystem(bundle, ops, forms, weights):
    return check_rb_bisystem(RBBisystem(_bialgebra(bundle), ops["R"],
                                        ops["S"], ops["Q"], ops["T"]))


@_register("pre-lie", "coalgebra")
def _run_pre_lie(bundle, ops, forms, weights):
    return check_pre_lie(_coalgebra(bundle).comul)


@_register("dendriform", "coalgebra", ops=("Q", "T"))
def _run_dendriform(bundle, ops, forms, weights):
    coalg = _coalgebra(bundle)
    d_right = apply_op(coalg.comul, ops["T"].mat, 2)
    d_left = apply_op(coalg.comul, ops["Q"].mat, 1)
    return check_dendriform(d_right, d_left)


@_register("colinear-left", "coalgebra", ops=("Q",))
def _run_colinear_left(bundle, ops, forms, weights):
    return check_colinearity(_coalgebra(bundle), ops["Q"], "left")


@_register("colinear-right", "coalgebra", ops=("T",))
def _run_colinear_right(bundle, ops, forms, weights):
    return check_colinearity(_coalgebra(bundle), ops["T"], "right")


@_register("orthogonality", "coalgebra", ops=("Q", "T"))
def _run_orthogonality(bundle, ops, forms, weights):
    return orthogonality_criterion(_coalgebra(bundle), ops["Q"], ops["T"])


@_register("multiplicative", "algebra", ops=("F",))
def _run_multiplicative(bundle, ops, forms, weights):
    alg = _algebra(bundle)
    coalg = bundle.coalgebra
    if coalg is None:
        from .linalg import zeros
        from .structures import Coalgebra
        coalg = Coalgebra(bundle.ring, bundle.dimension,
                          zeros(bundle.ring, (bundle.dimension,) * 3))
    return check_fg_compat(Bialgebra(alg, coalg), ops["F"], "multiplicative")


@_register("comultiplicative", "coalgebra", ops=("F",))
def _run_comultiplicative(bundle, ops, forms, weights):
    coalg = _coalgebra(bundle)
    alg = bundle.algebra
    if alg is None:
        from .linalg import zeros
        from .structures import Algebra
        alg = Algebra(bundle.ring, bundle.dimension,
                      zeros(bundle.ring, (bundle.dimension,) * 3))
    return check_fg_compat(Bialgebra(alg, coalg), ops["F"],
                           "comultiplicative")


@_register("cybp", "coalgebra", forms=("sigma", "tau"))
def _run_cybp(bundle, ops, forms, weights):
    return check_cybp(CYBP(_coalgebra(bundle), forms["sigma"], forms["tau"]))


@_register("aybe", "coalgebra", forms=("sigma",))
def _run_aybe(bundle, ops, forms, weights):
    return check_aybe(_coalgebra(bundle), forms["sigma"])


@_register("coqt", "coalgebra", forms=("sigma", "tau"))
def _run_coqt(bundle, ops, forms, weights):
    return check_coqt(_coalgebra(bundle), forms["sigma"], forms["tau"])


@_register("coqt-counital", "coalgebra", forms=("sigma",))
def _run_coqt_counital(bundle, ops, forms, weights):
    return check_coqt(_coalgebra(bundle), forms["sigma"], counital=True)


@_register("inf-coqt", "coalgebra", forms=("sigma",))
def _run_inf_coqt(bundle, ops, forms, weights):
    return check_inf_coqt(_coalgebra(bundle), forms["sigma"])


def checker_names():
    return sorted(REGISTRY)


def run_checker(name, bundle, ops=None, forms=None, weights=None):
    """Resolve inputs by role and run the named checker."""
    try:
        spec = REGISTRY[name]
    except KeyError:
        raise MissingInput(f"unknown checker {name!r}; available: "
                           + ", ".join(checker_names())) from None
    ops = ops or {}
    forms = forms or {}
    weights = weights or {}
    for role in spec.ops:
        if role not in ops:
            raise MissingInput(f"checker {name!r} needs operator --{role}")
    for role in spec.forms:
        if role not in forms:
            raise MissingInput(f"checker {name!r} needs form --{role}")
    resolved_weights = {}
    for role in spec.weights:
        if role not in weights:
            raise MissingInput(f"checker {name!r} needs --{role}")
        resolved_weights[role] = bundle.ring.scalar(weights[role])
    return spec.run(bundle, ops, forms, resolved_weights)
