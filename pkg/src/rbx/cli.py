"""Command-line front end.

Exit codes: 0 verdict true / construction valid, 1 verdict false or failed
hypothesis, 2 usage error, 3 parse or evaluation error (including checks
that cannot conclude, such as a parameter-dependent rank).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .corpus import _specialize_tensor, specialize_bundle, verify_corpus
from .errors import (
    CorpusIntegrityError, DivisionByZero, MissingCounit, MissingUnit,
    ParameterDependentRank, ParseError, PreconditionFailed, RbxError,
)
from .registry import REGISTRY, MissingInput, checker_names, run_checker
from .rota_baxter import (
    RBCosystem, bullet_coproduct, star_coproduct, weight_to_cosystems,
    weight_to_systems,
)
from .structfile import StructureBundle, load_structure, save_structure
from .structures import BilinearForm, Coalgebra, LinearOp
from .yang_baxter import CYBP, cosystem_from_cybp, dhat, dual_inf_bialgebras

OP_FLAGS = ("R", "S", "Q", "T", "F")
FORM_FLAGS = ("sigma", "tau")

USAGE_EXIT = 2
PARSE_EXIT = 3


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _parse_set(text):
    values = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise CliError(f"bad --set item {piece!r} (expected name=rational)",
                           USAGE_EXIT)
        name, _, raw = piece.partition("=")
        try:
            values[name.strip()] = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as err:
            raise CliError(f"bad rational {raw!r}: {err}", PARSE_EXIT)
    return values


def _load(path):
    try:
        return load_structure(path)
    except FileNotFoundError as err:
        raise CliError(str(err), USAGE_EXIT)
    except (CorpusIntegrityError, ParseError) as err:
        raise CliError(str(err), PARSE_EXIT)


def _collect_roles(args, bundle, spec):
    ops = {}
    generic = list(args.op or [])
    for role in spec.ops:
        name = getattr(args, role, None)
        if name is None and generic:
            name = generic.pop(0)
        if name is None:
            raise CliError(f"checker {spec.name!r} needs operator --{role}",
                           USAGE_EXIT)
        if name not in bundle.operators:
            raise CliError(f"operator {name!r} not found in file", USAGE_EXIT)
        ops[role] = bundle.operators[name]
    forms = {}
    generic_forms = list(args.form or [])
    for role in spec.forms:
        name = getattr(args, role, None)
        if name is None and generic_forms:
            name = generic_forms.pop(0)
        if name is None:
            raise CliError(f"checker {spec.name!r} needs form --{role}",
                           USAGE_EXIT)
        if name not in bundle.forms:
            raise CliError(f"form {name!r} not found in file", USAGE_EXIT)
        forms[role] = bundle.forms[name]
    weights = {}
    for role in spec.weights:
        value = getattr(args, role.replace("-", "_"), None)
        if value is None:
            raise CliError(f"checker {spec.name!r} needs --{role}", USAGE_EXIT)
        weights[role] = value
    return ops, forms, weights


def _specialize_inputs(bundle, ops, forms, weights, assignment):
    missing = [p for p in bundle.ring.params if p not in assignment]
    if missing:
        raise CliError("missing --set values for: " + ", ".join(missing),
                       USAGE_EXIT)
    pruned = StructureBundle(
        ring=bundle.ring, dimension=bundle.dimension, basis=bundle.basis,
        algebra=bundle.algebra, coalgebra=bundle.coalgebra,
        operators={}, forms={}, meta=bundle.meta, name=bundle.name)
    try:
        special = specialize_bundle(pruned, assignment)
        new_ops = {
            role: LinearOp(_specialize_tensor(op.mat, assignment,
                                              special.ring))
            for role, op in ops.items()
        }
        new_forms = {
            role: BilinearForm(_specialize_tensor(form.mat, assignment,
                                                  special.ring))
            for role, form in forms.items()
        }
        new_weights = {}
        for role, expr in weights.items():
            value = bundle.ring.scalar(expr).substitute(assignment)
            new_weights[role] = value.const_value()
    except (DivisionByZero, ValueError, ParseError) as err:
        raise CliError(f"specialization failed: {err}", PARSE_EXIT)
    return special, new_ops, new_forms, new_weights


def cmd_check(args):
    bundle = _load(args.file)
    if args.checker not in REGISTRY:
        raise CliError(f"unknown checker {args.checker!r}; available: "
                       + ", ".join(checker_names()), USAGE_EXIT)
    spec = REGISTRY[args.checker]
    ops, forms, weights = _collect_roles(args, bundle, spec)
    if args.set:
        assignment = _parse_set(args.set)
        bundle, ops, forms, weights = _specialize_inputs(
            bundle, ops, forms, weights, assignment)
    try:
        report = run_checker(args.checker, bundle, ops, forms, weights)
    except MissingInput as err:
        raise CliError(str(err), USAGE_EXIT)
    except (MissingCounit, MissingUnit, ParameterDependentRank,
            ParseError) as err:
        raise CliError(f"check could not conclude: {err}", PARSE_EXIT)
    except PreconditionFailed as err:
        print(f"CHECK {args.checker} {args.file} FAIL")
        print(f"PRECONDITION {err}")
        if err.report is not None:
            for line in err.report.lines(indent=1):
                print(line)
        return 1
    verdict = "PASS" if report.ok else "FAIL"
    print(f"CHECK {args.checker} {args.file} {verdict}")
    for failure in report.all_failures():
        print(f"RESIDUAL {failure}")
    for note in report.notes:
        print(f"NOTE {note}")
    return 0 if report.ok else 1


CONSTRUCTIONS = {}


def _construction(name):
    def wrap(fn):
        CONSTRUCTIONS[name] = fn
        return fn
    return wrap


def _need_op(bundle, name, flag):
    if name is None:
        raise CliError(f"construction needs --{flag}", USAGE_EXIT)
    if name not in bundle.operators:
        raise CliError(f"operator {name!r} not found in file", USAGE_EXIT)
    return bundle.operators[name]


def _need_coalgebra(bundle):
    if bundle.coalgebra is None:
        raise CliError("input file has no comultiplication", USAGE_EXIT)
    return bundle.coalgebra


def _need_algebra(bundle):
    if bundle.algebra is None:
        raise CliError("input file has no multiplication", USAGE_EXIT)
    return bundle.algebra


@_construction("star-coproduct")
def _construct_star(bundle, args):
    cs = RBCosystem(_need_coalgebra(bundle),
                    _need_op(bundle, args.Q, "Q"), _need_op(bundle, args.T, "T"))
    coalg = star_coproduct(cs)
    return StructureBundle(ring=bundle.ring, dimension=bundle.dimension,
                           basis=bundle.basis, coalgebra=coalg,
                           name="star-coproduct"), "coassociativity"


@_construction("bullet-coproduct")
def _construct_bullet(bundle, args):
    cs = RBCosystem(_need_coalgebra(bundle),
                    _need_op(bundle, args.Q, "Q"), _need_op(bundle, args.T, "T"))
    tensor, verdict = bullet_coproduct(cs)
    out = StructureBundle(ring=bundle.ring, dimension=bundle.dimension,
                          basis=bundle.basis,
                          coalgebra=Coalgebra(bundle.ring, bundle.dimension,
                                              tensor, labels=bundle.basis),
                          name="bullet-coproduct")
    return out, "pre-lie"


@_construction("weight-cosystems")
def _construct_weight_cosystems(bundle, args):
    if args.weight is None:
        raise CliError("construction needs --weight", USAGE_EXIT)
    first, second = weight_to_cosystems(
        _need_coalgebra(bundle), _need_op(bundle, args.Q, "Q"), args.weight)
    out = StructureBundle(
        ring=bundle.ring, dimension=bundle.dimension, basis=bundle.basis,
        coalgebra=bundle.coalgebra,
        operators={"Q": first.Q, "T": first.T},
        name="weight-cosystems")
    return out, "rb-cosystem"


@_construction("weight-systems")
def _construct_weight_systems(bundle, args):
    if args.weight is None:
        raise CliError("construction needs --weight", USAGE_EXIT)
    first, second = weight_to_systems(
        _need_algebra(bundle), _need_op(bundle, args.R, "R"), args.weight)
    out = StructureBundle(
        ring=bundle.ring, dimension=bundle.dimension, basis=bundle.basis,
        algebra=bundle.algebra,
        operators={"R": first.R, "S": first.S},
        name="weight-systems")
    return out, "rb-system"


@_construction("cosystem-from-cybp")
def _construct_cosystem(bundle, args):
    coalg = _need_coalgebra(bundle)
    if args.sigma is None or args.tau is None:
        raise CliError("construction needs --sigma and --tau", USAGE_EXIT)
    for name in (args.sigma, args.tau):
        if name not in bundle.forms:
            raise CliError(f"form {name!r} not found in file", USAGE_EXIT)
    pair = CYBP(coalg, bundle.forms[args.sigma], bundle.forms[args.tau])
    cs = cosystem_from_cybp(pair)
    out = StructureBundle(
        ring=bundle.ring, dimension=bundle.dimension, basis=bundle.basis,
        coalgebra=coalg, operators={"Q": cs.Q, "T": cs.T},
        name="cosystem-from-cybp")
    return out, "rb-cosystem"


@_construction("dual-infinitesimal")
def _construct_dual(bundle, args):
    coalg = _need_coalgebra(bundle)
    alg = _need_algebra(bundle)
    (cp, cp_mul), (pc, pc_mul) = dual_inf_bialgebras(coalg, alg.mul)
    picked = (pc, pc_mul) if args.side == "left" else (cp, cp_mul)
    from .structures import Algebra
    out = StructureBundle(
        ring=bundle.ring, dimension=bundle.dimension,
        basis=tuple(f"{b}*" for b in bundle.basis),
        algebra=Algebra(bundle.ring, bundle.dimension, picked[1]),
        coalgebra=picked[0],
        name="dual-infinitesimal")
    return out, "coassociativity"


@_construction("dhat")
def _construct_dhat(bundle, args):
    coalg = _need_coalgebra(bundle)
    alg = _need_algebra(bundle)
    big, sigma, literal, verdict = dhat(coalg, alg.mul)
    from .structures import Algebra
    labels = tuple(f"{b}.{d}" for b in bundle.basis
                   for d in (f"{x}*" for x in bundle.basis))
    out = StructureBundle(
        ring=bundle.ring, dimension=big.dim, basis=labels,
        algebra=Algebra(bundle.ring, big.dim, literal),
        coalgebra=Coalgebra(bundle.ring, big.dim, big.comul, labels=labels),
        forms={"sigma": sigma},
        name="dhat")
    return out, "coassociativity"


def cmd_construct(args):
    bundle = _load(args.file)
    if args.construction not in CONSTRUCTIONS:
        raise CliError(
            f"unknown construction {args.construction!r}; available: "
            + ", ".join(sorted(CONSTRUCTIONS)), USAGE_EXIT)
    try:
        out, validation = CONSTRUCTIONS[args.construction](bundle, args)
    except PreconditionFailed as err:
        print(f"CONSTRUCT {args.construction} FAIL")
        print(f"PRECONDITION {err}")
        if err.report is not None:
            for line in err.report.lines(indent=1):
                print(line)
        return 1
    save_structure(out, args.output)
    reloaded = _load(args.output)
    line = f"CONSTRUCT {args.construction} -> {args.output}"
    if validation == "rb-cosystem" and "Q" in reloaded.operators:
        report = run_checker("rb-cosystem", reloaded,
                             {"Q": reloaded.operators["Q"],
                              "T": reloaded.operators["T"]}, {}, {})
    elif validation == "rb-system" and "R" in reloaded.operators:
        report = run_checker("rb-system", reloaded,
                             {"R": reloaded.operators["R"],
                              "S": reloaded.operators["S"]}, {}, {})
    elif validation == "pre-lie":
        report = run_checker("pre-lie", reloaded, {}, {}, {})
    else:
        report = run_checker("coassociativity", reloaded, {}, {}, {})
    print(f"{line} {'OK' if report.ok else 'INVALID'}")
    return 0 if report.ok else 1


def cmd_corpus(args):
    if args.action != "verify":
        raise CliError("corpus supports the 'verify' action", USAGE_EXIT)
    try:
        summary = verify_corpus(pattern=args.filter,
                                directory=args.corpus_dir,
                                negative_controls=not args.no_controls,
                                spot_points=args.spot_points)
    except CorpusIntegrityError as err:
        raise CliError(str(err), PARSE_EXIT)
    for line in summary.lines():
        print(line)
    return 0 if summary.ok else 1


def cmd_checkers(args):
    for name in checker_names():
        spec = REGISTRY[name]
        parts = [name, f"[{spec.needs}]"]
        if spec.ops:
            parts.append("ops: " + ", ".join(spec.ops))
        if spec.forms:
            parts.append("forms: " + ", ".join(spec.forms))
        if spec.weights:
            parts.append("weights: " + ", ".join(spec.weights))
        print("  ".join(parts))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rbx",
        description="Exact verification of Rota-Baxter and Yang-Baxter "
                    "style structures given by structure constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run a named checker on a file")
    check.add_argument("checker")
    check.add_argument("file")
    for flag in OP_FLAGS:
        check.add_argument(f"--{flag}", dest=flag, metavar="NAME")
    for flag in FORM_FLAGS:
        check.add_argument(f"--{flag}", dest=flag, metavar="NAME")
    check.add_argument("--op", action="append", metavar="NAME",
                       help="fill operator roles positionally")
    check.add_argument("--form", action="append", metavar="NAME",
                       help="fill form roles positionally")
    check.add_argument("--weight", metavar="EXPR")
    check.add_argument("--coweight", metavar="EXPR")
    check.add_argument("--set", metavar="NAME=RAT,...",
                       help="evaluate at rational parameter values first")
    check.set_defaults(fn=cmd_check)

    construct = sub.add_parser("construct",
                               help="run a construction, write a new file")
    construct.add_argument("construction")
    construct.add_argument("file")
    construct.add_argument("-o", "--output", required=True)
    for flag in OP_FLAGS:
        construct.add_argument(f"--{flag}", dest=flag, metavar="NAME")
    for flag in FORM_FLAGS:
        construct.add_argument(f"--{flag}", dest=flag, metavar="NAME")
    construct.add_argument("--weight", metavar="EXPR")
    construct.add_argument("--side", choices=("left", "right"),
                           default="left")
    construct.set_defaults(fn=cmd_construct)

    corpus = sub.add_parser("corpus", help="verify the bundled corpus")
    corpus.add_argument("action", choices=("verify",))
    corpus.add_argument("--filter", default="*", metavar="GLOB")
    corpus.add_argument("--corpus-dir", default=None)
    corpus.add_argument("--no-controls", action="store_true")
    corpus.add_argument("--spot-points", type=int, default=0)
    corpus.set_defaults(fn=cmd_corpus)

    names = sub.add_parser("checkers", help="list available checkers")
    names.set_defaults(fn=cmd_checkers)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except RbxError as err:
        print(f"error: {err}", file=sys.stderr)
        return PARSE_EXIT


if __name__ == "__main__":
    sys.exit(main())
