"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines.  Criterion 6 carries one documented red clause (see the strict xfail
and the decisions ledger); every other criterion is green.
"""

import itertools
import random
import time

import pytest

from rbx.corpus import corpus_dir, load_corpus, verify_corpus
from rbx.linalg import apply_covec, contract, zeros
from rbx.rota_baxter import (
    RBBisystem, RBCosystem, bullet_coproduct, check_dendriform,
    check_rb_bisystem, check_rb_cosystem, check_rb_system, copseudotwistor,
    dendriform_from_cosystem, star_coproduct, weight_to_cosystems,
    weight_to_systems,
)
from rbx.structfile import load_structure
from rbx.structures import (
    BilinearForm, LinearOp, assoc_residual, check_coassociativity,
    check_nondegenerate_coalgebra,
)
from rbx.yang_baxter import (
    CYBP, canonical_double, check_aybe, check_coqt, check_cybp,
    check_double_coalgebra, check_inf_coqt, check_infinitesimal, dhat,
    dual_inf_bialgebras, eq_associativity_transfer_residual, principal_maps,
    tensor_coalgebra, zeta_xi_maps,
)

from conftest import make_dim2, make_t2


@pytest.fixture(scope="module")
def corpus_entries():
    return load_corpus()


@pytest.fixture(scope="module")
def verification():
    start = time.monotonic()
    summary = verify_corpus()
    elapsed = time.monotonic() - start
    return summary, elapsed


@pytest.fixture(scope="module")
def ex59():
    bundle = load_structure(corpus_dir() / "ex5_9.json")
    sigma = bundle.forms["sigma"]
    _, _, mul = principal_maps(bundle.coalgebra, sigma, sigma)
    return bundle, sigma, mul


def _passing_cosystems(entries, summary):
    out = []
    for entry in entries:
        if entry.checker == "rb-cosystem" \
                and summary.statuses[entry.id] == "PASS":
            coalg = entry.bundle.coalgebra
            out.append((entry.id,
                        RBCosystem(coalg,
                                   entry.bundle.operators[entry.ops["Q"]],
                                   entry.bundle.operators[entry.ops["T"]])))
        if entry.checker == "rb-bisystem" \
                and summary.statuses[entry.id] in ("PASS", "FLAGGED"):
            # the bisystem's cosystem half is valid even for the flagged
            # entry (only the system half is defective)
            coalg = entry.bundle.coalgebra
            cs = RBCosystem(coalg,
                            entry.bundle.operators[entry.ops["Q"]],
                            entry.bundle.operators[entry.ops["T"]])
            if check_rb_cosystem(coalg, cs.Q, cs.T).ok:
                out.append((entry.id, cs))
    return out


def test_criterion_1_corpus_reproduction(verification):
    summary, elapsed = verification
    assert summary.counts["fail"] == 0
    golden = (corpus_dir() / "golden_summary.txt").read_text()
    assert "\n".join(summary.lines()) + "\n" == golden
    flagged = [i for i, s in summary.statuses.items() if s == "FLAGGED"]
    assert len(flagged) == 24
    assert elapsed < 60.0
    print(f"\ncriterion 1 corpus reproduction: PASS "
          f"({summary.counts['pass']} pass, {len(flagged)} documented "
          f"flagged, 0 fail, {elapsed:.1f}s)")


def test_criterion_2_negative_controls(verification):
    summary, _ = verification
    mutations = flipped = free = unexplained = 0
    for line in summary.control_lines:
        fields = dict(part.split("=") for part in line.split()[2:])
        mutations += int(fields["mutations"])
        flipped += int(fields["flipped"])
        free += int(fields["free"])
        unexplained += int(fields["unexplained"])
    assert mutations > 0
    rate = flipped / mutations
    assert rate >= 0.95
    assert unexplained == 0
    assert flipped + free == mutations
    print(f"criterion 2 negative controls: PASS "
          f"({flipped}/{mutations} flipped = {rate:.1%}, "
          f"{free} proven free, 0 unexplained)")


def test_criterion_3_construction_coherence(corpus_entries, verification):
    summary, _ = verification
    cosystems = _passing_cosystems(corpus_entries, summary)
    assert len(cosystems) >= 15
    for entry_id, cs in cosystems:
        star = star_coproduct(cs)
        assert check_coassociativity(star).ok, entry_id
        bullet, pre_lie = bullet_coproduct(cs)
        assert pre_lie.ok, entry_id
        _, _, twistor = copseudotwistor(cs)
        assert twistor.ok, entry_id
        d_right, d_left, dendriform = dendriform_from_cosystem(cs)
        assert dendriform.ok, entry_id
        assert d_right + d_left == star.comul, entry_id
    print(f"criterion 3 construction coherence: PASS "
          f"({len(cosystems)} cosystems x 4 constructions, exact)")


def test_criterion_4_weight_degenerations(corpus_entries, verification):
    summary, _ = verification
    excluded = {"sec6.dim4.R.5"}
    systems = {}
    cosystems = {}
    checked = 0
    for entry in corpus_entries:
        if summary.statuses[entry.id] != "PASS" or entry.id in excluded:
            continue
        bundle = entry.bundle
        if entry.checker == "rb-algebra":
            weight = bundle.ring.scalar(entry.weights["weight"])
            first, second = weight_to_systems(
                bundle.algebra, bundle.operators[entry.ops["R"]], weight)
            for sys in (first, second):
                assert check_rb_system(sys.carrier, sys.R, sys.S).ok, entry.id
            systems.setdefault(bundle.name, []).append((first, second))
            checked += 1
        elif entry.checker == "rb-coalgebra":
            weight = bundle.ring.scalar(entry.weights["weight"])
            first, second = weight_to_cosystems(
                bundle.coalgebra, bundle.operators[entry.ops["Q"]], weight)
            for cos in (first, second):
                assert check_rb_cosystem(cos.carrier, cos.Q, cos.T).ok, \
                    entry.id
            cosystems.setdefault(bundle.name, []).append((first, second))
            checked += 1
        elif entry.checker == "rb-bialgebra" and entry.id.count(".") == 3 \
                and ".RR." in entry.id:
            # weight pairs sharing one operator degenerate on both sides
            weight = bundle.ring.scalar(entry.weights["weight"])
            op = bundle.operators[entry.ops["R"]]
            for sys in weight_to_systems(bundle.algebra, op, weight):
                assert check_rb_system(sys.carrier, sys.R, sys.S).ok, entry.id
            for cos in weight_to_cosystems(bundle.coalgebra, op, weight):
                assert check_rb_cosystem(cos.carrier, cos.Q, cos.T).ok, \
                    entry.id
            checked += 1
    # every derived system/cosystem combination is a valid bisystem; verify
    # the first full quadruple per family explicitly
    for family in systems:
        if family not in cosystems:
            continue
        bundle = next(e.bundle for e in corpus_entries
                      if e.bundle.name == family)
        h = bundle.bialgebra
        sys_pair = systems[family][0]
        cos_pair = cosystems[family][0]
        for sys, cos in itertools.product(sys_pair, cos_pair):
            assert check_rb_bisystem(
                RBBisystem(h, sys.R, sys.S, cos.Q, cos.T)).ok
    assert checked >= 60
    print(f"criterion 4 weight degenerations: PASS "
          f"({checked} weight entries, both shifted pairs each; "
          f"{sorted(excluded)} excluded as documented print defects)")


def _random_form(ring, n, rng, density=0.4):
    mat = zeros(ring, (n, n))
    for i, j in itertools.product(range(n), repeat=2):
        if rng.random() < density:
            mat[i, j] = ring.const(rng.randint(-2, 2))
    return BilinearForm(mat)


def _alpha_pair(h, k):
    from conftest import covec
    ring = h.ring
    alpha = covec(ring, [1, 0, 2, -1])
    eps = h.counit
    sigma = contract(eps, alpha, []).scale(ring.const(k)) \
        + contract(alpha, eps, []).scale(ring.const(1 - k))
    tau = sigma - contract(eps, eps, [])
    return BilinearForm(sigma), BilinearForm(tau)


def test_criterion_5_biconditional_oracles():
    rng = random.Random(20260810)
    t2 = make_t2()
    dim2 = make_dim2()
    coqt_true = coqt_false = 0
    inf_true = inf_false = 0
    for h in (t2, dim2):
        n = h.dim
        pool = [( _random_form(h.ring, n, rng), _random_form(h.ring, n, rng))
                for _ in range(25)]
        if n == 4:
            pool += [_alpha_pair(h, 0), _alpha_pair(h, 1)]
            zero = BilinearForm.zero(h.ring, n)
            pool.append((zero, zero))
        for sigma, tau in pool:
            lhs = check_coqt(h.coalg, sigma, tau).ok
            rhs = check_cybp(CYBP(h.coalg, sigma, tau)).ok
            assert lhs == rhs
            coqt_true += lhs
            coqt_false += not lhs
        for sigma, _ in pool:
            lhs = check_inf_coqt(h.coalg, sigma).ok
            rhs = check_aybe(h.coalg, sigma).ok
            assert lhs == rhs
            inf_true += lhs
            inf_false += not lhs
        # associativity of the principal product tracks the transfer residual
        for sigma, tau in pool[:25]:
            _, _, mul = principal_maps(h.coalg, sigma, tau)
            transfer = eq_associativity_transfer_residual(h.coalg, sigma, tau)
            assert assoc_residual(mul) == transfer
    assert coqt_true >= 1 and coqt_false >= 1
    assert inf_true >= 1 and inf_false >= 1

    # splitting criterion on the non-degenerate 4-dim carrier
    assert check_nondegenerate_coalgebra(t2.coalg)
    ring, n = t2.ring, 4
    dendriform_agreements = 0
    true_branch = 0
    op_pool = []
    for _ in range(50):
        mats = []
        for _ in range(2):
            mat = zeros(ring, (n, n))
            for i, j in itertools.product(range(n), repeat=2):
                if rng.random() < 0.3:
                    mat[i, j] = ring.const(rng.randint(-2, 2))
            mats.append(LinearOp(mat))
        op_pool.append(tuple(mats))
    from conftest import op_from_images
    op_pool.append((op_from_images(ring, [{0: "q1"}, {1: "-q2"}, {},
                                          {3: "-q2"}]),
                    op_from_images(ring, [{}, {}, {2: "q2"}, {}])))
    op_pool.append((LinearOp.zero(ring, n), LinearOp.zero(ring, n)))
    op_pool.append((LinearOp.identity(ring, n), LinearOp.zero(ring, n)))
    for q, t in op_pool:
        from rbx.linalg import apply_op
        d_right = apply_op(t2.comul, t.mat, 2)
        d_left = apply_op(t2.comul, q.mat, 1)
        lhs = check_dendriform(d_right, d_left).ok
        rhs = check_rb_cosystem(t2.coalg, q, t).ok
        assert lhs == rhs
        dendriform_agreements += 1
        true_branch += lhs
    assert dendriform_agreements >= 50 and true_branch >= 1
    total_pool = coqt_true + coqt_false
    print(f"criterion 5 biconditional oracles: PASS "
          f"({total_pool} form pairs, {dendriform_agreements} operator "
          f"pairs, exact agreement both directions)")


def test_criterion_6_dhat_pipeline_computed(ex59):
    bundle, sigma, mul = ex59
    coalg = bundle.coalgebra
    # hypothesis first: the functional annihilates both coproduct legs
    tau0 = zeros(bundle.ring, (4,))
    tau0[(2,)] = bundle.ring.one
    hypothesis = apply_covec(apply_covec(coalg.comul, tau0, 1), tau0, 1)
    assert hypothesis.is_zero
    assert check_aybe(coalg, sigma).ok
    assert check_infinitesimal(coalg, mul).ok
    start = time.monotonic()
    big, big_sigma, literal, verdict = dhat(coalg, mul)
    elapsed = time.monotonic() - start
    assert big.dim == 16
    by_name = {child.checker: child for child in verdict.children}
    assert by_name["coassociativity"].ok
    assert by_name["literal-equals-principal"].ok
    assert elapsed < 10.0
    cayb = "PASS" if by_name["aybe"].ok else "FAIL"
    print(f"criterion 6 doubled-coalgebra pipeline: coassociativity PASS, "
          f"product-formula agreement PASS, Yang-Baxter clause {cayb} "
          f"(documented source defect, see ledger), {elapsed:.1f}s")


@pytest.mark.xfail(strict=True,
                   reason="the printed double-construction Yang-Baxter claim "
                          "is false; structural residual "
                          "2<h,c><g,z1><f,d z2> (decisions ledger)")
def test_criterion_6_dhat_yang_baxter_clause(ex59):
    bundle, sigma, mul = ex59
    _, big_sigma, _, verdict = dhat(bundle.coalgebra, mul)
    assert verdict.ok


def test_criterion_7_dual_morphism_suite(ex59):
    bundle, sigma, mul = ex59
    coalg = bundle.coalgebra
    (cp, cp_mul), (pc, pc_mul) = dual_inf_bialgebras(coalg, mul)
    assert check_infinitesimal(cp, cp_mul).ok
    assert check_infinitesimal(pc, pc_mul).ok
    zeta, xi, morphisms = zeta_xi_maps(coalg, mul, sigma)
    assert morphisms.ok
    double = canonical_double(coalg, mul)
    assert check_double_coalgebra(double).ok
    big = tensor_coalgebra(double)
    assert big.dim == 16
    assert check_coassociativity(big).ok
    print("criterion 7 dual/morphism suite: PASS (duals, evaluation "
          "morphisms, canonical double, tensor coalgebra; exact)")


def test_criterion_8_specialization_soundness():
    start = time.monotonic()
    summary = verify_corpus(negative_controls=False, spot_points=5)
    elapsed = time.monotonic() - start
    assert summary.counts["fail"] == 0
    assert summary.ok
    print(f"criterion 8 specialization soundness: PASS "
          f"({summary.counts['pass']} passing entries x 5 rational points, "
          f"{elapsed:.1f}s)")
