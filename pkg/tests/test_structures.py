import itertools
import random

import pytest

from rbx.errors import MissingUnit, ParameterDependentRank
from rbx.linalg import identity, zeros
from rbx.scalar import ParamRing
from rbx.structures import (
    Algebra, Bialgebra, Coalgebra, Comodule, LinearOp, assoc_residual,
    check_algebra_map, check_associativity, check_bialgebra,
    check_coalgebra_map, check_coassociativity, check_comodule,
    check_nondegenerate_coalgebra, check_unit_laws, coassoc_residual,
    convolution,
)

from conftest import comul_from_terms, mul_from_table, op_from_images


class TestAssociativity:
    def test_dim2(self, dim2):
        assert check_associativity(dim2.alg).ok

    def test_ex316(self, ex316):
        assert check_associativity(ex316.alg).ok

    def test_idempotent_to_unit_mutation_stays_associative(self, dim2):
        # replacing u2*u2 = u2 by u1 yields the order-2 group algebra,
        # which is still associative
        ring = dim2.ring
        mutated = mul_from_table(ring, [
            [{0: 1}, {1: 1}],
            [{1: 1}, {0: 1}],
        ])
        assert check_associativity(Algebra(ring, 2, mutated)).ok

    def test_broken_table_fails(self, dim2):
        ring = dim2.ring
        mutated = mul_from_table(ring, [
            [{0: 1}, {1: 1}],
            [{}, {1: 1}],      # u2 * u1 = 0 kills associativity
        ])
        report = check_associativity(Algebra(ring, 2, mutated))
        assert not report.ok
        failing = {f.index for f in report.failures}
        assert (1, 0, 1, 1) in failing


class TestCoassociativity:
    def test_t2_both_variants(self, t2, t2_alt):
        assert check_coassociativity(t2.coalg).ok
        assert check_coassociativity(t2_alt.coalg).ok

    def test_grouplike_diagonal(self):
        ring = ParamRing([])
        comul = comul_from_terms(ring, [[(0, 0, 1)], [(1, 1, 1)], [(2, 2, 1)]])
        assert check_coassociativity(Coalgebra(ring, 3, comul)).ok

    def test_mutated_t2_fails(self, t2):
        ring = t2.ring
        comul = comul_from_terms(ring, [
            [(0, 0, 1)],
            [(1, 1, 1)],
            [(2, 2, 1), (0, 1, 1)],   # Delta(u3) = u3(x)u3 + u1(x)u2
            [(3, 1, 1), (0, 3, 1)],
        ])
        report = check_coassociativity(Coalgebra(ring, 4, comul))
        assert not report.ok
        failing = {f.index for f in report.failures}
        assert failing == {(2, 0, 1, 2), (2, 0, 0, 1), (2, 2, 0, 1),
                           (2, 0, 1, 1)}


class TestBialgebra:
    def test_dim3_is_bialgebra(self, dim3):
        assert check_bialgebra(dim3).ok

    def test_t2_is_bialgebra(self, t2, t2_alt):
        assert check_bialgebra(t2).ok
        assert check_bialgebra(t2_alt).ok

    def test_ex316_is_bialgebra(self, ex316):
        assert check_bialgebra(ex316).ok

    def test_mutated_comul_fails(self, t2):
        ring = t2.ring
        comul = comul_from_terms(ring, [
            [(0, 0, 1)],
            [(0, 1, 1)],              # Delta(u2) = u1(x)u2
            [(2, 0, 1), (1, 2, 1)],
            [(3, 1, 1), (0, 3, 1)],
        ])
        broken = Bialgebra(
            t2.alg,
            Coalgebra(ring, 4, comul, counit=t2.counit, labels=t2.labels))
        report = check_bialgebra(broken)
        assert not report.ok
        by_name = {child.checker: child for child in report.children}
        assert not by_name["counit-laws"].ok
        assert not by_name["comul-multiplicative"].ok
        # multiplicativity survives at the (u2, u2) pair even so
        compat_failures = {f.index[:2]
                           for f in by_name["comul-multiplicative"].failures}
        assert (1, 1) not in compat_failures

    def test_missing_unit_raises(self, ex316):
        with pytest.raises(MissingUnit):
            check_unit_laws(ex316.alg)


class TestComodule:
    def test_regular_coaction(self, t2):
        left = Comodule("left", t2.coalg, 4, t2.comul)
        right = Comodule("right", t2.coalg, 4, t2.comul)
        assert check_comodule(left).ok
        assert check_comodule(right).ok

    def test_zero_coaction_fails_counit_law(self, t2):
        zero = Comodule("left", t2.coalg, 4, zeros(t2.ring, (4, 4, 4)))
        report = check_comodule(zero)
        assert not report.ok
        assert any(f.identity == "coaction-counit" for f in report.failures)

    def test_mixed_dimensions(self, dim2):
        # two copies of the regular comodule: coaction on C (+) C
        ring = dim2.ring
        rho = zeros(ring, (4, 2, 4))
        for (i, a, b), value in dim2.comul.nonzero_items():
            rho[i, a, b] = value
            rho[i + 2, a, b + 2] = value
        m = Comodule("left", dim2.coalg, 4, rho)
        assert check_comodule(m).ok


class TestConvolution:
    def test_counit_convolution_idempotent(self, t2):
        eps = t2.counit
        assert convolution(eps, eps, t2) == eps

    def test_id_star_zero(self, t2):
        eye = LinearOp.identity(t2.ring, 4)
        zero = LinearOp.zero(t2.ring, 4)
        assert convolution(eye, zero, t2).is_zero

    def test_counit_star_id_is_id(self, t2):
        eye = LinearOp.identity(t2.ring, 4)
        assert convolution(t2.counit, eye, t2) == eye
        assert convolution(eye, t2.counit, t2) == eye

    def test_convolution_associative_on_operator_pool(self, t2):
        rng = random.Random(11)
        ring = t2.ring
        pool = []
        for _ in range(6):
            mat = zeros(ring, (4, 4))
            for i, j in itertools.product(range(4), repeat=2):
                if rng.random() < 0.4:
                    mat[i, j] = ring.const(rng.randint(-2, 2))
            pool.append(LinearOp(mat))
        for f, g, h in itertools.permutations(pool[:4], 3):
            lhs = convolution(convolution(f, g, t2), h, t2)
            rhs = convolution(f, convolution(g, h, t2), t2)
            assert lhs == rhs


class TestNondegeneracy:
    def test_counital_coalgebras_nondegenerate(self, t2, dim2, dim3):
        assert check_nondegenerate_coalgebra(t2.coalg)
        assert check_nondegenerate_coalgebra(dim2.coalg)
        assert check_nondegenerate_coalgebra(dim3.coalg)

    def test_zero_comultiplication_degenerate(self):
        ring = ParamRing([])
        coalg = Coalgebra(ring, 2, zeros(ring, (2, 2, 2)))
        assert not check_nondegenerate_coalgebra(coalg)

    def test_parameter_dependent_rank_raises(self):
        ring = ParamRing(["t"])
        comul = comul_from_terms(ring, [[(0, 0, "t")]])
        with pytest.raises(ParameterDependentRank):
            check_nondegenerate_coalgebra(Coalgebra(ring, 1, comul))


class TestDualitySmoke:
    def test_dual_of_assoc_residual_is_coassoc_residual(self):
        ring = ParamRing([])
        rng = random.Random(13)
        for _ in range(10):
            mul = zeros(ring, (2, 2, 2))
            for idx in itertools.product(range(2), repeat=3):
                if rng.random() < 0.5:
                    mul[idx] = ring.const(rng.choice([-1, 1]))
            dual_comul = zeros(ring, (2, 2, 2))
            for (j, k, i), value in mul.nonzero_items():
                dual_comul[i, j, k] = value
            lhs = coassoc_residual(dual_comul)
            rhs = assoc_residual(mul).transpose((3, 0, 1, 2))
            assert lhs == rhs


class TestStructureMaps:
    def test_identity_maps(self, dim2):
        eye = identity(dim2.ring, 2)
        assert check_algebra_map(eye, dim2.alg, dim2.alg).ok
        assert check_coalgebra_map(eye, dim2.coalg, dim2.coalg).ok

    def test_swap_is_coalgebra_but_not_algebra_map(self, dim2):
        swap = op_from_images(dim2.ring, [{1: 1}, {0: 1}]).mat
        assert check_coalgebra_map(swap, dim2.coalg, dim2.coalg).ok
        assert not check_algebra_map(swap, dim2.alg, dim2.alg).ok
