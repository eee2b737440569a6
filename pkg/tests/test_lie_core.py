from fractions import Fraction
from itertools import product
import random

import pytest

from cklie.ck_matrix import B, E, J, M, Mq, OmegaVector, XI_LABEL, family_dimension
from cklie.cohomology import TwoCochain, cocycle_space
from cklie.lie_core import (
    LieAlgebra,
    build_algebra,
    build_extended,
    build_so,
    build_sq,
    build_su,
    build_u,
    contract,
    epsilon,
    from_matrices,
    permute_basis,
    verify_jacobi,
)


def sign_patterns(n):
    return product((-1, 0, 1), repeat=n)


def brackets_by_label(L):
    out = {}
    for (i, j), terms in L.constants.items():
        out[(str(L.basis[i]), str(L.basis[j]))] = {
            str(L.basis[k]): c for k, c in terms.items()
        }
    return out


class TestEpsilon:
    def test_normalization(self):
        assert epsilon(1, 2, 3) == 1

    def test_total_antisymmetry(self):
        for a, b, c in product((1, 2, 3), repeat=3):
            assert epsilon(a, b, c) == -epsilon(b, a, c)
            assert epsilon(a, b, c) == -epsilon(a, c, b)

    def test_zero_on_repeats(self):
        assert epsilon(1, 1, 2) == 0

    def test_bad_index(self):
        with pytest.raises(ValueError):
            epsilon(0, 1, 2)


class TestBuildSo:
    def test_so3_table(self):
        L = build_so([1, 1])
        assert L.dim == 3
        assert brackets_by_label(L) == {
            ("J(0,1)", "J(0,2)"): {"J(1,2)": 1},
            ("J(0,1)", "J(1,2)"): {"J(0,2)": -1},
            ("J(0,2)", "J(1,2)"): {"J(0,1)": 1},
        }

    def test_fully_contracted_heisenberg_pattern(self):
        L = build_so([0, 0])
        assert brackets_by_label(L) == {("J(0,1)", "J(1,2)"): {"J(0,2)": -1}}

    def test_euclidean_pattern(self):
        L = build_so([0, 1])
        assert brackets_by_label(L) == {
            ("J(0,1)", "J(1,2)"): {"J(0,2)": -1},
            ("J(0,2)", "J(1,2)"): {"J(0,1)": 1},
        }

    def test_n1_abelian(self):
        L = build_so([1])
        assert L.dim == 1
        assert L.constants == {}

    def test_disjoint_pairs_commute(self):
        L = build_so([1, 1, 1])
        assert L.bracket_of(J(0, 1), J(2, 3)) == {}

    def test_rational_omega_allowed(self):
        L = build_so([Fraction(1, 2), Fraction(-3, 4)])
        assert L.bracket_of(J(0, 1), J(0, 2)) == {J(1, 2): Fraction(1, 2)}
        assert verify_jacobi(L)


class TestBuildSu:
    def test_n1_table(self):
        L = build_su([1])
        assert brackets_by_label(L) == {
            ("J(0,1)", "M(0,1)"): {"B(1)": -2},
            ("J(0,1)", "B(1)"): {"M(0,1)": 2},
            ("M(0,1)", "B(1)"): {"J(0,1)": -2},
        }

    def test_n1_contracted(self):
        L = build_su([0])
        table = brackets_by_label(L)
        assert ("J(0,1)", "M(0,1)") not in table
        assert table[("J(0,1)", "B(1)")] == {"M(0,1)": 2}
        assert table[("M(0,1)", "B(1)")] == {"J(0,1)": -2}

    def test_dimension(self):
        assert build_su([1, 1]).dim == 8

    def test_b_sum_row(self):
        L = build_su([1, 1, 1])
        assert L.bracket_of(J(0, 2), M(0, 2)) == {B(1): -2, B(2): -2}
        assert L.bracket_of(J(0, 3), M(0, 3)) == {B(1): -2, B(2): -2, B(3): -2}

    def test_torus_is_abelian(self):
        L = build_su([1, 1, 1])
        assert L.bracket_of(B(1), B(2)) == {}
        assert L.bracket_of(B(2), B(3)) == {}


class TestBuildU:
    def test_phase_is_central(self):
        L = build_u([0, 1])
        i_idx = L.index(L.basis[-1])
        for other in range(L.dim):
            assert L.bracket(other, i_idx) == {}

    def test_dimension(self):
        assert build_u([1, 1]).dim == 9

    def test_jacobi_on_contracted_case(self):
        assert verify_jacobi(build_u([0, 1]))


class TestBuildSq:
    def test_dimensions(self):
        assert build_sq([1]).dim == 10
        assert build_sq([1, 1]).dim == 21

    def test_diagonal_unit_rotations(self):
        L = build_sq([1])
        assert L.bracket_of(E(1, 0), E(2, 0)) == {E(3, 0): 2}
        assert L.bracket_of(E(1, 1), E(3, 1)) == {E(2, 1): -2}

    def test_diagonal_units_at_distinct_nodes_commute(self):
        L = build_sq([1])
        assert L.bracket_of(E(1, 0), E(2, 1)) == {}
        assert L.bracket_of(E(1, 0), E(1, 1)) == {}

    def test_j_m_same_pair_row(self):
        L = build_sq([1, 1])
        assert L.bracket_of(J(0, 1), Mq(2, 0, 1)) == {E(2, 1): 2, E(2, 0): -2}

    def test_mixed_unit_same_pair_row(self):
        L = build_sq([-1])
        # [M^1, M^2] on the same index pair -> 2 w eps (E^3_a + E^3_b)
        assert L.bracket_of(Mq(1, 0, 1), Mq(2, 0, 1)) == {E(3, 0): -2, E(3, 1): -2}


class TestJacobi:
    @pytest.mark.parametrize("family,nmax", [("so", 3), ("su", 2), ("u", 2), ("sq", 2)])
    def test_jacobi_over_sweep(self, family, nmax):
        for n in range(1, nmax + 1):
            for signs in sign_patterns(n):
                assert verify_jacobi(build_algebra(family, signs)), (family, signs)

    @pytest.mark.parametrize("family", ["su", "u"])
    def test_jacobi_unitary_n4(self, family):
        for signs in sign_patterns(4):
            assert verify_jacobi(build_algebra(family, signs)), (family, signs)

    def test_jacobi_sq_n3_spot_patterns(self):
        for signs in [(0, 0, 0), (1, 1, 1), (-1, 0, 1), (1, 0, -1), (0, 1, 0), (-1, -1, -1)]:
            assert verify_jacobi(build_sq(signs)), signs

    def test_corrupted_sign_breaks_jacobi(self):
        # on a 3-generator algebra every bracket lands on the third basis
        # element, so single sign flips never violate Jacobi there; the
        # smallest honest fixture is N=3, where every flip breaks it.
        L = build_so([1, 1, 1])
        for pair in sorted(L.constants):
            terms = dict(L.constants[pair])
            k = sorted(terms)[0]
            terms[k] = -terms[k]
            corrupted = LieAlgebra("so", L.omega, L.basis, {**L.constants, pair: terms})
            assert not verify_jacobi(corrupted)

    def test_jacobi_sq_contracted(self):
        assert verify_jacobi(build_sq([0, 1]))


class TestFromMatrices:
    @pytest.mark.parametrize("family,nmax", [("so", 3), ("su", 2), ("u", 2), ("sq", 1)])
    def test_matches_closed_form_exhaustively(self, family, nmax):
        for n in range(1, nmax + 1):
            for signs in sign_patterns(n):
                closed = build_algebra(family, signs)
                matrix = from_matrices(family, signs)
                assert matrix.same_constants(closed), (family, signs)

    def test_sq_n2_spot_checks(self):
        for signs in [(1, 1), (0, 0), (0, 1), (-1, 1), (1, -1)]:
            assert from_matrices("sq", signs).same_constants(build_sq(signs))

    def test_su_rational_omega(self):
        om = [Fraction(2, 3)]
        assert from_matrices("su", om).same_constants(build_su(om))


class TestContract:
    def test_zeroing(self):
        assert contract([1, 1], {1}) == OmegaVector([0, 1])

    def test_galilei_pattern(self):
        assert contract([1, 1, 1], {1, 2}) == OmegaVector([0, 0, 1])

    def test_union_idempotence(self):
        om = OmegaVector([1, -1, 1, -1])
        assert contract(contract(om, {1}), {3}) == contract(om, {1, 3})
        assert contract(contract(om, {1}), {1}) == contract(om, {1})

    def test_contract_builds_contracted_algebra(self):
        assert build_so(contract([1, 1], {1})).same_constants(build_so([0, 1]))


class TestPermuteBasis:
    def test_brackets_transported(self):
        L = build_su([0, 1])
        rng = random.Random(7)
        perm = list(range(L.dim))
        rng.shuffle(perm)
        P = permute_basis(L, perm)
        assert verify_jacobi(P)
        for u in (J(0, 1), M(1, 2), B(2)):
            assert L.bracket_of(u, B(1)) == P.bracket_of(u, B(1))

    def test_bad_permutation(self):
        with pytest.raises(ValueError):
            permute_basis(build_so([1, 1]), [0, 0, 1])


class TestExtendedAlgebra:
    def test_zero_cochain_direct_sum(self):
        L = build_so([1, 1])
        ext = build_extended(L, TwoCochain.zero(L.dim))
        assert ext.dim == L.dim + 1
        assert ext.algebra.basis[-1] == XI_LABEL
        assert verify_jacobi(ext)

    def test_central_generator_commutes(self):
        L = build_so([0, 1])
        xi = TwoCochain(3, {(0, 1): Fraction(1)})
        ext = build_extended(L, xi)
        last = ext.dim - 1
        for i in range(ext.dim):
            assert ext.bracket(i, last) == {}

    def test_nontrivial_coefficient_appears_in_bracket(self):
        L = build_so([0, 1])
        xi = TwoCochain(3, {(0, 1): Fraction(5)})
        ext = build_extended(L, xi)
        assert ext.bracket(0, 1).get(3) == 5

    def test_jacobi_iff_cocycle(self):
        # exhaustive over the cocycle basis, plus random non-cocycles
        for family, signs in [("so", (0, 1)), ("so", (1, 1, 1)), ("su", (0,))]:
            L = build_algebra(family, signs)
            for xi in cocycle_space(L):
                assert verify_jacobi(build_extended(L, xi))
        L = build_so([1, 1, 1])
        rng = random.Random(11)
        found_non_cocycle = 0
        for _ in range(20):
            entries = {}
            for i in range(L.dim):
                for j in range(i + 1, L.dim):
                    if rng.random() < 0.3:
                        entries[(i, j)] = Fraction(rng.randint(-3, 3))
            xi = TwoCochain(L.dim, entries)
            from cklie.cohomology import CohomologySolver

            if not CohomologySolver(L).is_cocycle(xi):
                found_non_cocycle += 1
                assert not verify_jacobi(build_extended(L, xi))
        assert found_non_cocycle > 0

    def test_galilei_beta_extension_satisfies_jacobi(self):
        from cklie.classify import coefficient_cocycle

        om = [0, 0, 1]
        L = build_so(om)
        xi = coefficient_cocycle("so", om, "beta[1,3]")
        assert verify_jacobi(build_extended(L, xi))

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            build_extended(build_so([1, 1]), TwoCochain.zero(5))


class TestSerialization:
    def test_structure_rows_sorted_and_exact(self):
        L = build_su([0])
        rows = list(L.structure_rows())
        assert rows == sorted(rows, key=lambda r: (r[0], r[1], r[2]))
        obj = L.to_json_obj()
        assert obj["constants"][0]["c"] == "2"
        assert obj["basis"] == ["J(0,1)", "M(0,1)", "B(1)"]

    def test_dimension_table(self):
        for family in ("so", "su", "u", "sq"):
            for n in range(1, 7):
                assert build_algebra(family, [1] * n).dim == family_dimension(family, n)
