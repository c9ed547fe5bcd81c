"""Level permutations, polynomial coefficients, constraints, coset reduction."""

import itertools
import random

import pytest

from regfrac import (
    CycInt,
    CycRational,
    LevelPerm,
    PermPolynomial,
    apply_level_perm,
    check_perm_constraints,
    coset_representatives,
    is_monomial,
    monomial_decompose,
    monomial_perm,
    poly_coefficients,
    root,
    same_monomial_coset,
)
from regfrac.permutation import all_level_perms
from fixtures import cyclic_design, scrambled_design

# scaled coefficients 5*u_h of the transposition of levels 0 and 1, one of
# the two hand-checkable non-affine worked examples at five levels
SWITCH_01_SCALED = (
    (0, 0, 0, 0, 0),
    (3, 1, 0, 0, 1),
    (0, 2, 1, 2, 0),
    (0, 2, 2, 0, 1),
    (0, 3, 0, 1, 1),
)


class TestLevelPerm:
    def test_validation(self):
        with pytest.raises(ValueError):
            LevelPerm(5, (0, 1, 2, 3, 3))
        with pytest.raises(ValueError):
            LevelPerm(4, (0, 1, 2, 3))

    def test_identity_compose_inverse(self):
        p = LevelPerm(5, (4, 3, 0, 2, 1))
        assert p.compose(p.inverse()).is_identity
        assert p.inverse().compose(p).is_identity
        assert LevelPerm.identity(5).compose(p) == p

    def test_string_roundtrip(self):
        p = LevelPerm.from_string("4,3,0,2,1")
        assert p.s == 5 and p.to_string() == "4,3,0,2,1"
        assert LevelPerm.from_string("0,1,2", 3) == LevelPerm.identity(3)

    def test_compose_applies_right_argument_first(self):
        shift = monomial_perm(1, 1, 5)
        double = monomial_perm(2, 0, 5)
        assert double.compose(shift).image == tuple((2 * (e + 1)) % 5 for e in range(5))


class TestMonomial:
    def test_identity_and_shift(self):
        assert monomial_perm(1, 0, 5).is_identity
        assert monomial_perm(1, 2, 5).image == (2, 3, 4, 0, 1)

    def test_zero_power_rejected(self):
        with pytest.raises(ValueError):
            monomial_perm(0, 1, 5)

    def test_group_size(self):
        group = {monomial_perm(h, k, 5).image for h in range(1, 5) for k in range(5)}
        assert len(group) == 20

    def test_composition_law(self):
        for h, k, h2, k2 in itertools.product(range(1, 5), range(5), range(1, 5), range(5)):
            left = monomial_perm(h, k, 5).compose(monomial_perm(h2, k2, 5))
            right = monomial_perm((h * h2) % 5, (h * k2 + k) % 5, 5)
            assert left == right

    def test_detection(self):
        assert is_monomial(LevelPerm.identity(5)) == (1, 0)
        assert is_monomial(monomial_perm(3, 2, 7)) == (3, 2)
        assert is_monomial(LevelPerm(5, (4, 3, 0, 2, 1))) is None

    def test_three_levels_all_monomial(self):
        for p in all_level_perms(3):
            assert is_monomial(p) is not None

    def test_two_levels_all_monomial(self):
        for p in all_level_perms(2):
            assert is_monomial(p) is not None


class TestCosetRepresentatives:
    @pytest.mark.parametrize("s,count", [(2, 1), (3, 1), (5, 6), (7, 120)])
    def test_counts(self, s, count):
        reps = list(coset_representatives(s))
        assert len(reps) == count
        assert all(p.image[0] == 0 and p.image[1] == 1 for p in reps)

    @pytest.mark.parametrize("s", [3, 5])
    def test_unique_factorization(self, s):
        reps = list(coset_representatives(s))
        seen = {}
        for p in all_level_perms(s):
            h, k, rep = monomial_decompose(p)
            assert monomial_perm(h, k, s).compose(rep) == p
            assert rep in reps
            seen.setdefault(rep.image, set()).add(p.image)
        # every coset has exactly s(s-1) members and they partition S_s
        assert len(seen) == len(reps)
        sizes = {len(v) for v in seen.values()}
        assert sizes == {s * (s - 1)}

    def test_same_coset_detection(self):
        a = LevelPerm(5, (4, 3, 0, 2, 1))
        rep = monomial_decompose(a)[2]
        assert rep.image == (0, 1, 4, 2, 3)
        assert same_monomial_coset(a, rep)
        assert not same_monomial_coset(a, LevelPerm.identity(5))


class TestApplyLevelPerm:
    def test_identity_is_noop(self):
        d = cyclic_design()
        assert apply_level_perm(d, 2, LevelPerm.identity(5)) == d

    def test_roundtrip(self):
        d = scrambled_design()
        p = LevelPerm(5, (4, 3, 0, 2, 1))
        assert apply_level_perm(apply_level_perm(d, 3, p), 3, p.inverse()) == d

    def test_rebuilds_scrambled_array_from_cyclic(self):
        # the value maps recovered by the regularity machinery turn the
        # scrambled fixture back into a fraction with a cyclic-sum relation
        d = scrambled_design()
        work = apply_level_perm(d, 1, LevelPerm(5, (0, 1, 3, 4, 2)))
        work = apply_level_perm(work, 2, LevelPerm(5, (0, 4, 1, 2, 3)))
        work = apply_level_perm(work, 3, LevelPerm(5, (0, 1, 4, 2, 3)))
        sq = {(r[0], r[1]): r[2] for r in work.rows}
        assert all(sq[(a, b)] == (a + b + 4) % 5 for a in range(5) for b in range(5))

    def test_validates_factor_and_levels(self):
        d = cyclic_design()
        with pytest.raises(ValueError):
            apply_level_perm(d, 0, LevelPerm.identity(5))
        with pytest.raises(ValueError):
            apply_level_perm(d, 1, LevelPerm.identity(7))


class TestPolyCoefficients:
    def test_identity_polynomial(self):
        poly = poly_coefficients(LevelPerm.identity(5))
        expected = [CycRational.zero(5), CycRational.one(5)] + [CycRational.zero(5)] * 3
        assert list(poly.coeffs) == expected

    def test_switch_matches_hand_computation(self):
        poly = poly_coefficients(LevelPerm(5, (1, 0, 2, 3, 4)))
        assert tuple(c.coeffs for c in poly.scaled_coefficients()) == SWITCH_01_SCALED

    def test_reconstruction_on_worked_permutation(self):
        perm = LevelPerm(5, (2, 0, 1, 3, 4))
        poly = poly_coefficients(perm)
        assert poly.coeffs[0].is_zero()
        for k in range(5):
            assert poly.evaluate(k) == CycRational(root(perm.image[k], 5))

    @pytest.mark.parametrize("s", [2, 3, 5])
    def test_reconstruction_exhaustive(self, s):
        for perm in all_level_perms(s):
            poly = poly_coefficients(perm)
            for k in range(s):
                assert poly.evaluate(k) == CycRational(root(perm.image[k], s))

    def test_reconstruction_random_seven_levels(self):
        rng = random.Random(11)
        for _ in range(10_000):
            perm = LevelPerm(7, tuple(rng.sample(range(7), 7)))
            poly = poly_coefficients(perm)
            for k in range(7):
                assert poly.evaluate(k) == CycRational(root(perm.image[k], 7))

    @pytest.mark.parametrize("s", [3, 5])
    def test_scaled_coefficients_nonnegative(self, s):
        # canonical forms put s*u_h inside the non-negative cone on the roots
        for perm in all_level_perms(s):
            for scaled in poly_coefficients(perm).scaled_coefficients():
                assert min(scaled.coeffs) >= 0

    def test_monomial_iff_single_nonzero_coefficient(self):
        for perm in all_level_perms(5):
            poly = poly_coefficients(perm)
            nonzero = [h for h, u in enumerate(poly.coeffs) if not u.is_zero()]
            if is_monomial(perm) is not None:
                assert len(nonzero) == 1
            else:
                assert len(nonzero) > 1


class TestConstraints:
    @pytest.mark.parametrize("s", [2, 3, 5])
    def test_every_permutation_satisfies_constraints(self, s):
        for perm in all_level_perms(s):
            assert check_perm_constraints(poly_coefficients(perm))

    def test_three_level_violations_detected(self):
        # u_1 * u_2 = 0 is the q=2 constraint at three levels; coefficient
        # vectors with both powers present must fail
        rng = random.Random(12)
        for _ in range(20):
            u1 = CycRational(root(rng.randrange(3), 3))
            u2 = CycRational(root(rng.randrange(3), 3))
            poly = PermPolynomial(3, (CycRational.zero(3), u1, u2))
            assert not check_perm_constraints(poly)

    def test_nonzero_constant_term_fails(self):
        poly = PermPolynomial(5, tuple(CycRational(root(0, 5)) for _ in range(5)))
        assert not check_perm_constraints(poly)

    def test_degree_two_violation_fails(self):
        # Y = X + X^4 has zero constant term but Y^2 picks one up
        one = CycRational.one(5)
        zero = CycRational.zero(5)
        poly = PermPolynomial(5, (zero, one, zero, zero, one))
        assert not check_perm_constraints(poly)

    def test_power_sum_constraint_fails_for_nonroot(self):
        # Y = 2X: coefficient sum 2 is no root of unity
        two = CycRational(CycInt.integer(2, 5))
        zero = CycRational.zero(5)
        poly = PermPolynomial(5, (zero, two, zero, zero, zero))
        assert not check_perm_constraints(poly)

    def test_two_level_violation_detected(self):
        two = CycRational(CycInt.integer(2, 2))
        poly = PermPolynomial(2, (CycRational.zero(2), two))
        assert not check_perm_constraints(poly)
