import unittest

import numpy as np

from cyclogoppa.field.gf2m import GF2, build_field, build_tower
from cyclogoppa.geometry.projline import (
    INFINITY,
    ProjectiveLine,
    apply,
    compose,
    cycles,
    infinity_support,
    normalize,
    orbit_of,
    orbits,
    order,
    partition,
    spectral,
)
from cyclogoppa.harness import find_matrix, random_map
from cyclogoppa.utils.exceptions import (
    ExcludedOrderTwoError,
    FieldMismatchError,
    InvalidExponentsError,
    SingularMatrixError,
    SupportError,
    UnsupportedCaseError,
)
from cyclogoppa.utils.utility import parse_element


def from_literals(literals, field, frob=0):
    entries = [parse_element(x, field) for x in literals]
    return normalize(*entries, field, frob)


class NormalizeTest(unittest.TestCase):
    def test_identity_and_scalars(self):
        f4 = build_field(2)
        M = from_literals(("1", "0", "0", "1"), f4)
        self.assertTrue(M.is_identity())
        self.assertEqual(M.det, f4.one)

        M = from_literals(("g", "0", "0", "g"), f4)
        self.assertTrue(M.is_identity())

    def test_singular(self):
        f8 = build_field(3)
        with self.assertRaises(SingularMatrixError):
            from_literals(("1", "1", "1", "1"), f8)
        with self.assertRaises(SingularMatrixError):
            from_literals(("g", "g^2", "1", "g"), f8)

    def test_frob_range(self):
        f8 = build_field(3)
        with self.assertRaises(InvalidExponentsError):
            from_literals(("1", "0", "0", "1"), f8, frob=3)

    def test_determinant_one(self):
        f16 = build_field(4)
        rng = np.random.default_rng(3)
        for _ in range(20):
            M = random_map(f16, rng)
            self.assertEqual(M.det, f16.one)


class ActionTest(unittest.TestCase):
    def test_three_cycle_over_gf2(self):
        f2 = build_field(1)
        M = from_literals(("0", "1", "1", "1"), f2)
        line = ProjectiveLine(f2)
        self.assertEqual(apply(M, INFINITY), GF2(0))
        self.assertEqual(apply(M, GF2(0)), GF2(1))
        self.assertIs(apply(M, GF2(1)), INFINITY)
        self.assertEqual(orbit_of(M, INFINITY).labels.tolist(), [2, 0, 1])
        self.assertEqual(order(M), 3)
        self.assertEqual(order(M, build_tower(f2)), 3)
        self.assertEqual(len(cycles(M, line)), 1)

    def test_infinity_goes_to_a_over_c(self):
        f16 = build_field(4)
        rng = np.random.default_rng(11)
        M = random_map(f16, rng)
        self.assertEqual(M(INFINITY), M.a / M.c)

    def test_identity_fixes_everything(self):
        f4 = build_field(2)
        M = from_literals(("1", "0", "0", "1"), f4)
        line = ProjectiveLine(f4)
        self.assertTrue(np.array_equal(M.apply_labels(line.labels()), line.labels()))
        self.assertEqual(order(M), 1)

    def test_composition_is_action(self):
        for m in (2, 4):
            field = build_field(m)
            line = ProjectiveLine(field)
            rng = np.random.default_rng(m)
            for frob in range(m):
                M1 = random_map(field, rng, frob)
                M2 = random_map(field, rng, (frob + 1) % m)
                labels = line.labels()
                lhs = compose(M1, M2).apply_labels(labels)
                rhs = M1.apply_labels(M2.apply_labels(labels))
                self.assertTrue(np.array_equal(lhs, rhs))

    def test_semilinear_order(self):
        f4 = build_field(2)
        M = from_literals(("1", "0", "0", "1"), f4, frob=1)
        self.assertEqual(order(M), 2)
        self.assertEqual(len(orbit_of(M, f4.power(1))), 2)
        self.assertEqual(len(orbit_of(M, INFINITY)), 1)

    def test_lift_rejects_other_fields(self):
        f8 = build_field(3)
        M = from_literals(("0", "1", "1", "g"), f8)
        with self.assertRaises(FieldMismatchError):
            M.lift(build_tower(build_field(2)))
        with self.assertRaises(FieldMismatchError):
            M.apply_labels([0], ProjectiveLine(build_field(4)))


class SpectralTest(unittest.TestCase):
    def test_gf2_irreducible(self):
        f2 = build_field(1)
        tower = build_tower(f2)
        sp = spectral(from_literals(("0", "1", "1", "1"), f2), tower)
        self.assertEqual(sp.order, 3)
        self.assertFalse(sp.reducible)
        self.assertEqual(sp.branch, "irreducible")
        self.assertEqual(sp.working_field, tower.ext)
        for z in (sp.fixed1, sp.fixed2):
            self.assertFalse(bool(tower.in_image(z)))
            self.assertEqual(sp.working_map(z), z)

    def test_reference_orders(self):
        f64 = build_field(6)
        sp = spectral(from_literals(find_matrix(6, 21), f64), build_tower(f64))
        self.assertEqual(sp.order, 21)
        self.assertTrue(sp.reducible)
        self.assertEqual(sp.working_field, f64)

        f16 = build_field(4)
        sp = spectral(from_literals(find_matrix(4, 17), f16), build_tower(f16))
        self.assertEqual(sp.order, 17)
        self.assertFalse(sp.reducible)
        self.assertEqual(sp.working_field.m, 8)

    def test_lower_triangular_order_nine(self):
        f64 = build_field(6)
        M = from_literals(("g^7", "0", "1", "g^56"), f64)
        tower = build_tower(f64)
        sp = spectral(M, tower)
        self.assertEqual(sp.order, 9)
        self.assertEqual(order(M, tower), 9)
        self.assertEqual(len(orbit_of(M, f64.power(2))), 9)

    def test_excluded_maps(self):
        f8 = build_field(3)
        tower = build_tower(f8)
        with self.assertRaises(UnsupportedCaseError):
            spectral(from_literals(("g", "1", "0", "1"), f8), tower)
        with self.assertRaises(ExcludedOrderTwoError):
            spectral(from_literals(("0", "1", "1", "0"), f8), tower)
        with self.assertRaises(UnsupportedCaseError):
            spectral(from_literals(("0", "1", "1", "g"), f8, frob=1), tower)

    def test_random_orders(self):
        rng = np.random.default_rng(2024)
        for m in (3, 4, 5, 6):
            field = build_field(m)
            tower = build_tower(field)
            q = field.order
            for _ in range(10):
                M = random_map(field, rng)
                sp = spectral(M, tower)
                n = sp.order
                self.assertEqual(n % 2, 1)
                self.assertGreater(n, 2)
                self.assertEqual((q - 1) % n == 0, sp.reducible)
                self.assertEqual((q + 1) % n == 0, not sp.reducible)
                self.assertEqual(order(M, tower), n)
                self.assertEqual(sp.rho * sp.rho_inv, sp.working_field.one)
                self.assertEqual(sp.rho + sp.rho_inv, sp.working_map.trace)

    def test_diagonalizer_and_infinity_orbit(self):
        rng = np.random.default_rng(5)
        for m in (3, 4):
            field = build_field(m)
            tower = build_tower(field)
            for _ in range(5):
                sp = spectral(random_map(field, rng), tower)
                P = sp.diagonalizer
                line = sp.line
                images = {line.label(P(sp.rho**i, line)) for i in range(1, sp.order + 1)}
                at_inf = orbit_of(sp.working_map, INFINITY, line)
                self.assertEqual(images, set(at_inf.labels.tolist()))
                self.assertIs(P(sp.working_field.one, line), INFINITY)


class PartitionTest(unittest.TestCase):
    def check_partition(self, parts, size, n, fixed):
        labels = np.concatenate([o.labels for o in parts])
        self.assertEqual(len(labels), size)
        self.assertEqual(len(set(labels.tolist())), size)
        singletons = [o for o in parts if len(o) == 1]
        self.assertEqual(len(singletons), fixed)
        self.assertTrue(all(len(o) == n for o in parts if len(o) > 1))
        self.assertEqual(len(parts) - fixed, (size - fixed) // n)

    def test_gf2_over_gf4(self):
        f2 = build_field(1)
        tower = build_tower(f2)
        M = from_literals(("0", "1", "1", "1"), f2)
        parts = partition(M, tower.ext, tower)
        self.check_partition(parts, 5, 3, 2)

    def test_reducible_counts(self):
        f64 = build_field(6)
        M = from_literals(find_matrix(6, 21), f64)
        parts = partition(M, f64)
        self.check_partition(parts, 65, 21, 2)
        self.assertEqual(len(parts), 5)

        sp = spectral(M, build_tower(f64))
        fixed = {o.labels[0] for o in parts if len(o) == 1}
        self.assertEqual(fixed, {int(sp.fixed1), int(sp.fixed2)})

    def test_irreducible_counts(self):
        f16 = build_field(4)
        tower = build_tower(f16)
        M = from_literals(find_matrix(4, 17), f16)
        parts = partition(M, f16)
        self.check_partition(parts, 17, 17, 0)
        self.assertEqual(len(parts), 1)

        parts = partition(M, tower.ext, tower)
        self.check_partition(parts, 257, 17, 2)
        self.assertEqual(len(parts), 17)

    def test_extension_counts_for_reducible_map(self):
        f16 = build_field(4)
        tower = build_tower(f16)
        M = from_literals(find_matrix(4, 5), f16)
        self.check_partition(partition(M, f16), 17, 5, 2)
        self.check_partition(partition(M, tower.ext, tower), 257, 5, 2)

    def test_partition_rejections(self):
        f8 = build_field(3)
        with self.assertRaises(UnsupportedCaseError):
            partition(from_literals(("g", "1", "0", "1"), f8), f8)
        with self.assertRaises(ExcludedOrderTwoError):
            partition(from_literals(("0", "1", "1", "0"), f8), f8)
        with self.assertRaises(FieldMismatchError):
            partition(from_literals(("0", "1", "1", "g"), f8), build_field(6))

    def test_c_zero_orbits_still_available(self):
        f8 = build_field(3)
        M = from_literals(("g", "1", "0", "1"), f8)
        parts = orbits(M)
        self.assertEqual(sum(len(o) for o in parts), 9)
        self.assertEqual(len(orbit_of(M, INFINITY)), 1)


class InfinitySupportTest(unittest.TestCase):
    def test_support_order(self):
        f8 = build_field(3)
        M = from_literals(("0", "1", "1", "g^5"), f8)
        support = infinity_support(M)
        self.assertEqual(len(support), 6)
        self.assertEqual(support[0], M.a / M.c)
        self.assertEqual(M(support[-1]), INFINITY)

    def test_fixed_infinity(self):
        f8 = build_field(3)
        with self.assertRaises(SupportError):
            infinity_support(from_literals(("g", "1", "0", "1"), f8))
