import unittest

import galois
import numpy as np
from hypothesis import given, settings, strategies as st

from cyclogoppa.field.gf2m import (
    GF2,
    FieldSpec,
    binary_minimal_poly,
    build_field,
    build_tower,
    solve_unit_quadratic,
    sqrt,
)
from cyclogoppa.utils.exceptions import (
    ExcludedOrderTwoError,
    FieldDivisionByZeroError,
    FieldMismatchError,
    InvalidFieldError,
    NonPrimitiveGeneratorError,
    ReduciblePolynomialError,
)


class FieldTest(unittest.TestCase):
    def test_default_fields(self):
        for m in (1, 2, 3, 4, 6, 8):
            field = build_field(m)
            self.assertEqual(field.order, 2**m)
            self.assertEqual(len(field.elements), 2**m)
            # the generator reaches every nonzero element
            self.assertEqual(len(set(field.exp_table.tolist())), 2**m - 1)

    def test_bad_fields(self):
        with self.assertRaises(InvalidFieldError):
            build_field(0)
        with self.assertRaises(InvalidFieldError):
            build_field(17)
        with self.assertRaises(InvalidFieldError):
            FieldSpec(3, 0x13)
        with self.assertRaises(ReduciblePolynomialError) as ctx:
            # (x^2 + x + 1)^2
            build_field(4, 0x15)
        self.assertEqual(ctx.exception.factor, galois.Poly.Int(0x7, field=GF2))
        with self.assertRaises(NonPrimitiveGeneratorError):
            build_field(3, generator=1)

    def test_non_primitive_defining_poly(self):
        # x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5
        field = build_field(4, 0x1F)
        self.assertNotEqual(int(field.generator), 2)
        self.assertEqual(int(field.GF(2) ** 5), 1)
        self.assertEqual(len(set(field.exp_table.tolist())), 15)

    def test_log_and_power(self):
        field = build_field(6)
        for k in range(-5, 70, 7):
            self.assertEqual(field.log(field.power(k)), k % 63)
        with self.assertRaises(FieldDivisionByZeroError):
            field.log(field.zero)
        self.assertEqual(field.multiplicative_order(field.power(9)), 7)
        self.assertEqual(field.multiplicative_order(field.power(21)), 3)

    def test_arith(self):
        f8 = build_field(3)
        f16 = build_field(4)
        x = f8.power(3)
        self.assertEqual(f8.arith("mul", x, f8.arith("inv", x)), f8.one)
        self.assertEqual(f8.arith("add", x, x), f8.zero)
        self.assertEqual(f8.arith("pow", x, 7), f8.one)
        with self.assertRaises(FieldMismatchError):
            f8.arith("add", f8.one, f16.one)
        with self.assertRaises(FieldDivisionByZeroError):
            f8.arith("inv", f8.zero)
        with self.assertRaises(FieldDivisionByZeroError):
            f8.arith("pow", f8.zero, -1)
        with self.assertRaises(ValueError):
            f8.arith("sub", x, x)

    def test_sqrt_and_frobenius(self):
        field = build_field(5)
        x = field.elements
        self.assertTrue(np.all(sqrt(x) ** 2 == x))
        self.assertTrue(np.all(field.frobenius(x, field.m) == x))

    def test_binary_minimal_poly(self):
        field = build_field(6)
        self.assertEqual(binary_minimal_poly(field.generator), galois.Poly.Int(0x43, field=GF2))
        self.assertEqual(binary_minimal_poly(field.one), galois.Poly([1, 1], field=GF2))

    def test_describe_and_equality(self):
        field = build_field(3)
        info = field.describe()
        self.assertEqual(info["m"], 3)
        self.assertEqual(info["poly"], "0xb")
        self.assertEqual(info["gen"], "0b010")
        self.assertEqual(field, build_field(3, 0xB, 2))
        self.assertNotEqual(field, build_field(3, 0xD))
        self.assertNotEqual(field, build_field(3, 0xB, 3))


class TowerTest(unittest.TestCase):
    def test_tower_gf2(self):
        tower = build_tower(build_field(1))
        self.assertEqual(tower.ext.m, 2)
        one = tower.embed(GF2(1))
        self.assertEqual(one, tower.ext.one)

    def test_restrict_inverts_embed(self):
        for m in (2, 3, 4):
            tower = build_tower(build_field(m))
            x = tower.base.elements
            y = tower.embed(x)
            self.assertTrue(np.all(tower.in_image(y)))
            self.assertTrue(np.array_equal(tower.restrict(y), x))
            self.assertEqual(int(np.sum(tower.in_image(tower.ext.elements))), 2**m)

    def test_restrict_outside_image(self):
        tower = build_tower(build_field(3))
        outside = tower.ext.elements[~tower.in_image(tower.ext.elements)]
        with self.assertRaises(FieldMismatchError):
            tower.restrict(outside[:1])

    @settings(max_examples=50, deadline=None)
    @given(st.sampled_from([2, 3, 4]), st.data())
    def test_embedding_is_homomorphism(self, m, data):
        tower = build_tower(build_field(m))
        x = tower.base.GF(data.draw(st.integers(0, 2**m - 1)))
        y = tower.base.GF(data.draw(st.integers(0, 2**m - 1)))
        self.assertEqual(tower.embed(x + y), tower.embed(x) + tower.embed(y))
        self.assertEqual(tower.embed(x * y), tower.embed(x) * tower.embed(y))

    def test_solve_unit_quadratic(self):
        # lambda^2 + lambda + 1 is irreducible over GF(2)
        tower = build_tower(build_field(1))
        rho, rho_inv, reducible = solve_unit_quadratic(GF2(1), tower)
        self.assertFalse(reducible)
        self.assertEqual(rho * rho_inv, tower.ext.one)
        self.assertEqual(tower.ext.multiplicative_order(rho), 3)
        self.assertLess(int(rho), int(rho_inv))

        field = build_field(3)
        tower = build_tower(field)
        t = field.power(1) + field.power(6)
        rho, rho_inv, reducible = solve_unit_quadratic(t, tower)
        self.assertTrue(reducible)
        self.assertEqual(tower.ext.multiplicative_order(rho), 7)

        with self.assertRaises(ExcludedOrderTwoError):
            solve_unit_quadratic(field.zero, tower)
