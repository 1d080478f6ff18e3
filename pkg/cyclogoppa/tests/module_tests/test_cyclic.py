import unittest

import galois
import numpy as np

from cyclogoppa.codes.cyclic import (
    CyclicReport,
    MinimumDistance,
    bch_bound_check,
    extract_generator,
    is_cyclic,
    min_distance,
    minimal_degree_codeword,
    predict_generator,
    reduce_exponents,
)
from cyclogoppa.codes.linbin import BinaryCode
from cyclogoppa.field.gf2m import GF2, build_field, build_tower
from cyclogoppa.field.poly import lcm_all, minimal_polynomial_gf2, x_n_minus_1
from cyclogoppa.geometry.projline import normalize, spectral
from cyclogoppa.harness import find_matrix
from cyclogoppa.utils.exceptions import (
    CycloGoppaError,
    DimensionGuardError,
    InvalidExponentsError,
)
from cyclogoppa.utils.utility import parse_binary_poly, parse_element


def shifts(bits, count):
    return np.array([np.roll(bits, i) for i in range(count)], dtype=np.uint8)


def hamming_code():
    # 1 + x + x^3
    return BinaryCode.from_generator(shifts([1, 1, 0, 1, 0, 0, 0], 4))


def spectral_of(m, n):
    field = build_field(m)
    entries = [parse_element(x, field) for x in find_matrix(m, n)]
    return spectral(normalize(*entries, field), build_tower(field))


class CyclicityTest(unittest.TestCase):
    def test_is_cyclic(self):
        self.assertTrue(is_cyclic(hamming_code()))
        self.assertTrue(is_cyclic(BinaryCode.from_generator([[1] * 5])))
        self.assertTrue(is_cyclic(BinaryCode.zero(7)))
        self.assertFalse(is_cyclic(BinaryCode.from_generator([[1, 1, 0, 0, 0]])))

    def test_extract_hamming(self):
        report = extract_generator(hamming_code())
        self.assertTrue(report.is_cyclic)
        self.assertEqual(report.k, 4)
        self.assertEqual(report.generator, parse_binary_poly("x^3+x+1"))
        self.assertEqual(report.parity_check_poly, parse_binary_poly("x^4+x^2+x+1"))
        self.assertEqual(report.generator * report.parity_check_poly, x_n_minus_1(7))
        out = report.to_dict()
        self.assertEqual(out["generator_hex"], "0xb")
        self.assertIsNone(out["d"])

    def test_extract_non_cyclic(self):
        code = BinaryCode.from_generator([[1, 1, 0, 0, 0]])
        report = extract_generator(code)
        self.assertFalse(report.is_cyclic)
        self.assertIsNone(report.generator)
        self.assertNotIn("generator_hex", report.to_dict())

        hull = extract_generator(code, require_cyclic=False)
        self.assertEqual(hull.generator, parse_binary_poly("x+1"))
        self.assertEqual(hull.parity_check_poly, parse_binary_poly("x^4+x^3+x^2+x+1"))

    def test_extract_zero_code(self):
        report = extract_generator(BinaryCode.zero(9))
        self.assertTrue(report.is_cyclic)
        self.assertEqual(report.generator, x_n_minus_1(9))
        self.assertEqual(report.parity_check_poly.degree, 0)

    def test_oracle(self):
        self.assertEqual(minimal_degree_codeword(hamming_code()), parse_binary_poly("x^3+x+1"))
        rep = BinaryCode.from_generator([[1] * 7])
        self.assertEqual(minimal_degree_codeword(rep), x_n_minus_1(7) // parse_binary_poly("x+1"))
        with self.assertRaises(CycloGoppaError):
            minimal_degree_codeword(BinaryCode.zero(5))
        with self.assertRaises(DimensionGuardError):
            minimal_degree_codeword(hamming_code(), max_dim=3)


class DistanceTest(unittest.TestCase):
    def test_known_distances(self):
        self.assertEqual(min_distance(BinaryCode.from_generator([[1] * 5])), 5)
        self.assertEqual(min_distance(hamming_code()), 3)
        even = BinaryCode.from_parity_check([[1] * 6])
        self.assertEqual(min_distance(even), 2)
        self.assertIsNone(min_distance(BinaryCode.zero(4)))

    def test_threads_do_not_change_result(self):
        code = BinaryCode.from_parity_check(shifts([1, 0, 1, 1, 1, 0, 0], 3))
        single = MinimumDistance(chunk=3)(code)
        threaded = MinimumDistance(chunk=3, num_threads=3)(code)
        self.assertEqual(single, threaded)

    def test_guard(self):
        with self.assertRaises(DimensionGuardError):
            MinimumDistance(max_dim=3)(hamming_code())
        with self.assertRaises(ValueError):
            MinimumDistance(num_threads=0)


class PredictionTest(unittest.TestCase):
    def test_reduce_exponents(self):
        self.assertEqual(reduce_exponents(1), [1])
        self.assertEqual(reduce_exponents(2), [1])
        self.assertEqual(reduce_exponents(5), [1, 3, 5])
        self.assertEqual(reduce_exponents(6), [1, 3, 5])
        with self.assertRaises(InvalidExponentsError):
            reduce_exponents(0)

    def test_reduced_lcm_matches_full_lcm(self):
        for beta in (build_field(6).power(3), build_field(8).power(15)):
            for s in range(1, 11):
                full = lcm_all(minimal_polynomial_gf2(beta**-i) for i in range(1, s + 1))
                reduced = lcm_all(minimal_polynomial_gf2(beta**-i) for i in reduce_exponents(s))
                self.assertEqual(full, reduced)

    def test_predicted_degrees(self):
        sp = spectral_of(6, 21)
        for (s, t), degree, designed in (
            ((1, 0), 7, 3),
            ((0, 1), 7, 3),
            ((3, 0), 10, 5),
            ((5, 0), 16, 7),
            ((7, 0), 18, 9),
            ((1, 1), 13, None),
            ((3, 3), 19, None),
        ):
            u, got = predict_generator(sp, s, t)
            self.assertEqual(u.degree, degree)
            self.assertEqual(got, designed)
            self.assertEqual(x_n_minus_1(21) % u, galois.Poly.Zero(GF2))

    def test_prediction_covers_all_roots(self):
        sp = spectral_of(6, 21)
        u, _ = predict_generator(sp, 10, 0)
        self.assertEqual(u, x_n_minus_1(21))

    def test_irreducible_prediction(self):
        sp = spectral_of(4, 17)
        u1, _ = predict_generator(sp, 1, 0)
        u2, _ = predict_generator(sp, 0, 1)
        # m_rho is self-reciprocal for n = 17
        self.assertEqual(u1, u2)
        self.assertEqual(u1.degree, 9)

    def test_bad_exponents(self):
        sp = spectral_of(6, 21)
        with self.assertRaises(InvalidExponentsError):
            predict_generator(sp, 0, 0)
        with self.assertRaises(InvalidExponentsError):
            predict_generator(sp, -1, 3)


class BchBoundTest(unittest.TestCase):
    def test_bound(self):
        self.assertTrue(bch_bound_check(CyclicReport(21, 11, True, d=6), 3, 0))
        self.assertTrue(bch_bound_check(CyclicReport(21, 11, True, d=6), 0, 4))
        self.assertFalse(bch_bound_check(CyclicReport(21, 11, True, d=5), 3, 0))
        self.assertTrue(bch_bound_check(CyclicReport(21, 0, True), 9, 0))

    def test_rejections(self):
        with self.assertRaises(InvalidExponentsError):
            bch_bound_check(CyclicReport(21, 8, True, d=6), 1, 1)
        with self.assertRaises(InvalidExponentsError):
            bch_bound_check(CyclicReport(21, 8, True, d=6), 0, 0)
        with self.assertRaises(CycloGoppaError):
            bch_bound_check(CyclicReport(21, 11, True), 3, 0)

    def test_consecutive_roots(self):
        sp = spectral_of(6, 21)
        u, _ = predict_generator(sp, 3, 0)
        report = CyclicReport(21, 21 - u.degree, True, u, x_n_minus_1(21) // u, d=6)
        self.assertTrue(bch_bound_check(report, 3, 0, sp))
        # the generator for t built on rho lacks the run on rho^-1
        v, _ = predict_generator(sp, 0, 3)
        report = CyclicReport(21, 21 - v.degree, True, v, x_n_minus_1(21) // v, d=6)
        self.assertFalse(bch_bound_check(report, 3, 0, sp))
