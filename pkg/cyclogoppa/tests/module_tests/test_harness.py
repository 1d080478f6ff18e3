import json
import os
import time
import unittest
from unittest import mock
import warnings

from cyclogoppa.harness import (
    EXAMPLE_IDS,
    PRINTED_GENERATORS,
    CaseSpec,
    VerificationHarness,
    find_matrix,
    printed_factor_multipliers,
    reproduce_example,
    run_case,
    summarize,
    sweep,
)
from cyclogoppa.utils.constants import (
    SWEEP_BASE_DEGREES,
    SWEEP_DEFAULT_COUNT,
    SWEEP_DEFAULT_SEED,
    SWEEP_MAX_EXPONENT,
)
from cyclogoppa.utils.exceptions import (
    CycloGoppaError,
    LiteralParseError,
    PrintedFactorWarning,
    UnknownExampleError,
)
from cyclogoppa.utils.utility import parse_binary_poly

GOLDEN_DIR = os.path.join(
    os.path.dirname(os.path.abspath(__file__)), os.pardir, os.pardir, os.pardir, "golden"
)


def toy(**kwargs):
    kwargs.setdefault("label", "toy")
    return CaseSpec(m=3, matrix=("0", "1", "1", "g^5"), **kwargs)


class CaseSpecTest(unittest.TestCase):
    def test_matrix_literal(self):
        spec = CaseSpec(label="lit", m=3, matrix="[[0, 1], [1, g^5]]")
        self.assertEqual(spec.matrix, ("0", "1", "1", "g^5"))
        self.assertEqual(CaseSpec.from_dict(spec.to_dict()).matrix, spec.matrix)

    def test_validation(self):
        with self.assertRaises(LiteralParseError):
            CaseSpec(label="none", m=3)
        with self.assertRaises(LiteralParseError):
            toy(variant="shortened")
        with self.assertRaises(CycloGoppaError):
            toy(expected={"k": 3})

    def test_from_dict(self):
        data = {"field": "m=6,gen=0b10", "matrix": "[[g^7,0],[1,g^56]]", "goppa": ["0", "1"]}
        spec = CaseSpec.from_dict(data, default_label="stem")
        self.assertEqual((spec.label, spec.m, spec.gen), ("stem", 6, "0b10"))
        self.assertEqual(spec.goppa, ("0", "1"))
        self.assertEqual(CaseSpec.from_dict(dict(data, label="own")).label, "own")
        for bad in (data, [1], {"label": "x", "m": 3, "matrix": "[[0,1],[1,g]]", "colour": 1}):
            with self.assertRaises(LiteralParseError):
                CaseSpec.from_dict(bad)

    def test_goppa_literals(self):
        self.assertEqual(toy(goppa="g^3, 1").goppa, ("g^3", "1"))
        with self.assertRaises(LiteralParseError):
            toy(goppa="")
        with self.assertRaises(LiteralParseError):
            toy(goppa=("0", "1"), base_coefficients=True)
        with self.assertRaises(LiteralParseError):
            CaseSpec(label="recipe", m=4, recipe={"seed": 1})

    def test_find_matrix_is_deterministic(self):
        self.assertEqual(find_matrix(6, 21), find_matrix(6, 21))
        self.assertEqual(len(find_matrix(4, 17)), 4)


class RunCaseTest(unittest.TestCase):
    def test_extended_toy(self):
        res = run_case(toy(support="orbit-infty", variant="extended"))
        self.assertEqual(res.status, "passed")
        self.assertTrue(res.match)
        self.assertEqual((res.report.n, res.report.k, res.report.d), (7, 3, 4))
        self.assertEqual(res.factor_degrees(), [1, 3])
        self.assertEqual(res.branch, "reducible")
        self.assertEqual(res.order, 7)
        self.assertEqual(len(res.support), 6)
        self.assertTrue(res.checks["oracle"])
        self.assertTrue(res.checks["designed_distance"])
        json.dumps(res.to_dict(include_timing=True))

    def test_expurgated_toy_has_no_affine_orbit(self):
        res = run_case(toy())
        self.assertTrue(res.skipped)
        self.assertFalse(res.match)
        self.assertEqual(res.error["kind"], "unsupported-case")

    def test_fixed_infinity_is_skipped(self):
        res = run_case(CaseSpec(label="c0", m=3, matrix=("g", "1", "0", "1")))
        self.assertEqual(res.status, "skipped")
        self.assertEqual(res.error["kind"], "unsupported-case")

    def test_order_two_is_skipped(self):
        res = run_case(CaseSpec(label="inv", m=3, matrix=("0", "1", "1", "0")))
        self.assertEqual(res.error["kind"], "excluded-order-2")

    def test_expected_values(self):
        spec = CaseSpec(
            label="order-nine",
            m=6,
            matrix=("g^7", "0", "1", "g^56"),
            expected={"n": 9, "k": 2, "d": 6, "generator": "0xdb"},
            provenance="hand check",
        )
        res = run_case(spec)
        self.assertTrue(res.match)
        self.assertTrue(res.checks["expected_generator"])

        spec.expected = {"k": 3}
        self.assertEqual(run_case(spec).status, "failed")

    def test_gf2_irreducible_map(self):
        res = run_case(
            CaseSpec(label="gf2", m=1, matrix=("0", "1", "1", "1"), variant="extended")
        )
        self.assertEqual(res.branch, "irreducible")
        self.assertEqual(res.order, 3)
        self.assertTrue(res.match)

    def test_plain_variant(self):
        res = run_case(CaseSpec(label="plain", m=6, matrix=("g^7", "0", "1", "g^56"), variant="plain"))
        self.assertTrue(res.checks["constructed"])
        self.assertIsNone(res.predicted)
        self.assertIn("prediction unavailable for plain codes", res.notes)

    def test_zero_code(self):
        res = run_case(toy(support="orbit-infty", variant="extended", s=3, t=3))
        self.assertTrue(res.match)
        self.assertEqual(res.report.k, 0)
        self.assertTrue(res.checks["zero_code"])
        self.assertTrue(any(note.startswith("zero-code") for note in res.notes))

    def test_explicit_orbit_support(self):
        spec = CaseSpec(
            label="orbit-of", m=6, matrix=("g^7", "0", "1", "g^56"), support="orbit-of:g^2"
        )
        res = run_case(spec)
        self.assertTrue(res.match)
        self.assertEqual(len(res.support), 9)

        spec.support = "orbit-of:0"
        with self.assertRaises(CycloGoppaError):
            run_case(spec)
        spec.support = "orbit-infty"
        with self.assertRaises(CycloGoppaError):
            run_case(spec)

    def test_explicit_goppa_polynomial(self):
        base = dict(m=6, matrix=("g^7", "0", "1", "g^56"), support="orbit-of:g^2")
        ref = run_case(CaseSpec(label="pair", s=2, t=1, **base))
        res = run_case(CaseSpec(label="explicit", goppa=ref.goppa_polynomial, **base))
        self.assertEqual(res.exponents, (2, 1))
        self.assertTrue(res.match)
        self.assertEqual(res.report.generator, ref.report.generator)
        self.assertEqual((res.to_dict()["s"], res.to_dict()["t"]), (2, 1))

        # irreducible quintic over GF(2), rootless in GF(2^6)
        other = run_case(CaseSpec(label="quintic", goppa="1,0,1,0,0,1", **base))
        self.assertIsNone(other.exponents)
        self.assertIsNone(other.predicted)
        self.assertTrue(other.match)
        self.assertTrue(other.checks["cyclic_if_invariant"])
        self.assertTrue(other.notes[-1].startswith("prediction unavailable: g is not g1^s g2^t"))
        self.assertIsNone(other.to_dict()["s"])

    def test_semilinear_map(self):
        spec = CaseSpec(label="semilinear", m=3, matrix=("0b111", "0b11", "1", "0b11"), frob=1)
        res = run_case(spec)
        self.assertEqual(res.status, "passed")
        self.assertIsNone(res.branch)
        self.assertIsNone(res.exponents)
        self.assertEqual(res.order, 6)
        self.assertEqual(len(res.support), 6)
        self.assertEqual(res.goppa_polynomial, ["g^4", "1"])
        self.assertTrue(res.report.is_cyclic)
        self.assertEqual((res.report.n, res.report.k, res.report.d), (6, 2, 4))
        self.assertEqual(res.report.generator, parse_binary_poly("0x1b"))
        self.assertIsNone(res.factor_degrees())
        self.assertNotIn("generator_factors", res.to_dict())

        spec.goppa = ("g^4", "1")
        again = run_case(spec)
        self.assertTrue(again.checks["cyclic_if_invariant"])
        self.assertEqual(again.report.generator, res.report.generator)

    def test_semilinear_map_covering_the_line(self):
        res = run_case(CaseSpec(label="semilinear-full", m=3, matrix=("0", "1", "1", "g"), frob=1))
        self.assertTrue(res.skipped)
        self.assertEqual(res.order, 9)
        self.assertEqual(res.error["kind"], "unsupported-case")


class ExampleTest(unittest.TestCase):
    def test_examples_against_golden(self):
        harness = VerificationHarness()
        for example_id in EXAMPLE_IDS:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", PrintedFactorWarning)
                results = harness.reproduce_example(example_id, golden_dir=GOLDEN_DIR)
            self.assertTrue(results)
            for res in results:
                self.assertTrue(res.match, msg="{}: {}".format(res.label, res.notes))
                self.assertTrue(res.checks["golden"])
                self.assertTrue(res.checks["printed_factors"], msg=res.label)

    def test_printed_factor_warning(self):
        with self.assertWarns(PrintedFactorWarning):
            results = reproduce_example("3.20")
        self.assertTrue(all("x^6+x^5+x^4+x^2+1" in res.notes[0] for res in results))

    def test_wrong_printed_factors_fail(self):
        wrong = {(1, 0): ["x+1", "x^3+x+1", "x^3+x^2+1"]}
        with mock.patch.dict(PRINTED_GENERATORS["3.12"], wrong):
            results = reproduce_example("3.12")
        for res in results:
            self.assertFalse(res.checks["printed_factors"], msg=res.label)
            self.assertEqual(res.status, "failed")
        self.assertTrue(any("under no common x -> x^k" in note for note in results[0].notes))

    def test_printed_factor_multipliers(self):
        bp = parse_binary_poly
        one, m1, m2 = bp("x+1"), bp("x^6+x^4+x^2+x+1"), bp("x^6+x^5+x^4+x^2+1")
        self.assertIn(20, printed_factor_multipliers(21, [one, m1], [one, m2]))
        self.assertNotIn(1, printed_factor_multipliers(21, [one, m1], [one, m2]))
        self.assertIn(1, printed_factor_multipliers(21, [one, m1], [one, m1]))
        self.assertEqual(printed_factor_multipliers(21, [one, m1], [one, m1, bp("x^3+x+1")]), set())
        self.assertEqual(printed_factor_multipliers(21, [one, bp("x^3+x+1")], [one, bp("x^2+x+1")]), set())

    def test_self_reciprocal_check(self):
        results = reproduce_example("3.14")
        self.assertTrue(all(res.checks["self_reciprocal"] for res in results))

    def test_unknown_example(self):
        with self.assertRaises(UnknownExampleError):
            reproduce_example("9.99")


class SweepTest(unittest.TestCase):
    def test_empty_sweep(self):
        summary, results = sweep(0, seed=1)
        self.assertEqual(results, [])
        self.assertEqual(summary["total"], 0)
        self.assertIsNone(summary["exponents"])

    def test_small_sweep(self):
        harness = VerificationHarness()
        summary, results = harness.sweep(8, seed=5, base_degrees=(3, 4), max_exponent=3)
        self.assertEqual(summary["total"], 8)
        self.assertEqual(summary["failed"], 0, msg=summary["failures"])
        self.assertEqual(summarize(results, seed=5), summary)
        again, _ = harness.sweep(8, seed=5, base_degrees=(3, 4), max_exponent=3)
        self.assertEqual(again, summary)

    def test_default_constants(self):
        summary, results = VerificationHarness().sweep(20, seed=SWEEP_DEFAULT_SEED)
        self.assertEqual(summary["total"], 20)
        self.assertEqual(summary["failed"], 0, msg=summary["failures"])
        self.assertLessEqual(summary["exponents"]["s"][1], SWEEP_MAX_EXPONENT)
        for res in results:
            if res.skipped:
                continue
            self.assertIn(res.spec.m, SWEEP_BASE_DEGREES)
            n = res.report.n
            self.assertEqual(res.report.k == 0, res.predicted.degree == n, msg=res.label)
            if sum(res.exponents) >= n - 1:
                self.assertEqual(res.report.k, 0, msg=res.label)

    @unittest.skipUnless(
        os.environ.get("CYCLOGOPPA_FULL_SWEEP"), "set CYCLOGOPPA_FULL_SWEEP=1 for the full campaign"
    )
    def test_full_default_campaign(self):
        start = time.perf_counter()
        summary, _ = VerificationHarness().sweep(SWEEP_DEFAULT_COUNT, seed=SWEEP_DEFAULT_SEED)
        elapsed = time.perf_counter() - start
        self.assertEqual(summary["total"], SWEEP_DEFAULT_COUNT)
        self.assertEqual(summary["failed"], 0, msg=summary["failures"])
        self.assertLess(elapsed, 60.0)

    def test_threaded_sweep_matches(self):
        single, _ = sweep(4, seed=9, base_degrees=(4,))
        threaded, _ = sweep(4, seed=9, base_degrees=(4,), num_threads=2)
        self.assertEqual(single, threaded)

    def test_semilinear_sweep(self):
        summary, _ = sweep(4, seed=2, semilinear=True, base_degrees=(4,))
        self.assertEqual(
            summary["passed"] + summary["failed"] + summary["skipped"], summary["total"]
        )
        self.assertEqual(summary["branches"]["reducible"], 0)
        self.assertEqual(summary["branches"]["irreducible"], 0)

    def test_degree_limit(self):
        with self.assertRaises(CycloGoppaError):
            VerificationHarness().sweep(1, seed=0, base_degrees=(12,))
