import math

import numpy as np
from django.test import SimpleTestCase

from bounds.theorems import bound_cl, norm_bound
from core.exceptions import EvaluationError
from maminda.classes import LIMACON_S_MAX, ClassSpec, Family
from maminda.fields import (
    PreSchwarzianField, extremal_preschwarzian, koebe_preschwarzian,
    zero_preschwarzian,
)
from rootfind.equations import root_cl_closed

from ..grid import GridSpec
from ..search import (
    becker_functional, golden_section_max, sup_hyperbolic_norm,
    sup_on_positive_axis,
)


GRID = GridSpec(128, 256, 1 - 1e-8)
AXIS_S = {
    Family.STAR_HYP: (0.25, 0.5, 0.75),
    Family.CONV_HYP: (0.25, 0.5, 0.75),
    Family.CONV_LIMACON: (0.25, 0.5, 0.7),
}


class GoldenSectionTests(SimpleTestCase):
    def test_interior_maximum(self):
        x, value = golden_section_max(lambda t: -(t - 0.3) ** 2, 0, 1)
        self.assertAlmostEqual(x, 0.3, delta=1e-8)
        self.assertAlmostEqual(value, 0, places=14)

    def test_maximum_at_an_endpoint(self):
        x, value = golden_section_max(lambda t: t, 0.2, 0.7)
        self.assertEqual(x, 0.7)
        self.assertEqual(value, 0.7)

    def test_reversed_interval(self):
        x, _ = golden_section_max(lambda t: -abs(t - 0.5), 1, 0)
        self.assertAlmostEqual(x, 0.5, delta=1e-8)


class SupNormTests(SimpleTestCase):
    def test_zero_field(self):
        for search in (sup_hyperbolic_norm, becker_functional):
            with self.subTest(search=search.__name__):
                self.assertEqual(search(zero_preschwarzian(), GRID).value, 0)
        self.assertEqual(sup_on_positive_axis(zero_preschwarzian(), GRID).value, 0)

    def test_koebe_norm_is_six(self):
        result = sup_hyperbolic_norm(koebe_preschwarzian(), GRID)
        self.assertAlmostEqual(result.value, 6, delta=1e-6)
        self.assertLess(abs(result.arg_theta), 1e-6)
        self.assertGreater(result.arg_r, 0.999)

    def test_extremal_fields_reach_the_published_bounds(self):
        cases = [
            (ClassSpec(Family.STAR_HYP, 0.5), 1.45876),
            (ClassSpec(Family.CONV_HYP, 0.75), 1.06896),
        ]
        for spec, expected in cases:
            with self.subTest(spec=str(spec)):
                result = sup_hyperbolic_norm(extremal_preschwarzian(spec), GRID)
                self.assertAlmostEqual(result.value, expected, delta=1e-4)

    def test_supremum_sits_on_the_positive_axis(self):
        for family, values in AXIS_S.items():
            for s in values:
                field = extremal_preschwarzian(ClassSpec(family, s))
                with self.subTest(family=family.value, s=s):
                    disk = sup_hyperbolic_norm(field, GRID)
                    axis = sup_on_positive_axis(field, GRID)
                    self.assertAlmostEqual(disk.value, axis.value, delta=1e-6)

    def test_theorem_bounds_majorize_the_extremal_norms(self):
        for family in Family:
            top = min(0.9, family.s_max)
            for s in np.linspace(0.1, top, 5):
                spec = ClassSpec(family, s)
                with self.subTest(spec=str(spec)):
                    result = sup_hyperbolic_norm(
                        extremal_preschwarzian(spec), GRID, upper_half=True,
                    )
                    self.assertLessEqual(
                        result.value, norm_bound(spec).bound + 1e-9
                    )

    def test_starlike_limacon_maximum_is_off_the_positive_axis(self):
        field = extremal_preschwarzian(ClassSpec(Family.STAR_LIMACON, 0.5))
        disk = sup_hyperbolic_norm(field, GRID)
        axis = sup_on_positive_axis(field, GRID)
        self.assertGreater(disk.value, axis.value)
        self.assertAlmostEqual(abs(disk.arg_theta), math.pi, delta=1e-6)

    def test_upper_half_search_matches_full_search(self):
        for family in Family:
            field = extremal_preschwarzian(ClassSpec(family, 0.5))
            with self.subTest(family=family.value):
                full = sup_hyperbolic_norm(field, GRID)
                half = sup_hyperbolic_norm(field, GRID, upper_half=True)
                self.assertAlmostEqual(full.value, half.value, delta=1e-12)

    def test_result_does_not_depend_on_threads(self):
        field = extremal_preschwarzian(ClassSpec(Family.CONV_HYP, 0.5))
        results = {
            threads: sup_hyperbolic_norm(field, GRID, threads=threads)
            for threads in (1, 2, 4)
        }
        self.assertEqual(results[1], results[2])
        self.assertEqual(results[1], results[4])

    def test_finer_grid_does_not_fall_below(self):
        for family in Family:
            field = extremal_preschwarzian(ClassSpec(family, 0.5))
            with self.subTest(family=family.value):
                coarse = sup_hyperbolic_norm(field, GridSpec(32, 64, GRID.r_max))
                fine = sup_hyperbolic_norm(field, GridSpec(128, 256, GRID.r_max))
                self.assertLessEqual(coarse.value, fine.value + 1e-8)

    def test_result_stays_in_range(self):
        field = extremal_preschwarzian(ClassSpec(Family.STAR_LIMACON, 0.3))
        result = sup_hyperbolic_norm(field, GRID)
        self.assertGreaterEqual(result.value, 0)
        self.assertTrue(0 <= result.arg_r <= GRID.r_max)
        self.assertTrue(-math.pi < result.arg_theta <= math.pi)


class PositiveAxisTests(SimpleTestCase):
    def test_convex_limacon_matches_the_closed_form(self):
        for s in (0.1, 0.3, 0.5, LIMACON_S_MAX):
            field = extremal_preschwarzian(ClassSpec(Family.CONV_LIMACON, s))
            with self.subTest(s=s):
                result = sup_on_positive_axis(field, GRID)
                self.assertAlmostEqual(result.value, bound_cl(s).bound, delta=1e-8)
                self.assertAlmostEqual(result.arg_r, root_cl_closed(s), delta=1e-6)
                self.assertEqual(result.arg_theta, 0)

    def test_starlike_hyperbola_at_s_one(self):
        field = extremal_preschwarzian(ClassSpec(Family.STAR_HYP, 1))
        result = sup_on_positive_axis(field, GRID)
        self.assertAlmostEqual(result.value, 4, delta=1e-4)


class BeckerTests(SimpleTestCase):
    def test_koebe(self):
        result = becker_functional(koebe_preschwarzian(), GRID)
        self.assertAlmostEqual(result.value, 6, delta=1e-6)

    def test_convex_hyperbola_is_certified_univalent(self):
        field = extremal_preschwarzian(ClassSpec(Family.CONV_HYP, 0.25))
        self.assertLess(becker_functional(field, GRID).value, 1)

    def test_becker_never_exceeds_the_norm(self):
        for family in Family:
            field = extremal_preschwarzian(ClassSpec(family, 0.5))
            with self.subTest(family=family.value):
                self.assertLessEqual(
                    becker_functional(field, GRID).value,
                    sup_hyperbolic_norm(field, GRID).value + 1e-12,
                )


class EvaluationFailureTests(SimpleTestCase):
    def test_non_finite_values_are_located(self):
        field = PreSchwarzianField(
            'pole', lambda z: np.where(np.abs(z) > 0.5, np.inf, 0).astype(complex)
        )
        with self.assertRaisesMessage(EvaluationError, 'grid node'):
            sup_hyperbolic_norm(field, GRID)

    def test_evaluator_errors_carry_the_location(self):
        def evaluator(z):
            raise EvaluationError('broken', z.flat[-1])

        with self.assertRaises(EvaluationError) as caught:
            sup_hyperbolic_norm(PreSchwarzianField('broken', evaluator), GRID)
        self.assertIn('grid node r=', str(caught.exception))
        self.assertIsNotNone(caught.exception.point)
