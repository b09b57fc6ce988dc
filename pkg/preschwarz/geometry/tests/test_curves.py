import math

import numpy as np
from django.test import SimpleTestCase

from core.exceptions import DomainError, SpecRangeError
from maminda.classes import LIMACON_S_MAX, ClassSpec, Family
from rootfind.equations import root_cl_closed

from ..curves import (
    CurveSamples, critical_curve, hyperbola_boundary, limacon_boundary,
    limacon_residual,
)


def zero_crossing(curve):
    values = curve.ys
    index = int(np.flatnonzero(np.diff(np.sign(values)) != 0)[0])
    return curve.xs[index], curve.xs[index + 1]


class HyperbolaBoundaryTests(SimpleTestCase):
    def test_vertex(self):
        for s in (0.25, 0.5, 1.0):
            with self.subTest(s=s):
                curve = hyperbola_boundary(s, 101)
                x, y = curve.points[50]
                self.assertAlmostEqual(x, 2 ** -s, places=15)
                self.assertEqual(y, 0)

    def test_half_plane_case(self):
        curve = hyperbola_boundary(1, 201)
        np.testing.assert_allclose(curve.xs, 0.5, atol=1e-12)

    def test_points_lie_in_the_sector(self):
        for s in (0.2, 0.5, 0.9):
            with self.subTest(s=s):
                curve = hyperbola_boundary(s, 400)
                angles = np.arctan2(curve.ys, curve.xs)
                self.assertTrue(np.all(np.abs(angles) < math.pi * s / 2))
                self.assertTrue(np.all(curve.xs > 0))

    def test_conjugate_symmetry(self):
        curve = hyperbola_boundary(0.6, 300)
        np.testing.assert_allclose(curve.xs, curve.xs[::-1], atol=1e-12)
        np.testing.assert_allclose(curve.ys, -curve.ys[::-1], atol=1e-12)

    def test_far_points_are_dropped(self):
        curve = hyperbola_boundary(1, 2000)
        self.assertLess(len(curve), 2000)
        self.assertTrue(np.all(np.hypot(curve.xs, curve.ys) <= 1e3))

    def test_invalid_arguments(self):
        with self.assertRaises(SpecRangeError):
            hyperbola_boundary(1.5, 10)
        with self.assertRaises(DomainError):
            hyperbola_boundary(0.5, 1)


class LimaconBoundaryTests(SimpleTestCase):
    def test_axis_points(self):
        s = 0.5
        curve = limacon_boundary(s, 64)
        np.testing.assert_allclose(curve.points[0], [(1 + s) ** 2, 0], atol=1e-15)
        np.testing.assert_allclose(curve.points[32], [(1 - s) ** 2, 0], atol=1e-12)

    def test_samples_satisfy_the_quartic(self):
        for s in (0.1, 0.5, LIMACON_S_MAX):
            with self.subTest(s=s):
                curve = limacon_boundary(s, 500)
                residual = limacon_residual(s, curve.xs, curve.ys)
                self.assertLess(np.max(np.abs(residual)), 1e-10)

    def test_quartic_is_not_trivially_zero(self):
        self.assertGreater(abs(limacon_residual(0.5, 1.0, 0.0)), 1e-3)

    def test_conjugate_symmetry(self):
        curve = limacon_boundary(0.4, 128)
        mirrored = curve.points[1:][::-1]
        np.testing.assert_allclose(curve.xs[1:], mirrored[:, 0], atol=1e-12)
        np.testing.assert_allclose(curve.ys[1:], -mirrored[:, 1], atol=1e-12)

    def test_out_of_range(self):
        with self.assertRaises(SpecRangeError):
            limacon_boundary(0.8, 10)


class CriticalCurveTests(SimpleTestCase):
    def test_zero_crossings(self):
        cases = [
            (ClassSpec(Family.STAR_HYP, 0.5), 0.765186),
            (ClassSpec(Family.CONV_LIMACON, 0.5), root_cl_closed(0.5)),
            (ClassSpec(Family.CONV_HYP, 0.25), 0.412132),
        ]
        for spec, root in cases:
            with self.subTest(spec=str(spec)):
                curve = critical_curve(spec, 1001)
                lo, hi = zero_crossing(curve)
                self.assertTrue(lo <= root <= hi, (lo, root, hi))

    def test_starlike_limacon_starts_near_three_s_squared(self):
        curve = critical_curve(ClassSpec(Family.STAR_LIMACON, 0.5), 100)
        self.assertEqual(curve.columns, ('t', 'value'))
        self.assertAlmostEqual(curve.ys[0], 0.75, delta=1e-4)

    def test_convex_limacon_is_the_quadratic(self):
        s = 0.5
        curve = critical_curve(ClassSpec(Family.CONV_LIMACON, s), 50)
        t = curve.xs
        np.testing.assert_allclose(curve.ys, s * s * (1 - 3 * t * t) - 4 * t * s)

    def test_hyperbolic_s_one_is_rejected(self):
        with self.assertRaises(SpecRangeError):
            critical_curve(ClassSpec(Family.CONV_HYP, 1), 10)


class CurveSamplesTests(SimpleTestCase):
    def test_validation(self):
        for points in ([], [[0, float('nan')]], [1, 2, 3]):
            with self.subTest(points=points):
                with self.assertRaises(DomainError):
                    CurveSamples('bad', points)
