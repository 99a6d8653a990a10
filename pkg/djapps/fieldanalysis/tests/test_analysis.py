import numpy as np
from django.test import SimpleTestCase

from djapps.core.exceptions import DomainError
from djapps.fieldfit.fields import PUBLISHED_INTERCEPTS, PUBLISHED_SLOPES, Rectangle, RiskField, paper_field
from ..analysis import (
    certify_no_critical_points,
    critical_points,
    gradient,
    mean_risk,
    monte_carlo_area,
    risk_probability,
    risk_region_area,
    simpson_mean_risk,
)


class GradientTests(SimpleTestCase):
    def test_matches_finite_differences(self):
        field = paper_field()
        h = 1e-6
        for t, c in ((1.3, 0.4), (2.5, 1.9), (4.8, 3.2)):
            r_t, r_c = gradient(field, t, c)
            self.assertAlmostEqual(r_t, (field(t + h, c) - field(t - h, c)) / (2 * h), places=5)
            self.assertAlmostEqual(r_c, (field(t, c + h) - field(t, c - h)) / (2 * h), places=5)

    def test_random_points(self):
        field = paper_field()
        rng = np.random.default_rng(5)
        t = rng.uniform(1, 5, 1000)
        c = rng.uniform(0.2, 3.5, 1000)
        h = 1e-6
        r_t, r_c = gradient(field, t, c)
        np.testing.assert_allclose(
            r_t, (field(t + h, c) - field(t - h, c)) / (2 * h), rtol=1e-5, atol=1e-7)
        np.testing.assert_allclose(
            r_c, (field(t, c + h) - field(t, c - h)) / (2 * h), rtol=1e-5, atol=1e-7)

    def test_vectorized(self):
        ts = np.linspace(1, 5, 7)
        r_t, r_c = gradient(paper_field(), ts, 1.0)
        self.assertEqual(np.shape(r_t), (7,))
        self.assertEqual(np.shape(r_c), (7,))


class CertificateTests(SimpleTestCase):
    def test_published_field(self):
        certificate = certify_no_critical_points(paper_field())
        self.assertFalse(certificate.has_critical_points)
        self.assertEqual(certificate.dRdc_roots, ())
        self.assertGreater(certificate.min_dRdc_on_domain, 0.0)
        self.assertAlmostEqual(certificate.min_location, 1.0)
        self.assertAlmostEqual(certificate.min_dRdc_on_domain, 0.01, places=9)

    def test_shifted_slope(self):
        """Lowering a0 by 0.02 puts a root of dR/dc just right of t = 1."""
        slopes = (PUBLISHED_SLOPES[0] - 0.02,) + PUBLISHED_SLOPES[1:]
        field = RiskField(slopes, PUBLISHED_INTERCEPTS)
        certificate = certify_no_critical_points(field)
        self.assertEqual(len(certificate.dRdc_roots), 1)
        self.assertAlmostEqual(certificate.dRdc_roots[0], 1.0011, delta=5e-4)
        self.assertLess(certificate.min_dRdc_on_domain, 0.0)
        # the matching concentration lies far outside [0.2, 3.5]
        self.assertFalse(certificate.has_critical_points)

    def test_interior_critical_point(self):
        # R = (t - 2) c + (t - 3)^2 / 2 is stationary at (2, 1)
        field = RiskField((-2.0, 1.0), (4.5, -3.0, 0.5))
        points, lines = critical_points(field, field.domain)
        self.assertEqual(lines, [])
        self.assertEqual(len(points), 1)
        np.testing.assert_allclose(points[0], (2.0, 1.0), atol=1e-9)
        self.assertTrue(certify_no_critical_points(field).has_critical_points)

    def test_constant_field(self):
        certificate = certify_no_critical_points(RiskField((0.0,), (1.0,)))
        self.assertTrue(certificate.degenerate)
        self.assertTrue(certificate.has_critical_points)
        self.assertEqual(certificate.min_dRdc_on_domain, 0.0)


class DenseSamplingTests(SimpleTestCase):
    """The certificate against 10^5 samples of dR/dc and of the gradient."""

    def test_published_minimum(self):
        field = paper_field()
        certificate = certify_no_critical_points(field)
        ts = np.linspace(1, 5, 100_000)
        sampled = field.slope(ts)
        self.assertGreaterEqual(sampled.min(), certificate.min_dRdc_on_domain - 1e-12)
        self.assertAlmostEqual(sampled.min(), certificate.min_dRdc_on_domain, delta=1e-6)

    def test_gradient_never_vanishes(self):
        field = paper_field()
        rng = np.random.default_rng(9)
        r_t, r_c = gradient(field, rng.uniform(1, 5, 100_000), rng.uniform(0.2, 3.5, 100_000))
        self.assertGreater(np.hypot(r_t, r_c).min(), 0.0)

    def test_random_fields(self):
        rng = np.random.default_rng(13)
        ts = np.linspace(1, 5, 100_000)
        for _ in range(20):
            field = RiskField(tuple(rng.uniform(-1, 1, 5)), tuple(rng.uniform(-1, 1, 5)))
            certificate = certify_no_critical_points(field)
            sampled = field.slope(ts)
            self.assertAlmostEqual(sampled.min(), certificate.min_dRdc_on_domain, delta=1e-6)
            changes = np.count_nonzero(np.diff(np.sign(sampled)) != 0)
            self.assertEqual(changes, len(certificate.dRdc_roots))


class MeanRiskTests(SimpleTestCase):
    def test_published_value(self):
        self.assertAlmostEqual(mean_risk(paper_field()), 5.560, delta=5e-3)

    def test_matches_simpson(self):
        field = paper_field()
        self.assertAlmostEqual(mean_risk(field), simpson_mean_risk(field), delta=1e-8)

    def test_sub_domain(self):
        field = paper_field()
        domain = Rectangle(2.0, 3.0, 1.0, 2.0)
        self.assertAlmostEqual(mean_risk(field, domain), simpson_mean_risk(field, domain), delta=1e-8)

    def test_outside_field_domain(self):
        with self.assertRaises(DomainError):
            mean_risk(paper_field(), Rectangle(0.0, 5.0, 0.2, 3.5))


class RiskRegionTests(SimpleTestCase):
    def test_published_area(self):
        region = risk_region_area(paper_field())
        self.assertEqual(region.method, 'exact')
        self.assertAlmostEqual(region.area, 12.5706, delta=1e-4)
        self.assertAlmostEqual(risk_probability(paper_field()), 0.952, delta=0.001)

    def test_midpoint_grid_agrees(self):
        field = paper_field()
        domain = field.domain
        n = 2000
        ts = domain.t_min + (np.arange(n) + 0.5) * (domain.t_max - domain.t_min) / n
        cs = domain.c_min + (np.arange(n) + 0.5) * (domain.c_max - domain.c_min) / n
        inside = np.count_nonzero(field(ts[:, None], cs[None, :]) >= 1.0)
        self.assertAlmostEqual(inside / n ** 2 * domain.area, risk_region_area(field).area, delta=2e-3)

    def test_monte_carlo_agrees(self):
        field = paper_field()
        exact = risk_region_area(field).area
        estimate = monte_carlo_area(field, field.domain, samples=200_000, seed=7)
        self.assertLess(abs(estimate.area - exact), 4 * estimate.standard_error + 1e-9)

    def test_monotone_in_threshold(self):
        field = paper_field()
        probabilities = [risk_probability(field, threshold=x) for x in (0.5, 1.0, 2.0, 5.0, 10.0, 20.0)]
        self.assertTrue(all(a >= b for a, b in zip(probabilities, probabilities[1:])))

    def test_extreme_thresholds(self):
        field = paper_field()
        self.assertEqual(risk_probability(field, threshold=100.0), 0.0)
        self.assertAlmostEqual(risk_probability(field, threshold=-100.0), 1.0)

    def test_monte_carlo_fallback(self):
        slopes = (PUBLISHED_SLOPES[0] - 0.02,) + PUBLISHED_SLOPES[1:]
        field = RiskField(slopes, PUBLISHED_INTERCEPTS)
        region = risk_region_area(field, samples=10_000, seed=3)
        self.assertEqual(region.method, 'monte_carlo')
        self.assertEqual(region.samples, 10_000)
        self.assertEqual(region, risk_region_area(field, samples=10_000, seed=3))


class RandomFieldTests(SimpleTestCase):
    def setUp(self):
        self.rng = np.random.default_rng(20)

    def random_field(self):
        return RiskField(tuple(self.rng.uniform(-1, 1, 5)), tuple(self.rng.uniform(-1, 1, 5)))

    def test_mean_matches_simpson(self):
        for _ in range(20):
            field = self.random_field()
            self.assertAlmostEqual(mean_risk(field), simpson_mean_risk(field), delta=1e-8)

    def test_constant_mean(self):
        self.assertEqual(mean_risk(RiskField((0.0,), (2.5,))), 2.5)

    def test_zero_gradient(self):
        self.assertEqual(gradient(RiskField((0.0,), (0.0,)), 2.0, 1.0), (0.0, 0.0))

    def test_area_matches_monte_carlo(self):
        # g(t) = 1 + t^2 / 10 stays positive, so the exact reduction applies
        for _ in range(5):
            b = tuple(self.rng.uniform(-1, 1, 3))
            field = RiskField((1.0, 0.0, 0.1), b)
            exact = risk_region_area(field, threshold=2.0)
            self.assertEqual(exact.method, 'exact')
            estimate = monte_carlo_area(field, field.domain, threshold=2.0, samples=100_000, seed=1)
            self.assertLess(abs(estimate.area - exact.area), 4 * estimate.standard_error + 1e-9)
