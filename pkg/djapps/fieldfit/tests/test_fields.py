import json
import os
import tempfile

import numpy as np
from django.test import SimpleTestCase

from djapps.core.exceptions import DomainError, ParseError
from ..fields import (
    DEFAULT_DOMAIN,
    PUBLISHED_INTERCEPTS,
    PUBLISHED_SLOPES,
    Rectangle,
    RiskField,
    build_field,
    fit_coefficients,
    format_polynomial,
    load_field,
    paper_field,
)
from ..tables import (
    PUBLISHED_CONCENTRATIONS,
    PUBLISHED_INTERPOLANTS,
    PUBLISHED_UNROUNDED_LEADING,
    RiskTable,
    load_table,
    paper_interpolants,
    paper_risk_table,
)


class RectangleTests(SimpleTestCase):
    def test_area(self):
        self.assertAlmostEqual(DEFAULT_DOMAIN.area, 13.2)

    def test_from_string(self):
        self.assertEqual(Rectangle.from_string('1, 5, 0.2, 3.5'), DEFAULT_DOMAIN)

    def test_invalid(self):
        with self.assertRaises(DomainError):
            Rectangle(5, 1, 0, 1)
        with self.assertRaises(DomainError):
            Rectangle.from_string('1,2,3')


class PublishedFieldTests(SimpleTestCase):
    def setUp(self):
        self.field = paper_field()

    def test_coefficients(self):
        self.assertEqual(self.field.a, (-19.48, 33.17, -16.89, 3.45, -0.24))
        self.assertEqual(self.field.b, (-0.04, 0.09, -0.06, 0.007, 0.006))
        self.assertEqual(self.field.domain, DEFAULT_DOMAIN)

    def test_value(self):
        self.assertAlmostEqual(self.field(1.0, 0.27), 0.0057, delta=1e-4)

    def test_slope_is_dRdc(self):
        ts = np.linspace(1, 5, 17)
        g = -0.24 * ts ** 4 + 3.45 * ts ** 3 - 16.89 * ts ** 2 + 33.17 * ts - 19.48
        np.testing.assert_allclose(self.field(ts, 1.0) - self.field(ts, 0.0), g, atol=1e-12)

    def test_affine_in_c(self):
        t, c1, c2 = 2.7, 0.4, 3.1
        for lam in (0.0, 0.25, 0.5, 1.0):
            mixed = self.field(t, lam * c1 + (1 - lam) * c2)
            self.assertAlmostEqual(
                mixed, lam * self.field(t, c1) + (1 - lam) * self.field(t, c2), places=12)

    def test_surface_matches_field(self):
        surface = self.field.as_surface()
        self.assertTrue(surface.is_affine_in_c)
        self.assertAlmostEqual(surface(3.2, 1.7), self.field(3.2, 1.7), places=12)

    def test_round_trip_dict(self):
        self.assertEqual(RiskField.from_dict(self.field.to_dict()), self.field)

    def test_non_finite(self):
        with self.assertRaises(DomainError):
            RiskField((float('nan'),), (0.0,))


class BuildFieldTests(SimpleTestCase):
    def test_synthetic_round_trip(self):
        """Exact samples of c g(t) + h(t) rebuild g and h."""
        a = (0.5, -1.2, 0.3, 0.05, -0.01)
        b = (2.0, 0.1, -0.4, 0.02, 0.003)
        source = RiskField(a, b)
        nodes = (1.0, 2.0, 3.0, 4.0, 5.0)
        concentrations = (0.3, 1.5, 3.0)
        values = [[source(t, c) for t in nodes] for c in concentrations]
        field = build_field(RiskTable(concentrations, nodes, values))
        np.testing.assert_allclose(field.a, a, atol=1e-8)
        np.testing.assert_allclose(field.b, b, atol=1e-8)

    def test_published_interpolants(self):
        """Regressing the published quartics recovers the published field."""
        published = paper_interpolants()
        field = fit_coefficients(list(published), list(published.values()))
        np.testing.assert_allclose(field.a, PUBLISHED_SLOPES, atol=0.02)
        np.testing.assert_allclose(field.b, PUBLISHED_INTERCEPTS, atol=0.02)

    def test_published_table_interpolant(self):
        """Group coefficients at the stage ends reproduce the 0.27 mg/kg quartic."""
        p = paper_risk_table('stage_end').interpolants()[0]
        np.testing.assert_allclose(p.coef, PUBLISHED_INTERPOLANTS[0.27], atol=0.25)
        self.assertAlmostEqual(p.coef[-1], PUBLISHED_UNROUNDED_LEADING, delta=5e-4)

    def test_midpoint_placement(self):
        table = paper_risk_table('midpoint')
        self.assertEqual(table.nodes, (1.0, 1.5, 2.5, 3.5, 4.5))
        self.assertEqual(table.values[0][0], 0.0)

    def test_single_concentration(self):
        table = RiskTable((0.27,), (1, 2, 3, 4, 5), ((0, 1, 2, 3, 4),))
        with self.assertRaises(DomainError):
            build_field(table)

    def test_unknown_placement(self):
        with self.assertRaises(DomainError):
            paper_risk_table('left')


class FormatPolynomialTests(SimpleTestCase):
    def test_published_order(self):
        p = paper_interpolants()[0.27]
        self.assertEqual(format_polynomial(p), '-0.06 t^4 + 0.92 t^3 - 4.54 t^2 + 8.93 t - 5.25')

    def test_zero(self):
        self.assertEqual(format_polynomial(np.polynomial.Polynomial([0.0])), '0')


class TableFileTests(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w') as f:
            f.write(text)
        return path

    def write_bytes(self, name, data):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'wb') as f:
            f.write(data)
        return path

    def test_read_csv(self):
        path = self.write('table.csv', 'c,1,2,3,4,5\n0.27,0,0.804,0.342,0.204,0.388\n'
                          '2.43,0,7.237,3.077,1.834,3.490\n')
        table = load_table(path)
        self.assertEqual(table.concentrations, (0.27, 2.43))
        self.assertEqual(table.nodes, (1.0, 2.0, 3.0, 4.0, 5.0))

    def test_bad_cell_location(self):
        path = self.write('table.csv', 'c,1,2,3,4,5\n0.27,0,0.804,x,0.204,0.388\n')
        with self.assertRaises(ParseError) as ctx:
            load_table(path)
        self.assertEqual((ctx.exception.row, ctx.exception.column), (2, 4))
        self.assertIn('row 2, column 4', str(ctx.exception))

    def test_empty(self):
        with self.assertRaises(ParseError):
            load_table(self.write('table.csv', ''))

    def test_ragged_row(self):
        path = self.write('table.csv', 'c,1,2,3,4,5\n0.27,0,0.804\n')
        with self.assertRaises(ParseError) as ctx:
            load_table(path)
        self.assertEqual(ctx.exception.row, 2)

    def test_read_json(self):
        table = paper_risk_table()
        path = self.write('table.json', json.dumps(table.to_dict()))
        self.assertEqual(load_table(path), table)

    def test_field_file(self):
        path = self.write('field.json', json.dumps(paper_field().to_dict()))
        self.assertEqual(load_field(path), paper_field())

    def test_malformed_field_file(self):
        with self.assertRaises(ParseError):
            load_field(self.write('field.json', '{"a": [1, 2'))
        with self.assertRaises(ParseError):
            load_field(self.write('field.json', '{"b": [1, 2]}'))

    def test_invalid_utf8(self):
        path = self.write_bytes('table.csv', b'c,1,2,3,4,5\n0.27,0,\xff,0.342,0.204,0.388\n')
        with self.assertRaises(ParseError) as ctx:
            load_table(path)
        self.assertEqual((ctx.exception.row, ctx.exception.column), (2, 8))
        with self.assertRaises(ParseError):
            load_table(self.write_bytes('table.json', b'{"concentrations": "\xff"}'))
        with self.assertRaises(ParseError):
            load_field(self.write_bytes('field.json', b'\xfe\xff'))

    def test_concentrations(self):
        self.assertEqual(PUBLISHED_CONCENTRATIONS, (0.27, 2.43, 3.33))
