import json
import os
import tempfile
from io import StringIO
from unittest.mock import patch

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase


FAST = {'grid': 32, 'samples': 20000, 'seed': 42, 'step': 0.01, 'max_steps': 400}


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.out = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def call(self, name, *args, **kwargs):
        stdout = StringIO()
        kwargs.setdefault('out', self.out)
        call_command(name, *args, stdout=stdout, **kwargs)
        return stdout.getvalue()

    def read_json(self, name, directory=None):
        with open(os.path.join(directory or self.out, name)) as f:
            return json.load(f)

    def write(self, name, text):
        path = os.path.join(self.out, name)
        with open(path, 'w') as f:
            f.write(text)
        return path


class FitCommandTests(CommandTestCase):
    def test_published_dataset(self):
        output = self.call('fit', paper_dataset=True)
        self.assertIn('dR/dc = -0.24 t^4 + 3.45 t^3 - 16.89 t^2 + 33.17 t - 19.48', output)
        report = self.read_json('fit.json')
        self.assertLessEqual(report['regression']['max_deviation'], 0.02)
        self.assertEqual(len(report['interpolants']), 3)
        self.assertAlmostEqual(report['interpolants'][0]['coefficients'][-1],
                               report['published_unrounded_leading'], delta=5e-4)
        self.assertEqual(self.read_json('field.json')['a'], [-19.48, 33.17, -16.89, 3.45, -0.24])
        with open(os.path.join(self.out, 'interpolation.svg')) as f:
            self.assertTrue(f.read().startswith('<?xml'))

    def test_input_table(self):
        path = self.write('table.csv', 'c,1,2,3,4,5\n0.27,0,0.804,0.342,0.204,0.388\n'
                          '2.43,0,7.237,3.077,1.834,3.490\n3.33,0,9.918,4.216,2.513,4.783\n')
        self.call('fit', input=path)
        field = self.read_json('field.json')
        self.assertEqual(len(field['a']), 5)
        self.assertEqual(field['domain'], {'t': [1.0, 5.0], 'c': [0.2, 3.5]})

    def test_empty_input(self):
        path = self.write('empty.csv', '')
        with self.assertRaises(CommandError):
            self.call('fit', input=path)

    def test_undecodable_input(self):
        path = os.path.join(self.out, 'table.csv')
        with open(path, 'wb') as f:
            f.write(b'c,1,2,3,4,5\n0.27,0,\xff\xfe,0.342,0.204,0.388\n')
        with self.assertRaisesMessage(CommandError, 'row 2, column 8'):
            self.call('fit', input=path)

    def test_missing_input(self):
        with self.assertRaises(CommandError):
            self.call('fit', input=os.path.join(self.out, 'absent.csv'))

    def test_no_source(self):
        with self.assertRaises(CommandError):
            self.call('fit')


class AnalyzeCommandTests(CommandTestCase):
    def test_published_dataset(self):
        output = self.call('analyze', paper_dataset=True, levels='1,5', **FAST)
        self.assertIn('critical points: none', output)
        report = self.read_json('analysis.json')
        self.assertAlmostEqual(report['mean_risk'], 5.560, delta=5e-3)
        self.assertAlmostEqual(report['region_area'], 12.5706, delta=1e-4)
        self.assertAlmostEqual(report['probability'], 0.952, delta=0.001)
        self.assertEqual([level['level'] for level in report['levels']], [1.0, 5.0])
        self.assertEqual(report['published_region_area'], 12.92)
        self.assertEqual(report['published_probability'], 0.97)
        self.assertEqual(report['published_mean_risk'], 5.55)
        self.assertIn('printed: mean 5.55, region area 12.92, probability 0.97', output)
        self.assertTrue(os.path.exists(os.path.join(self.out, 'contours.svg')))

    def test_high_threshold(self):
        self.call('analyze', paper_dataset=True, threshold=100.0, **FAST)
        report = self.read_json('analysis.json')
        self.assertEqual(report['probability'], 0.0)
        self.assertEqual(report['monte_carlo']['area'], 0.0)

    def test_saved_field(self):
        self.call('fit', paper_dataset=True)
        field = os.path.join(self.out, 'field.json')
        self.call('analyze', field=field, domain='2,4,0.5,3', **FAST)
        report = self.read_json('analysis.json')
        self.assertEqual(report['domain'], {'t': [2.0, 4.0], 'c': [0.5, 3.0]})
        self.assertNotIn('published_region_area', report)

    def test_small_grid(self):
        with self.assertRaises(CommandError):
            self.call('analyze', paper_dataset=True, grid=4)


class GeometryCommandTests(CommandTestCase):
    def test_published_dataset(self):
        output = self.call('geometry', paper_dataset=True)
        self.assertIn('Hadamard surface: yes', output)
        self.assertEqual(output.count('t = '), 3)
        self.assertIn('(extrapolated)', output)
        report = self.read_json('geometry.json')
        self.assertEqual(report['extrapolated'], [False, False, True])
        self.assertTrue(os.path.exists(os.path.join(self.out, 'curvature.svg')))

    def test_domain_without_loci(self):
        output = self.call('geometry', paper_dataset=True, domain='4,5,0.2,3.5')
        self.assertIn('No zero-curvature loci.', output)
        self.assertEqual(self.read_json('geometry.json')['zero_loci'], [])


class FlowCommandTests(CommandTestCase):
    def test_starts(self):
        self.call('flow', paper_dataset=True, starts='2:1;3:0.5', step=0.01, max_steps=2000)
        report = self.read_json('flow.json')
        self.assertEqual(len(report['trajectories']), 2)
        for item in report['trajectories']:
            self.assertTrue(item['risk_increasing'])
            self.assertTrue(item['no_recurrence'])
        with open(os.path.join(self.out, 'trajectories.csv')) as f:
            self.assertEqual(f.readline().strip(), 'trajectory,tau,t,c,R')

    @patch('djapps.core.pipeline.batch_flow')
    def test_default_starts(self, batch_flow):
        from djapps.dynamics.flow import flow
        from djapps.fieldfit.fields import paper_field
        batch_flow.side_effect = lambda field, starts, step, max_steps: [
            flow(field, start, step, max_steps) for start in starts]
        self.call('flow', paper_dataset=True, step=0.01, max_steps=5)
        starts = batch_flow.call_args[0][1]
        self.assertEqual(len(starts), 9)
        self.assertTrue(all(paper_field().domain.contains(t, c) for t, c in starts))


class ExposureCommandTests(CommandTestCase):
    def test_published_dataset(self):
        output = self.call('exposure', paper_dataset=True)
        self.assertIn('NOT acceptable', output)
        with open(os.path.join(self.out, 'exposure.csv')) as f:
            rows = f.read().splitlines()
        self.assertTrue(rows[0].startswith('group,concentration,reference_dose'))
        self.assertEqual(len(rows), 13)
        self.assertEqual(len(self.read_json('exposure.json')['profiles']), 12)

    def test_field_rejected(self):
        with self.assertRaises(CommandError):
            self.call('exposure', field='field.json')


class ReportCommandTests(CommandTestCase):
    def test_deterministic(self):
        first = os.path.join(self.out, 'first')
        second = os.path.join(self.out, 'second')
        self.call('report', paper_dataset=True, out=first, **FAST)
        self.call('report', paper_dataset=True, out=second, **FAST)
        with open(os.path.join(first, 'report.json'), 'rb') as a, \
                open(os.path.join(second, 'report.json'), 'rb') as b:
            self.assertEqual(a.read(), b.read())
        report = self.read_json('report.json', first)
        self.assertEqual(set(report), {'fit', 'analysis', 'geometry', 'flow', 'exposure'})


class FlatFieldTests(CommandTestCase):
    def test_geometry_notice(self):
        path = self.write('flat.json', json.dumps({'a': [1.0], 'b': [0.0, 2.0]}))
        output = self.call('geometry', field=path)
        self.assertIn('R_tc vanishes identically', output)
        self.assertTrue(self.read_json('geometry.json')['degenerate'])
        self.assertFalse(os.path.exists(os.path.join(self.out, 'curvature.svg')))
