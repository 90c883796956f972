import math
import unittest

from eulerlib import SimAlertLevel
from eulerlib.spectral import makeGrid
from eulerlib.flow import SolverConfig
from eulerlib.experiment import probeTimes, runCases, perDecade
from eulerlib.experiments import experimentTypes, ConvergenceExperiment, ContinuityExperiment
from eulerlib.experiments import GammaComparisonExperiment, NonuniformExperiment, SupportExperiment
from eulerlib.experiments import comparisonBoundEval, deficitOrder

class TestHelpers(unittest.TestCase):
    def test_registry(self):
        self.assertEqual(sorted(experimentTypes.keys()),
                         ['continuity', 'convergence', 'gamma_comparison', 'nonuniform', 'support'])

    def test_probeTimes(self):
        self.assertEqual(probeTimes(1.0, 4), [0.25, 0.5, 0.75, 1.0])

    def test_runCasesKeepsOrder(self):
        self.assertEqual(runCases(lambda x: x * x, range(6), threads=3), [0, 1, 4, 9, 16, 25])

    def test_perDecade(self):
        self.assertAlmostEqual(perDecade(1.0, 0.01, 1e-2, 1e-4), 10)

    def test_comparisonBound(self):
        self.assertAlmostEqual(comparisonBoundEval(0.1, 0.02, 3, 2, 0.5, 1.5), 1.5 * (0.1 + 0.08) * math.exp(2.5))
        self.assertEqual(comparisonBoundEval(0, 0, 3, 2, 1, 1), 0)
        with self.assertRaises(ValueError):
            comparisonBoundEval(-0.1, 0.02, 3, 2, 0.5, 1)

    def test_defaults(self):
        for name, experimentType in experimentTypes.items():
            experiment = experimentType()
            self.assertEqual(experiment.experimentName, name)
            self.assertEqual(experiment.getConfigErrors(makeGrid(128)), [])


class TestConvergence(unittest.TestCase):
    def test_passes(self):
        experiment = ConvergenceExperiment({'gridSizes': [16], 'tolerance': 1e-6})
        report = experiment.run(makeGrid(16), SolverConfig(), 0)
        self.assertTrue(report.passed())
        self.assertTrue(report.getVerdict('accuracy').passed)
        ratio = report.tables['errors'].getColumn('ratio')[1]
        self.assertTrue(12 <= ratio <= 20)
        self.assertAlmostEqual(report.tables['errors'].getColumn('order')[1], 4, 0)

    def test_floorSkipsOrder(self):
        experiment = ConvergenceExperiment({'gridSizes': [16], 'dtList': [0.002, 0.001], 'tEnd': 0.01,
                                            'tolerance': 1e-6})
        report = experiment.run(makeGrid(16), SolverConfig(), 0)
        self.assertIsNone(report.getVerdict('order'))
        self.assertEqual(len([a for a in report.alerts if a.level == SimAlertLevel.MESSAGE]), 1)

    def test_configErrors(self):
        errors = ConvergenceExperiment({'gridSizes': [8]}).getConfigErrors(makeGrid(16))
        self.assertEqual(errors[0].location, 'parameters.n')


class TestNonuniform(unittest.TestCase):
    def test_separation(self):
        experiment = NonuniformExperiment({'nList': [2, 4]})
        report = experiment.run(makeGrid(32), SolverConfig(), 0)
        self.assertTrue(report.passed())
        table = report.tables['separation']
        self.assertEqual(len(table), 10)
        self.assertAlmostEqual(table.getColumn('measured')[0], 1.0, 10)
        for measured, closed in zip(table.getColumn('measured'), table.getColumn('closed_form')):
            self.assertAlmostEqual(measured / closed, 1, 6)
        self.assertEqual(table.getCSV().split('\n')[0], 'n,t,measured,closed_form,sin_t,data_sep')

    def test_deficitOrder(self):
        experiment = NonuniformExperiment({'nList': [2, 4, 8]})
        report = experiment.run(makeGrid(32), SolverConfig(), 0)
        self.assertTrue(report.passed())
        self.assertTrue(0.5 <= report.metadata['deficitOrder'] <= 1.5)
        for row in report.tables['deficit'].getRows():
            if row['t'] > 0:
                self.assertLess(row['deficit'], 0)

    def test_eulerHasNoDeficitOrder(self):
        experiment = NonuniformExperiment({'nList': [2, 4], 'gamma': 0})
        report = experiment.run(makeGrid(32), SolverConfig(), 0)
        self.assertNotIn('deficitOrder', report.metadata)
        messages = [a for a in report.alerts if a.level == SimAlertLevel.MESSAGE and a.location == 'deficit']
        self.assertEqual(len(messages), 1)

    def test_deficitOrderFit(self):
        rows = [{'t': 0.0, 'deficit': 0.0, 'multiplierDistance': 0.01}]
        rows += [{'t': 1.0, 'deficit': -3 * d ** 2, 'multiplierDistance': d} for d in (0.01, 0.02, 0.04)]
        self.assertAlmostEqual(deficitOrder(rows), 2, 10)
        self.assertIsNone(deficitOrder(rows[:2]))

    def test_unresolved(self):
        errors = NonuniformExperiment({'nList': [4, 20]}).getConfigErrors(makeGrid(32))
        self.assertEqual(len(errors), 1)
        self.assertEqual(errors[0].location, 'parameters.nList')


class TestContinuity(unittest.TestCase):
    def test_linearDependence(self):
        experiment = ContinuityExperiment({'deltas': [1e-2, 1e-3], 'tEnd': 0.2, 'numProbes': 4})
        report = experiment.run(makeGrid(32), SolverConfig(), 5)
        self.assertTrue(report.passed())
        ratio = report.tables['summary'].getColumn('perDecade')[1]
        self.assertTrue(5 <= ratio <= 20)
        self.assertEqual(len(report.tables['difference']), 10)

    def test_zeroDelta(self):
        experiment = ContinuityExperiment({'deltas': [1e-3, 0], 'tEnd': 0.1, 'numProbes': 2})
        report = experiment.run(makeGrid(32), SolverConfig(), 5)
        self.assertTrue(report.getVerdict('zeroDelta').passed)

    def test_deterministic(self):
        experiment = ContinuityExperiment({'deltas': [1e-2], 'tEnd': 0.1, 'numProbes': 2})
        first = experiment.run(makeGrid(32), SolverConfig(), 5, threads=1)
        second = experiment.run(makeGrid(32), SolverConfig(), 5, threads=2)
        self.assertEqual(first.tables['difference'].getCSV(), second.tables['difference'].getCSV())


class TestGammaComparison(unittest.TestCase):
    def test_randomData(self):
        experiment = GammaComparisonExperiment({'tEnd': 0.5, 'numProbes': 10})
        report = experiment.run(makeGrid(32), SolverConfig({'fixedDt': 0.05}), 3)
        self.assertTrue(report.getVerdict('velocityComparison').passed)
        self.assertTrue(report.getVerdict('scaling').passed)
        self.assertGreater(report.metadata['c0'], 0)
        self.assertEqual(report.metadata['c0'], report.metadata['fittedC0'])
        table = report.tables['comparison']
        self.assertEqual(len(table), 33)
        for row in table.getRows():
            if row['t'] <= 0.1:
                self.assertLessEqual(row['d'], row['bound'] * (1 + 1e-9))
        ratios = report.tables['scaling'].getColumn('ratio')
        self.assertEqual(ratios[0], 0)
        for ratio in ratios[1:]:
            self.assertTrue(1.8 <= ratio <= 2.2)

    def test_shearIsDegenerate(self):
        experiment = GammaComparisonExperiment({'dataKind': 'shear', 'tEnd': 0.2, 'numProbes': 2})
        report = experiment.run(makeGrid(32), SolverConfig({'fixedDt': 0.05}), 3)
        self.assertIsNone(report.getVerdict('scaling'))
        self.assertEqual(len(report.tables['scaling']), 0)
        self.assertEqual(len([a for a in report.alerts if a.level == SimAlertLevel.MESSAGE]), 3)
        self.assertEqual(max(report.tables['comparison'].getColumn('d')), 0)

    def test_givenConstant(self):
        experiment = GammaComparisonExperiment({'gammas': [0.01], 'c0': 1e6, 'tEnd': 0.2, 'numProbes': 2})
        report = experiment.run(makeGrid(32), SolverConfig({'fixedDt': 0.05}), 3)
        self.assertEqual(report.metadata['c0'], 1e6)
        self.assertGreater(report.metadata['fittedC0'], 0)
        self.assertLess(report.metadata['fittedC0'], 1e6)
        self.assertTrue(report.getVerdict('envelope').passed)


class TestSupport(unittest.TestCase):
    def test_separated(self):
        blobs = [
            {'x1': math.pi / 2, 'x2': math.pi, 'radius': 0.5, 'amplitude': 1e-8},
            {'x1': 3 * math.pi / 2, 'x2': math.pi, 'radius': 0.5, 'amplitude': 1e-8}
        ]
        experiment = SupportExperiment({'blobs': blobs, 'tEnd': 0.2, 'numProbes': 2})
        report = experiment.run(makeGrid(64), SolverConfig(), 0)
        self.assertTrue(report.passed())
        self.assertEqual(report.tables['support'].getColumn('components'), [2, 2, 2])
        self.assertEqual(len(report.snapshots), 3)

    def test_configErrors(self):
        single = SupportExperiment({'blobs': [{'x1': 1.0, 'x2': 1.0}]})
        self.assertEqual(single.getConfigErrors(makeGrid(64))[0].location, 'parameters.blobs')
        overlapping = SupportExperiment({'blobs': [{'x1': 1.0, 'x2': 1.0}, {'x1': 1.5, 'x2': 1.0}]})
        self.assertEqual(len(overlapping.getConfigErrors(makeGrid(64))), 1)

    def test_zeroAmplitudes(self):
        blobs = [
            {'x1': math.pi / 2, 'x2': math.pi, 'amplitude': 0},
            {'x1': 3 * math.pi / 2, 'x2': math.pi, 'amplitude': 0}
        ]
        errors = SupportExperiment({'blobs': blobs}).getConfigErrors(makeGrid(64))
        self.assertEqual(len(errors), 1)
        self.assertEqual(errors[0].location, 'parameters.blobs')
        blobs[1]['amplitude'] = -1.0
        self.assertEqual(SupportExperiment({'blobs': blobs}).getConfigErrors(makeGrid(64)), [])

    def test_unresolvedBlobs(self):
        blobs = [{'x1': 1.0, 'x2': 1.0, 'radius': 0.01}, {'x1': 4.0, 'x2': 4.0, 'radius': 0.01}]
        experiment = SupportExperiment({'blobs': blobs, 'tEnd': 0.2, 'numProbes': 2})
        self.assertEqual(experiment.getConfigErrors(makeGrid(16)), [])
        report = experiment.run(makeGrid(16), SolverConfig(), 0)
        self.assertTrue(report.hasErrors())
        self.assertEqual(report.alerts[0].location, 'parameters.blobs')
        self.assertEqual(len(report.verdicts), 0)

    def test_blobValidation(self):
        with self.assertRaises(ValueError) as context:
            SupportExperiment({'blobs': [{'x1': 1.0, 'x2': 1.0, 'radius': -1}]})
        self.assertEqual(str(context.exception), 'blobs[0].radius must be > 0')
