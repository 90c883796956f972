import math
import unittest

import numpy as np

from eulerlib import SimAlertLevel
from eulerlib.spectral import makeGrid, RealField, toSpectrum
from eulerlib.multiplier import LogMultiplier, multiplierEval
from eulerlib.velocity import FlowState, velocityFromVorticity
from eulerlib.flow import SolverConfig, rhsTendency, stepRK4, cflDt, maxSpeed, conservedDiagnostics, integrate
from eulerlib.solutions import HMFamilySpec, hmExactState, randomBandField, randomShearField

def relativeError(state, exact):
    diff = state.thetaHat.coeffs - exact.thetaHat.coeffs
    return math.sqrt(float(np.sum(np.abs(diff) ** 2) / np.sum(np.abs(exact.thetaHat.coeffs) ** 2)))

class TestSolverConfig(unittest.TestCase):
    def test_defaults(self):
        config = SolverConfig()
        self.assertEqual(config.getProperty('cfl'), 0.4)
        self.assertEqual(config.getProperty('fixedDt'), 0)
        self.assertTrue(config.getProperty('dealias'))

    def test_validation(self):
        with self.assertRaises(ValueError) as context:
            SolverConfig({'cfl': 1.5})
        self.assertEqual(str(context.exception), 'cfl must be ≤ 1')
        with self.assertRaises(ValueError):
            SolverConfig({'tEnd': 0})
        with self.assertRaises(ValueError):
            SolverConfig({'substeps': 2})

    def test_copy(self):
        config = SolverConfig()
        changed = config.copy({'fixedDt': 0.01})
        self.assertEqual(changed.getProperty('fixedDt'), 0.01)
        self.assertEqual(config.getProperty('fixedDt'), 0)


class TestStepping(unittest.TestCase):
    def test_tendencyOfShear(self):
        grid = makeGrid(32)
        spec = HMFamilySpec(4, 3, 1, 0.1)
        state = hmExactState(spec, 0.3, grid)
        tendency = rhsTendency(state)
        expected = -1j * (grid.k2 / 4) * state.thetaHat.coeffs
        self.assertLess(float(np.max(np.abs(tendency.coeffs - expected))), 1e-15)

    def test_tendencyMatchesDivergenceForm(self):
        grid = makeGrid(32)
        state = FlowState(randomBandField(5, grid, 1, 10, 1), multiplier=0.1)
        tendency = rhsTendency(state).coeffs
        u1, u2 = velocityFromVorticity(state)
        theta = state.theta().samples
        flux1 = toSpectrum(RealField(grid, u1.samples * theta)).coeffs
        flux2 = toSpectrum(RealField(grid, u2.samples * theta)).coeffs
        divergence = -(grid.ik1 * flux1 + grid.ik2 * flux2) * grid.dealiasMask
        np.testing.assert_allclose(tendency, divergence, atol=1e-12)
        self.assertLess(abs(tendency[0, 0]), 1e-15)

    def test_steadyShear(self):
        grid = makeGrid(32)
        state = FlowState(randomShearField(3, grid, 1, 8, 1), multiplier=0.1)
        result = integrate(state, SolverConfig({'fixedDt': 0.01, 'tEnd': 1.0}))
        self.assertTrue(result.success)
        self.assertLess(relativeError(result.final, state), 1e-10)

    def test_meanModePreserved(self):
        grid = makeGrid(32)
        state = FlowState(randomBandField(6, grid, 1, 8, 1), multiplier=0.1)
        result = integrate(state, SolverConfig({'fixedDt': 0.01, 'tEnd': 1.0}))
        self.assertTrue(result.success)
        self.assertLess(abs(result.final.thetaHat.coeffs[0, 0]), 1e-14)

    def test_rejectsBadTimestep(self):
        state = hmExactState(HMFamilySpec(2, 3), 0, makeGrid(16))
        with self.assertRaises(ValueError):
            stepRK4(state, 0)
        with self.assertRaises(ValueError):
            stepRK4(state, -0.1)

    def test_driftCarried(self):
        state = hmExactState(HMFamilySpec(2, 3, -1), 0, makeGrid(16))
        stepped = stepRK4(state, 0.01)
        self.assertEqual(stepped.drift, state.drift)
        self.assertAlmostEqual(stepped.time, 0.01)

    def test_cflDt(self):
        grid = makeGrid(32)
        state = hmExactState(HMFamilySpec(4, 3, 1, 0.1), 0, grid)
        self.assertEqual(cflDt(state, SolverConfig({'fixedDt': 0.002})), 0.002)
        config = SolverConfig({'dtMax': 10})
        self.assertAlmostEqual(cflDt(state, config), 0.4 * grid.dx / maxSpeed(state))
        self.assertEqual(cflDt(state, SolverConfig({'dtMax': 1e-4})), 1e-4)

    def test_exactSolution(self):
        grid = makeGrid(32)
        spec = HMFamilySpec(4, 3, 1, 0.1)
        result = integrate(hmExactState(spec, 0, grid), SolverConfig({'fixedDt': 0.01, 'tEnd': 0.2}))
        self.assertTrue(result.success)
        self.assertEqual(result.final.time, 0.2)
        self.assertLess(relativeError(result.final, hmExactState(spec, 0.2, grid)), 1e-8)

    def test_temporalOrder(self):
        grid = makeGrid(32)
        spec = HMFamilySpec(4, 3, 1, 0.1)
        exact = hmExactState(spec, 1.0, grid)
        errors = []
        for dt in (0.1, 0.05):
            result = integrate(hmExactState(spec, 0, grid), SolverConfig({'fixedDt': dt, 'tEnd': 1.0}))
            errors.append(relativeError(result.final, exact))
        self.assertGreater(errors[0], 1e-10)
        self.assertTrue(12 <= errors[0] / errors[1] <= 20)


class TestDiagnostics(unittest.TestCase):
    def test_shearValues(self):
        grid = makeGrid(32)
        spec = HMFamilySpec(4, 3, 1, 0.1)
        record = conservedDiagnostics(hmExactState(spec, 0, grid), [4.0], [2.5])
        amplitude = spec.amplitude()
        self.assertAlmostEqual(record.l2Theta, amplitude / math.sqrt(2))
        self.assertAlmostEqual(record.linfTheta, amplitude, 12)
        self.assertAlmostEqual(record.energy, multiplierEval(LogMultiplier(0.1), 16) * amplitude ** 2 / 64)
        self.assertAlmostEqual(record.hsTheta[2.5], amplitude / math.sqrt(2) * 17 ** 1.25)
        self.assertAlmostEqual(record.lpTheta[4.0], amplitude * (3 / 8) ** 0.25)
        self.assertTrue(record.isFinite())

    def test_conservation(self):
        grid = makeGrid(64)
        theta = randomBandField(7, grid, 1, 4, 2, 0.05)
        for gamma in (0, 0.1):
            state = FlowState(theta, multiplier=gamma)
            result = integrate(state, SolverConfig({'fixedDt': 0.01, 'tEnd': 0.5}))
            self.assertTrue(result.success)
            self.assertLess(result.getRelativeDrift('l2Theta'), 1e-8)
            self.assertLess(result.getRelativeDrift('energy'), 1e-8)
            self.assertLess(result.getRelativeDrift('lp4'), 1e-4)
            self.assertLess(result.getRelativeDrift('linfTheta'), 1e-4)

    def test_gridSupNorm(self):
        grid = makeGrid(16)
        x1, x2 = grid.points()
        state = FlowState(toSpectrum(RealField(grid, 2 * np.cos(x1 - 0.1) * np.cos(x2 - 0.2))))
        record = conservedDiagnostics(state)
        self.assertAlmostEqual(record.linfTheta, 2.0, 10)
        self.assertLess(record.linfGrid, record.linfTheta)
        self.assertEqual(record.getDict()['linfGrid'], record.linfGrid)

    def test_conservationAtScale(self):
        grid = makeGrid(128)
        state = FlowState(randomBandField(7, grid, 1, 8, 1, 1.0), multiplier=0.01)
        result = integrate(state, SolverConfig({'tEnd': 1.0}))
        self.assertTrue(result.success)
        self.assertLess(result.getRelativeDrift('l2Theta'), 1e-8)
        self.assertLess(result.getRelativeDrift('energy'), 1e-8)
        self.assertLess(result.getRelativeDrift('linfTheta'), 1e-5)
        self.assertLess(result.getRelativeDrift('lp4'), 1e-4)
        for refined, sampled in zip(result.channels['linfTheta'].getData(), result.channels['linfGrid'].getData()):
            self.assertLessEqual(sampled, refined)


class TestIntegrate(unittest.TestCase):
    def setUp(self):
        self.grid = makeGrid(16)
        self.state = hmExactState(HMFamilySpec(2, 3, 1, 0.1), 0, self.grid)

    def test_probesLanded(self):
        config = SolverConfig({'fixedDt': 0.03, 'tEnd': 0.5, 'diagnosticStride': 1000})
        result = integrate(self.state, config, [0, 0.1, 0.25])
        self.assertEqual(sorted(result.snapshots.keys()), [0.0, 0.1, 0.25])
        self.assertEqual(result.snapshots[0.1].time, 0.1)
        self.assertEqual(result.channels['time'].getData(), [0.0, 0.1, 0.25, 0.5])

    def test_recordStride(self):
        config = SolverConfig({'fixedDt': 0.01, 'tEnd': 0.1, 'diagnosticStride': 5})
        result = integrate(self.state, config)
        self.assertEqual(result.steps, 10)
        self.assertEqual(len(result.channels['time']), 3)
        self.assertIn('hs2.5', result.getCSV().split('\n')[0])

    def test_probeOutOfRange(self):
        with self.assertRaises(ValueError):
            integrate(self.state, SolverConfig({'tEnd': 0.5}), [0.6])

    def test_cancel(self):
        config = SolverConfig({'fixedDt': 0.01, 'tEnd': 0.5})
        result = integrate(self.state, config, callback=lambda fraction: fraction > 0.1)
        self.assertFalse(result.success)
        self.assertEqual(len(result.getAlertsByLevel(SimAlertLevel.WARNING)), 1)
        self.assertLess(result.final.time, 0.5)

    def test_blowUp(self):
        state = FlowState(randomBandField(2, self.grid, 1, 4, 0, 1e200))
        result = integrate(state, SolverConfig({'fixedDt': 1, 'tEnd': 5}))
        self.assertFalse(result.success)
        self.assertEqual(len(result.getAlertsByLevel(SimAlertLevel.ERROR)), 1)
        self.assertIs(result.final, state)
