import math
import unittest

import numpy as np
import numpy.testing

from eulerlib.spectral import makeGrid, RealField, SpectralField, toSpectrum
from eulerlib.multiplier import LogMultiplier, multiplierEval, applyMultiplier
from eulerlib.velocity import FlowState, streamfunction, velocityFromVorticity, velocityNorm, velocitySeparation
from eulerlib.velocity import biotSavartBoundCheck
from eulerlib.solutions import randomBandField, HMFamilySpec, hmExactState

def sineSpectrum(grid, n):
    x1, x2 = grid.points()
    return toSpectrum(RealField(grid, np.sin(n * x2)))

class TestMultiplier(unittest.TestCase):
    def test_values(self):
        self.assertAlmostEqual(multiplierEval(LogMultiplier(1), 0), 1.0)
        self.assertAlmostEqual(multiplierEval(LogMultiplier(0.5), 10), math.log(math.e + 10) ** -0.5)
        self.assertEqual(multiplierEval(LogMultiplier(0), 1e6), 1.0)

    def test_monotone(self):
        values = LogMultiplier(0.25).evaluate(np.arange(0, 1000, 7.0))
        self.assertTrue(np.all(np.diff(values) < 0))
        self.assertTrue(np.all(values <= 1))
        self.assertGreater(LogMultiplier(0.1).evaluate(50.0), LogMultiplier(0.2).evaluate(50.0))

    def test_rejectsBadInput(self):
        with self.assertRaises(ValueError):
            LogMultiplier(-0.1)
        with self.assertRaises(TypeError):
            LogMultiplier('0.1')
        with self.assertRaises(ValueError):
            multiplierEval(LogMultiplier(0.1), -1)

    def test_symbolCached(self):
        multiplier = LogMultiplier(0.1)
        grid = makeGrid(16)
        self.assertIs(multiplier.symbol(grid), multiplier.symbol(makeGrid(16)))
        self.assertAlmostEqual(multiplier.symbol(grid)[0, 3], multiplierEval(multiplier, 9))

    def test_identity(self):
        field = sineSpectrum(makeGrid(16), 2)
        out = applyMultiplier(field, LogMultiplier(0))
        numpy.testing.assert_array_equal(out.coeffs, field.coeffs)
        self.assertIsNot(out.coeffs, field.coeffs)


class TestFlowState(unittest.TestCase):
    def test_rejectsMean(self):
        grid = makeGrid(8)
        spectrum = toSpectrum(RealField(grid, np.ones((8, 8))))
        with self.assertRaises(ValueError):
            FlowState(spectrum)

    def test_rejectsNonHermitian(self):
        grid = makeGrid(8)
        coeffs = np.zeros((8, 8), dtype=complex)
        coeffs[0, 1] = 1
        with self.assertRaises(ValueError):
            FlowState(SpectralField(grid, coeffs))

    def test_gamma(self):
        state = FlowState(sineSpectrum(makeGrid(16), 2), multiplier=0.3)
        self.assertEqual(state.gamma, 0.3)
        self.assertEqual(state.grid, makeGrid(16))


class TestVelocity(unittest.TestCase):
    def test_streamfunction(self):
        grid = makeGrid(16)
        multiplier = LogMultiplier(0.1)
        psi = streamfunction(sineSpectrum(grid, 2), multiplier)
        self.assertAlmostEqual(psi.coeffs[0, 2], 0.5j * multiplierEval(multiplier, 4) / 4)
        self.assertEqual(psi.coeffs[0, 0], 0)

    def test_singleMode(self):
        grid = makeGrid(16)
        x1, x2 = grid.points()
        multiplier = LogMultiplier(0.1)
        u1, u2 = velocityFromVorticity(FlowState(sineSpectrum(grid, 2), multiplier=multiplier))
        expected = multiplierEval(multiplier, 4) / 2 * np.cos(2 * x2)
        numpy.testing.assert_allclose(u1.samples, expected, atol=1e-14)
        numpy.testing.assert_allclose(u2.samples, 0, atol=1e-14)

    def test_driftOnly(self):
        grid = makeGrid(8)
        state = FlowState(SpectralField(grid, np.zeros((8, 8))), drift=(0.3, -0.2))
        u1, u2 = velocityFromVorticity(state)
        numpy.testing.assert_allclose(u1.samples, 0.3)
        numpy.testing.assert_allclose(u2.samples, -0.2)
        self.assertAlmostEqual(velocityNorm(state, 3), math.hypot(0.3, 0.2))

    def test_divergenceFree(self):
        grid = makeGrid(32)
        state = FlowState(randomBandField(3, grid, 1, 8, 1.5), multiplier=0.1)
        u1, u2 = velocityFromVorticity(state)
        divergence = grid.ik1 * toSpectrum(u1).coeffs + grid.ik2 * toSpectrum(u2).coeffs
        scale = float(np.max(np.abs(u1.samples)))
        self.assertLess(float(np.max(np.abs(divergence))), 1e-11 * scale * grid.n)

    def test_eulerConsistency(self):
        grid = makeGrid(16)
        theta = randomBandField(1, grid, 1, 4, 1)
        euler = velocityFromVorticity(FlowState(theta))
        identity = velocityFromVorticity(FlowState(theta, multiplier=LogMultiplier(0.0)))
        numpy.testing.assert_array_equal(euler[0].samples, identity[0].samples)

    def test_monotoneInGamma(self):
        grid = makeGrid(32)
        theta = randomBandField(5, grid, 1, 8, 1)
        weak = velocityNorm(FlowState(theta, multiplier=0.1), 3)
        strong = velocityNorm(FlowState(theta, multiplier=0.4), 3)
        self.assertLessEqual(strong, weak)

    def test_hmSeparationAtStart(self):
        grid = makeGrid(32)
        plus = hmExactState(HMFamilySpec(4, 2.5, 1, 0.1), 0, grid)
        minus = hmExactState(HMFamilySpec(4, 2.5, -1, 0.1), 0, grid)
        self.assertAlmostEqual(velocitySeparation(plus, minus, 2.5), 0.5, 12)


class TestBiotSavartBound(unittest.TestCase):
    def test_singleMode(self):
        grid = makeGrid(16)
        multiplier = LogMultiplier(0.1)
        report = biotSavartBoundCheck(sineSpectrum(grid, 2), multiplier, 3)
        expected = (5 / 4) ** 1.5 * multiplierEval(multiplier, 4) / 2 ** 1.5
        self.assertAlmostEqual(report.ratio, expected, 12)
        self.assertTrue(report.passed)

    def test_zeroField(self):
        grid = makeGrid(8)
        report = biotSavartBoundCheck(SpectralField(grid, np.zeros((8, 8))), LogMultiplier(0.1), 3)
        self.assertEqual(report.lhs, 0)
        self.assertEqual(report.ratio, 0)
        self.assertTrue(report.passed)

    def test_randomCorpus(self):
        grid = makeGrid(32)
        for seed in range(100):
            theta = randomBandField(seed, grid, 1, 10, 1)
            for gamma in (0, 0.25):
                for s in (2.5, 3):
                    report = biotSavartBoundCheck(theta, LogMultiplier(gamma), s)
                    self.assertTrue(report.passed)
                    self.assertLessEqual(report.ratio, 1)

    def test_rejectsLowIndex(self):
        with self.assertRaises(ValueError):
            biotSavartBoundCheck(sineSpectrum(makeGrid(8), 1), LogMultiplier(0), 2)
