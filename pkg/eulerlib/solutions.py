"""Exact solutions and synthetic initial data.

The traveling shear family is theta = n^(1-s) sin(n x2 - omega t) with a drift of (0, omega/n). Its velocity
T(n^2) n^-s cos(n x2 - omega t) runs along x1 and doesn't advect theta, and the drift carries it along x2 at exactly
the speed of the wave, so the pair solves the system for every gamma. The members with omega = +1 and -1 start from
the same vorticity and their velocities differ only by a drift of 2/n, yet after a time t they are apart by about
sqrt(2) |sin t| in H^s."""

import math

import numpy as np

from . import geometry
from .multiplier import LogMultiplier, multiplierEval
from .properties import PropertyCollection, FloatProperty
from .spectral import SpectralField, RealField
from .velocity import FlowState
from .flow import rhsTendency


class HMFamilySpec():
    """One member of the traveling shear family: frequency n, Sobolev index s of the amplitude normalization,
    direction omega (+1 or -1) and the multiplier's gamma."""
    def __init__(self, n, s, omega=1, gamma=0.0):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ValueError('n must be an integer ≥ 1, got ' + str(n))
        if not s > 2:
            raise ValueError('s must be > 2, got ' + str(s))
        if omega not in (-1, 1):
            raise ValueError('omega must be +1 or -1, got ' + str(omega))
        if not gamma >= 0:
            raise ValueError('gamma must be ≥ 0, got ' + str(gamma))
        self.n = int(n)
        self.s = float(s)
        self.omega = int(omega)
        self.gamma = float(gamma)

    def amplitude(self):
        return self.n ** (1 - self.s)


def hmExactState(spec, t, grid):
    """Returns the family member described by spec at time t on a grid"""
    if spec.n > grid.n // 3:
        raise ValueError('Frequency ' + str(spec.n) + ' is not resolved on a grid of ' + str(grid.n))
    coeffs = np.zeros((grid.n, grid.n), dtype=complex)
    coeffs[0, spec.n] = spec.amplitude() * np.exp(-1j * spec.omega * t) / 2j
    coeffs[0, grid.n - spec.n] = np.conj(coeffs[0, spec.n])
    return FlowState(SpectralField(grid, coeffs), (0.0, spec.omega / spec.n), t, LogMultiplier(spec.gamma))

def hmResidual(spec, t, grid):
    """Returns the L^2 norm of d theta/dt + u.grad theta for the family member at time t, with the time derivative
    taken from the closed form and the advection term from the solver."""
    state = hmExactState(spec, t, grid)
    timeDerivative = -1j * spec.omega * (grid.k2 / spec.n) * state.thetaHat.coeffs
    residual = timeDerivative - rhsTendency(state).coeffs
    return math.sqrt(float(np.sum(np.abs(residual) ** 2)))

def hmSeparationClosedForm(n, s, gamma, t):
    """Returns the H^s distance between the velocities of the omega = +1 and -1 members at time t, and the distance
    between their initial velocities, 2/n."""
    multiplier = multiplierEval(LogMultiplier(gamma), n ** 2)
    shear = 2 * multiplier ** 2 * ((1 + n ** 2) / n ** 2) ** s * math.sin(t) ** 2
    return {
        'velocitySeparation': math.sqrt(shear + 4 / n ** 2),
        'dataSeparation': 2 / n
    }


def randomBandField(seed, grid, kmin, kmax, decayExponent, amplitude=1.0):
    """Returns a real, mean-zero field whose coefficients on kmin <= |k| <= kmax have modulus proportional to
    |k|^-decayExponent and seeded random phases, scaled to an L^2 norm of 'amplitude'. Phases are integers from a PCG64
    stream scaled to [0, 2pi), drawn for the band's modes in a fixed order, so the field doesn't depend on the grid
    size once the band is resolved."""
    if not kmin >= 1:
        raise ValueError('kmin must be ≥ 1, got ' + str(kmin))
    modulus = np.sqrt(grid.ksq)
    nyquist = -(grid.n // 2)
    band = (modulus >= kmin) & (modulus <= kmax) & (grid.k1 != nyquist) & (grid.k2 != nyquist)
    upper = (grid.k2 > 0) | ((grid.k2 == 0) & (grid.k1 > 0))
    i1, i2 = np.nonzero(band & upper)
    if len(i1) == 0:
        raise ValueError('No modes with ' + str(kmin) + ' ≤ |k| ≤ ' + str(kmax) + ' on a grid of ' + str(grid.n))
    order = np.lexsort((grid.k1[i1, i2], grid.k2[i1, i2]))
    i1 = i1[order]
    i2 = i2[order]

    rng = np.random.Generator(np.random.PCG64(seed))
    phases = 2 * math.pi * rng.integers(0, 2 ** 32, size=len(i1), dtype=np.uint64) / 2 ** 32
    values = modulus[i1, i2] ** -decayExponent * np.exp(1j * phases)
    values *= amplitude / math.sqrt(2 * float(np.sum(np.abs(values) ** 2)))

    coeffs = np.zeros((grid.n, grid.n), dtype=complex)
    coeffs[i1, i2] = values
    coeffs[(-i1) % grid.n, (-i2) % grid.n] = np.conj(values)
    return SpectralField(grid, coeffs)


def randomShearField(seed, grid, kmin, kmax, decayExponent, amplitude=1.0):
    """Like randomBandField, but keeps only the modes with k1 = 0, so the field depends on x2 alone"""
    field = randomBandField(seed, grid, kmin, kmax, decayExponent)
    coeffs = np.where(grid.k1 == 0, field.coeffs, 0)
    norm = math.sqrt(float(np.sum(np.abs(coeffs) ** 2)))
    if norm == 0:
        raise ValueError('No shear modes with ' + str(kmin) + ' ≤ |k| ≤ ' + str(kmax))
    return SpectralField(grid, coeffs * (amplitude / norm))


class BlobSpec(PropertyCollection):
    """A smooth bump of the given amplitude centred at (x1, x2) and vanishing outside the given radius"""
    def __init__(self, propDict=None):
        super().__init__()
        self.props['x1'] = FloatProperty('Center x1', 0, 2 * math.pi)
        self.props['x2'] = FloatProperty('Center x2', 0, 2 * math.pi)
        # Radius has to stay below pi/2
        self.props['radius'] = FloatProperty('Radius', 0, math.nextafter(math.pi / 2, 0), minInclusive=False)
        self.props['amplitude'] = FloatProperty('Amplitude', -1e6, 1e6)
        self.props['radius'].setValue(0.5)
        self.props['amplitude'].setValue(1.0)
        if propDict is not None:
            self.setProperties(propDict)

    def getCenter(self):
        return (self.getProperty('x1'), self.getProperty('x2'))

    def getSamples(self, grid):
        x1, x2 = grid.points()
        center = self.getCenter()
        rho = np.hypot(geometry.torusDelta(x1, center[0]), geometry.torusDelta(x2, center[1]))
        return self.getProperty('amplitude') * geometry.bumpProfile(rho / self.getProperty('radius'))


def bumpBlobPair(specF, specG, grid):
    """Returns the sum of two bumps whose supports must not touch. The result has a positive mean, which has to be
    removed before it can be used as vorticity."""
    gap = geometry.torusDistance(specF.getCenter(), specG.getCenter())
    if gap <= specF.getProperty('radius') + specG.getProperty('radius'):
        raise ValueError('Blob supports overlap: centers are ' + str(gap) + ' apart')
    return RealField(grid, specF.getSamples(grid) + specG.getSamples(grid))
