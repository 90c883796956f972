"""Recovers velocity from vorticity through u = drift + grad_perp inv_laplacian T_gamma theta, where grad_perp is
(-d2, d1) and the drift is a constant velocity carried alongside the vorticity."""

import math

import numpy as np

from .multiplier import LogMultiplier
from .spectral import SpectralField, RealField, hermitianDefect, hermitianTolerance, toPhysical
from .simResult import InequalityReport
from .defaults import frozenConstants

meanTolerance = 1e-12

def checkMeanZero(coeffs):
    """Raises a ValueError if the mean mode of the coefficients isn't zero to within tolerance"""
    scale = max(1.0, float(np.max(np.abs(coeffs))))
    if abs(coeffs[0, 0]) > meanTolerance * scale:
        raise ValueError('Vorticity must have zero mean, mean mode is ' + str(coeffs[0, 0]))


class FlowState():
    """The state of a flow: the vorticity spectrum, a constant drift velocity, the current time and the multiplier
    that closes the system. Validation of the spectrum can be skipped for states the solver builds itself."""
    def __init__(self, thetaHat, drift=(0.0, 0.0), time=0.0, multiplier=None, check=True):
        if multiplier is None:
            multiplier = LogMultiplier(0)
        elif not isinstance(multiplier, LogMultiplier):
            multiplier = LogMultiplier(multiplier)
        if len(drift) != 2:
            raise ValueError('Drift must have two components')
        if time < 0:
            raise ValueError('Time must be ≥ 0, got ' + str(time))
        if check:
            checkMeanZero(thetaHat.coeffs)
            defect = hermitianDefect(thetaHat.coeffs)
            if defect > hermitianTolerance:
                raise ValueError('Vorticity spectrum is not Hermitian-symmetric (defect ' + str(defect) + ')')
        self.thetaHat = thetaHat
        self.drift = (float(drift[0]), float(drift[1]))
        self.time = float(time)
        self.multiplier = multiplier

    @property
    def grid(self):
        return self.thetaHat.grid

    @property
    def gamma(self):
        return self.multiplier.gamma

    def withTheta(self, thetaHat, time, check=False):
        """Returns a state with the same drift and multiplier but new vorticity and time"""
        return FlowState(thetaHat, self.drift, time, self.multiplier, check)

    def theta(self):
        """Returns the vorticity in physical space"""
        return toPhysical(self.thetaHat)


def streamCoeffs(thetaCoeffs, symbol, grid):
    return -symbol * thetaCoeffs * grid.invKsq

def velocityCoeffs(thetaCoeffs, symbol, grid):
    """Returns the coefficients of both components of the curl part of the velocity"""
    psi = streamCoeffs(thetaCoeffs, symbol, grid)
    return -grid.ik2 * psi, grid.ik1 * psi


def streamfunction(thetaHat, multiplier):
    """Returns psi with psi_k = -T(|k|^2) theta_k / |k|^2 and a zero mean mode"""
    checkMeanZero(thetaHat.coeffs)
    return SpectralField(thetaHat.grid, streamCoeffs(thetaHat.coeffs, multiplier.symbol(thetaHat.grid),
                                                     thetaHat.grid))

def velocityFromVorticity(state):
    """Returns the two velocity components of a state in physical space"""
    grid = state.grid
    psi = streamfunction(state.thetaHat, state.multiplier)
    u1 = toPhysical(SpectralField(grid, -grid.ik2 * psi.coeffs))
    u2 = toPhysical(SpectralField(grid, grid.ik1 * psi.coeffs))
    return RealField(grid, u1.samples + state.drift[0]), RealField(grid, u2.samples + state.drift[1])

def velocityNorm(state, s):
    """Returns the H^s norm of the velocity of a state, drift included"""
    grid = state.grid
    u1, u2 = velocityCoeffs(state.thetaHat.coeffs, state.multiplier.symbol(grid), grid)
    u1[0, 0] += state.drift[0]
    u2[0, 0] += state.drift[1]
    return math.sqrt(float(np.sum(grid.sobolevWeight(s) * (np.abs(u1) ** 2 + np.abs(u2) ** 2))))

def velocitySeparation(stateA, stateB, s):
    """Returns the H^s norm of the velocity difference of two states on the same grid, drifts included"""
    grid = stateA.grid
    u1A, u2A = velocityCoeffs(stateA.thetaHat.coeffs, stateA.multiplier.symbol(grid), grid)
    u1B, u2B = velocityCoeffs(stateB.thetaHat.coeffs, stateB.multiplier.symbol(grid), grid)
    d1 = u1A - u1B
    d2 = u2A - u2B
    d1[0, 0] += stateA.drift[0] - stateB.drift[0]
    d2[0, 0] += stateA.drift[1] - stateB.drift[1]
    weight = grid.sobolevWeight(s)
    return math.sqrt(float(np.sum(weight * (np.abs(d1) ** 2 + np.abs(d2) ** 2))))

def biotSavartBoundCheck(thetaHat, multiplier, s):
    """Compares the H^s norm of the velocity (without drift) to 2^(s/2) times the homogeneous H^(s-1) norm of the
    vorticity. (1 + |k|^2) <= 2|k|^2 away from the zero mode makes the bound hold mode by mode."""
    if s <= 2:
        raise ValueError('s must be > 2, got ' + str(s))
    checkMeanZero(thetaHat.coeffs)
    grid = thetaHat.grid
    u1, u2 = velocityCoeffs(thetaHat.coeffs, multiplier.symbol(grid), grid)
    lhs = math.sqrt(float(np.sum(grid.sobolevWeight(s) * (np.abs(u1) ** 2 + np.abs(u2) ** 2))))
    thetaNorm = math.sqrt(float(np.sum(grid.sobolevWeight(s - 1, True) * np.abs(thetaHat.coeffs) ** 2)))
    rhs = 2 ** (s / 2) * thetaNorm
    return InequalityReport('biotSavart', lhs, rhs, frozenConstants()['biotSavart'],
                            inputs={'s': s, 'gamma': multiplier.gamma})
