"""The logarithmic Fourier multiplier T_gamma, which scales the mode with squared wavenumber ksq by
(log(e + ksq))^-gamma. gamma = 0 is the identity."""

import math

import numpy as np


class LogMultiplier():
    """The multiplier for a fixed gamma. Its symbol on a grid is computed once and reused."""
    def __init__(self, gamma=0.0):
        if isinstance(gamma, bool) or not isinstance(gamma, (int, float, np.floating, np.integer)):
            raise TypeError('gamma must be a number')
        if not math.isfinite(gamma) or gamma < 0:
            raise ValueError('gamma must be ≥ 0, got ' + str(gamma))
        self.gamma = float(gamma)
        self._symbols = {}

    def evaluate(self, ksq):
        """Returns the multiplier's value for an array of squared wavenumbers"""
        ksq = np.asarray(ksq, dtype=float)
        if self.gamma == 0:
            return np.ones_like(ksq)
        return np.log(math.e + ksq) ** -self.gamma

    def symbol(self, grid):
        """Returns the multiplier's value at every mode of the grid"""
        if grid.n not in self._symbols:
            symbol = self.evaluate(grid.ksq)
            symbol.flags.writeable = False
            self._symbols[grid.n] = symbol
        return self._symbols[grid.n]

    def isIdentity(self):
        return self.gamma == 0

    def __repr__(self):
        return 'LogMultiplier(' + str(self.gamma) + ')'


def multiplierEval(multiplier, ksq):
    """Returns T_gamma at a single squared wavenumber"""
    if ksq < 0:
        raise ValueError('Squared wavenumber must be ≥ 0, got ' + str(ksq))
    if multiplier.gamma == 0:
        return 1.0
    return math.log(math.e + ksq) ** -multiplier.gamma

def applyMultiplier(field, multiplier):
    """Scales every coefficient of the field by the multiplier's value at its wavenumber"""
    if multiplier.isIdentity():
        return field.withCoeffs(field.coeffs.copy())
    return field.withCoeffs(field.coeffs * multiplier.symbol(field.grid))
