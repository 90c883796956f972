"""Periodic grids, the transforms between sample values and Fourier coefficients, spectral derivatives and
dealiasing. Coefficients follow the convention c_k = n^-2 * sum_j f(x_j) exp(-i k.x_j), so the coefficient of a
constant field is the constant itself. Array axis 0 runs along x1 and axis 1 along x2."""

import math

import numpy as np
from scipy import fft

hermitianTolerance = 1e-10

def _frozen(array):
    array.flags.writeable = False
    return array


class Grid2D():
    """A square periodic grid with 'n' samples per axis covering [0, 2pi)^2. It holds the integer wavenumber lattice
    and the masks and symbols that depend only on it, all of which are read-only so a grid can be shared freely."""
    length = 2 * math.pi

    def __init__(self, n):
        if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
            raise TypeError('Grid size must be an integer')
        if n % 2 != 0:
            raise ValueError('Grid size must be even, got ' + str(n))
        if n < 8:
            raise ValueError('Grid size must be at least 8, got ' + str(n))
        self.n = int(n)
        self.dx = self.length / self.n

        self.wavenumbers = _frozen(np.fft.fftfreq(self.n, 1 / self.n).round().astype(int))
        k1, k2 = np.meshgrid(self.wavenumbers, self.wavenumbers, indexing='ij')
        self.k1 = _frozen(k1)
        self.k2 = _frozen(k2)
        self.ksq = _frozen((k1 ** 2 + k2 ** 2).astype(float))

        invKsq = np.zeros((self.n, self.n))
        np.divide(1, self.ksq, out=invKsq, where=self.ksq > 0)
        self.invKsq = _frozen(invKsq)

        # Odd derivatives drop the Nyquist modes so that they map real fields to real fields
        nyquist = -(self.n // 2)
        self.ik1 = _frozen(np.where(k1 == nyquist, 0, 1j * k1))
        self.ik2 = _frozen(np.where(k2 == nyquist, 0, 1j * k2))

        self.cutoff = self.n // 3
        self.dealiasMask = _frozen(np.maximum(np.abs(k1), np.abs(k2)) <= self.cutoff)

    def points(self):
        """Returns the coordinates (x1, x2) of every grid point"""
        coords = np.arange(self.n) * self.dx
        return np.meshgrid(coords, coords, indexing='ij')

    def sobolevWeight(self, s, homogeneous=False):
        """Returns the weight of each mode in the squared H^s norm: (1+|k|^2)^s, or |k|^2s with the zero mode
        skipped for the homogeneous norm."""
        if homogeneous:
            weight = np.zeros((self.n, self.n))
            np.power(self.ksq, s, out=weight, where=self.ksq > 0)
            return weight
        return (1 + self.ksq) ** s

    def maxWavenumber(self):
        """Returns the largest wavenumber magnitude on the lattice"""
        return math.sqrt(2) * self.n / 2

    def cellArea(self):
        """Returns the area that each grid point stands for"""
        return self.dx ** 2

    def __eq__(self, other):
        return isinstance(other, Grid2D) and other.n == self.n

    def __hash__(self):
        return hash(self.n)

    def __repr__(self):
        return 'Grid2D(' + str(self.n) + ')'


def makeGrid(n):
    """Returns a grid with n samples per axis. n must be even and at least 8."""
    return Grid2D(n)


class RealField():
    """Real sample values of a field at the points of a grid. A flat row-major array of n^2 values is also accepted."""
    def __init__(self, grid, samples):
        samples = np.asarray(samples, dtype=float)
        if samples.size != grid.n ** 2:
            raise ValueError('Expected ' + str(grid.n ** 2) + ' samples, got ' + str(samples.size))
        self.grid = grid
        self.samples = samples.reshape((grid.n, grid.n))


class SpectralField():
    """Fourier coefficients of a field, one for every mode of the grid's lattice."""
    def __init__(self, grid, coeffs):
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.shape != (grid.n, grid.n):
            raise ValueError('Expected coefficients of shape ' + str((grid.n, grid.n)) + ', got ' + str(coeffs.shape))
        self.grid = grid
        self.coeffs = coeffs

    def withCoeffs(self, coeffs):
        """Returns a field on the same grid with new coefficients"""
        return SpectralField(self.grid, coeffs)


def conjugateMirror(coeffs):
    """Returns the array whose entry at k is conj(c_-k)"""
    return np.conj(np.roll(np.flip(coeffs, (0, 1)), 1, (0, 1)))

def hermitianDefect(coeffs):
    """Returns how far a set of coefficients is from describing a real field, relative to its largest coefficient."""
    scale = np.max(np.abs(coeffs))
    if scale == 0:
        return 0.0
    return float(np.max(np.abs(coeffs - conjugateMirror(coeffs))) / scale)


def toSpectrum(field):
    """Transforms sample values into Fourier coefficients"""
    if not np.all(np.isfinite(field.samples)):
        raise ValueError('Field contains non-finite samples')
    return SpectralField(field.grid, fft.fft2(field.samples, norm='forward'))

def toPhysical(field):
    """Transforms Fourier coefficients into real sample values. The coefficients must be Hermitian-symmetric to
    within the tolerance, and the imaginary residue of the inverse transform is discarded."""
    defect = hermitianDefect(field.coeffs)
    if defect > hermitianTolerance:
        raise ValueError('Coefficients are not Hermitian-symmetric (defect ' + str(defect) + ')')
    return RealField(field.grid, fft.ifft2(field.coeffs, norm='forward').real)

def spectralDerivative(field, axis):
    """Returns the derivative along x1 (axis=1) or x2 (axis=2)"""
    if axis == 1:
        return field.withCoeffs(field.coeffs * field.grid.ik1)
    if axis == 2:
        return field.withCoeffs(field.coeffs * field.grid.ik2)
    raise ValueError('Axis must be 1 or 2, got ' + str(axis))

def dealias(field):
    """Zeros every mode outside the two-thirds band"""
    return field.withCoeffs(np.where(field.grid.dealiasMask, field.coeffs, 0))

def removeMean(field):
    """Zeros the mean mode"""
    coeffs = field.coeffs.copy()
    coeffs[0, 0] = 0
    return field.withCoeffs(coeffs)
