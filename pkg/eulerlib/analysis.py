"""Norms, Littlewood-Paley projections and numerical checks of the inequalities the flow estimates rest on. Norms use
the normalized measure dx/(2pi)^2, so that with the coefficient convention of the spectral module the H^0 norm and
the L^2 norm agree."""

import math

import numpy as np
from scipy import optimize
from skimage import measure

from . import geometry
from .defaults import frozenConstants
from .simResult import InequalityReport
from .spectral import SpectralField, RealField, toSpectrum, toPhysical
from .velocity import velocityCoeffs, checkMeanZero


class NormSpec():
    """Which Sobolev norm to take: the index s and whether the zero mode is skipped (homogeneous) or weighted by
    (1 + |k|^2)^s."""
    def __init__(self, s, homogeneous=False):
        if not math.isfinite(s):
            raise ValueError('Sobolev index must be finite')
        self.s = float(s)
        self.homogeneous = bool(homogeneous)


def sobolevNorm(field, spec):
    """Returns the H^s (or homogeneous H^s) norm of a field from its coefficients"""
    weight = field.grid.sobolevWeight(spec.s, spec.homogeneous)
    return math.sqrt(float(np.sum(weight * np.abs(field.coeffs) ** 2)))

def lpNorm(field, p):
    """Returns the L^p norm of a field by grid quadrature, or the largest sample magnitude for p = inf"""
    if not p >= 1:
        raise ValueError('p must be ≥ 1, got ' + str(p))
    values = np.abs(field.samples)
    if math.isinf(p):
        return float(np.max(values))
    return float(np.mean(values ** p) ** (1 / p))

def gradientMagnitude(field):
    """Returns |grad f| at every grid point"""
    grid = field.grid
    d1 = toPhysical(SpectralField(grid, field.coeffs * grid.ik1)).samples
    d2 = toPhysical(SpectralField(grid, field.coeffs * grid.ik2)).samples
    return np.hypot(d1, d2)


def _h(x):
    return np.exp(-1 / x)

def bump(r):
    """The cutoff that the projections are built from: 1 for r <= 1, 0 for r >= 2 and a smooth transition between,
    h(2 - r) / (h(2 - r) + h(r - 1)) with h(x) = exp(-1/x)."""
    r = np.asarray(r, dtype=float)
    out = np.zeros_like(r)
    out[r <= 1] = 1
    mid = (r > 1) & (r < 2)
    outer = _h(2 - r[mid])
    inner = _h(r[mid] - 1)
    out[mid] = outer / (outer + inner)
    return out


class LPBand():
    """A frequency band: everything up to about M ('low'), the shell around M ('annulus') or what lies above M
    ('high')."""
    kinds = ('low', 'annulus', 'high')

    def __init__(self, kind, M):
        if kind not in self.kinds:
            raise ValueError('Band kind must be one of ' + ', '.join(self.kinds) + ', got ' + str(kind))
        if not M > 0:
            raise ValueError('Band frequency M must be > 0, got ' + str(M))
        self.kind = kind
        self.M = float(M)

    def symbol(self, grid):
        """Returns the projection's factor at every mode of the grid"""
        modulus = np.sqrt(grid.ksq)
        if self.kind == 'low':
            return bump(modulus / self.M)
        if self.kind == 'high':
            return 1 - bump(modulus / self.M)
        return bump(modulus / self.M) - bump(2 * modulus / self.M)


def lpProjection(field, band):
    """Returns the Littlewood-Paley projection of a field onto a band"""
    return field.withCoeffs(field.coeffs * band.symbol(field.grid))

def bernsteinReport(field, M, s, p=2, q=2, kind=None):
    """Checks a Bernstein inequality on the projection of a field. The band defaults to the annulus for q = 2 and to
    the low band P_{<=M} for q = inf. For (p, q) = (2, 2) the ratio || |grad|^s Pf ||_2 / ||Pf||_2 must lie in
    [(M/2)^s, (2M)^s] on the annulus, and below (2M)^s on the low band. For (2, inf) the ratio
    ||Pf||_inf / (M ||Pf||_2) must stay below sqrt(number of modes the projection keeps) / M, which is what
    Cauchy-Schwarz gives."""
    if p != 2 or q not in (2, math.inf):
        raise ValueError('Unsupported Bernstein pair (' + str(p) + ', ' + str(q) + ')')
    if kind is None:
        kind = 'annulus' if q == 2 else 'low'
    band = LPBand(kind, M)
    if band.kind == 'high':
        raise ValueError('Bernstein inequalities need a low or annulus band')
    grid = field.grid
    symbol = band.symbol(grid)
    projected = field.withCoeffs(field.coeffs * symbol)
    l2 = sobolevNorm(projected, NormSpec(0))
    inputs = {'M': band.M, 's': s, 'p': p, 'q': q, 'kind': band.kind}

    if q == 2:
        lhs = sobolevNorm(projected, NormSpec(s, True))
        lower = (band.M / 2) ** s if band.kind == 'annulus' else None
        return InequalityReport('bernstein', lhs, l2, (2 * band.M) ** s, lower, inputs)

    modes = int(np.count_nonzero(symbol))
    inputs['modes'] = modes
    lhs = lpNorm(toPhysical(projected), math.inf)
    return InequalityReport('bernstein', lhs, band.M * l2, math.sqrt(modes) / band.M, inputs=inputs)


def _velocityGradient(coeffs, symbol, grid):
    u1, u2 = velocityCoeffs(coeffs, symbol, grid)
    return [toPhysical(SpectralField(grid, u * ik)).samples for u in (u1, u2) for ik in (grid.ik1, grid.ik2)]

def logInterpReport(field, multiplier, p, bound=None):
    """Compares the largest entry of the velocity gradient of f with 1 + ||f||_inf log2(10 + ||f||_2 + ||grad f||_p^p).
    The sum of the coefficient moduli bounds the gradient entries and is recorded as 'wienerBound'."""
    if not p > 2:
        raise ValueError('p must be > 2, got ' + str(p))
    if bound is None:
        bound = frozenConstants()['logInterpolation']
    spectrum = toSpectrum(field)
    checkMeanZero(spectrum.coeffs)
    grid = field.grid
    entries = _velocityGradient(spectrum.coeffs, multiplier.symbol(grid), grid)
    lhs = max(float(np.max(np.abs(entry))) for entry in entries)

    supNorm = lpNorm(field, math.inf)
    l2 = lpNorm(field, 2)
    gradientPower = float(np.mean(gradientMagnitude(spectrum) ** p))
    rhs = 1 + supNorm * math.log2(10 + l2 + gradientPower)
    inputs = {
        'p': p,
        'gamma': multiplier.gamma,
        'supNorm': supNorm,
        'l2Norm': l2,
        'gradientPower': gradientPower,
        'wienerBound': float(np.sum(np.abs(spectrum.coeffs)))
    }
    return InequalityReport('logInterpolation', lhs, rhs, bound, inputs=inputs)

def logInterpSensitivity(field, multiplier, p, amplitudes=(1e-2, 1e-1, 1, 1e1, 1e2), bound=None):
    """Runs logInterpReport on the field rescaled by each amplitude. Returns the reports and the sensitivity factor,
    the largest ratio over the ratio at the unscaled field."""
    reports = [logInterpReport(RealField(field.grid, amplitude * field.samples), multiplier, p, bound)
               for amplitude in amplitudes]
    base = logInterpReport(field, multiplier, p, bound).ratio
    largest = max(report.ratio for report in reports)
    return reports, (largest / base if base > 0 else 0.0)


def _checkBandLimited(spectrum, name):
    grid = spectrum.grid
    outside = np.maximum(np.abs(grid.k1), np.abs(grid.k2)) >= grid.n / 4
    scale = float(np.max(np.abs(spectrum.coeffs)))
    if scale > 0 and float(np.max(np.abs(spectrum.coeffs[outside]))) > 1e-12 * scale:
        raise ValueError(name + ' must be band-limited below n/4 = ' + str(grid.n / 4))

def katoPonceReport(f, g, s, bound=None):
    """Compares ||J^s(fg) - f J^s g||_2 with ||J^s f||_2 ||g||_inf + ||grad f||_inf ||J^(s-1) g||_2, where
    J^s = (1 - laplacian)^(s/2). Both fields must be band-limited below a quarter of the grid size so that their
    product is represented exactly."""
    if not s > 0:
        raise ValueError('s must be > 0, got ' + str(s))
    if bound is None:
        bound = frozenConstants()['katoPonce']
    grid = f.grid
    fHat = toSpectrum(f)
    gHat = toSpectrum(g)
    _checkBandLimited(fHat, 'f')
    _checkBandLimited(gHat, 'g')

    bessel = (1 + grid.ksq) ** (s / 2)
    product = toSpectrum(RealField(grid, f.samples * g.samples))
    jProduct = toPhysical(product.withCoeffs(product.coeffs * bessel)).samples
    jG = toPhysical(gHat.withCoeffs(gHat.coeffs * bessel)).samples
    lhs = lpNorm(RealField(grid, jProduct - f.samples * jG), 2)

    rhs = (sobolevNorm(fHat, NormSpec(s)) * lpNorm(g, math.inf)
           + float(np.max(gradientMagnitude(fHat))) * sobolevNorm(gHat, NormSpec(s - 1)))
    return InequalityReport('katoPonce', lhs, rhs, bound, inputs={'s': s})


def multiplierDistance(multiplier, kmax):
    """Returns sup |T - 1| over wavenumbers up to kmax, which is 1 - (log(e + kmax^2))^-gamma by monotonicity"""
    if not kmax >= 1:
        raise ValueError('kmax must be ≥ 1, got ' + str(kmax))
    if multiplier.gamma == 0:
        return 0.0
    return -math.expm1(-multiplier.gamma * math.log(math.log(math.e + kmax ** 2)))

def velocityComparisonReport(thetaE, thetaT, multiplier, s):
    """Compares the H^s distance between the Euler velocity of thetaE and the regularized velocity of thetaT with
    ||thetaE - thetaT||_{H^s} + ||T - id|| ||thetaE||_{H^s}. Mode by mode the ratio can't exceed sqrt(2)."""
    grid = thetaE.grid
    distance = multiplierDistance(multiplier, grid.maxWavenumber())
    u1E, u2E = velocityCoeffs(thetaE.coeffs, 1.0, grid)
    u1T, u2T = velocityCoeffs(thetaT.coeffs, multiplier.symbol(grid), grid)
    weight = grid.sobolevWeight(s)
    lhs = math.sqrt(float(np.sum(weight * (np.abs(u1E - u1T) ** 2 + np.abs(u2E - u2T) ** 2))))
    spec = NormSpec(s)
    thetaNorm = sobolevNorm(thetaE, spec)
    rhs = sobolevNorm(thetaE.withCoeffs(thetaE.coeffs - thetaT.coeffs), spec) + distance * thetaNorm
    inputs = {'s': s, 'gamma': multiplier.gamma, 'multiplierDistance': distance, 'thetaNorm': thetaNorm}
    return InequalityReport('velocityComparison', lhs, rhs, frozenConstants()['velocityComparison'], inputs=inputs)


def refinedMaximum(field):
    """Returns the largest magnitude of the trigonometric polynomial described by a spectral field. The best grid
    point is polished with a Newton solve for a zero of the gradient; if that doesn't converge nearby the grid value
    is used."""
    grid = field.grid
    samples = toPhysical(field).samples
    index = np.unravel_index(np.argmax(np.abs(samples)), samples.shape)
    gridMax = float(abs(samples[index]))
    if gridMax == 0:
        return 0.0

    active = np.nonzero(field.coeffs)
    coeffs = field.coeffs[active]
    k1 = grid.k1[active].astype(float)
    k2 = grid.k2[active].astype(float)

    def terms(x):
        return coeffs * np.exp(1j * (k1 * x[0] + k2 * x[1]))

    def gradient(x):
        t = terms(x)
        return [float(np.real(np.sum(1j * k1 * t))), float(np.real(np.sum(1j * k2 * t)))]

    def hessian(x):
        t = terms(x)
        d12 = -float(np.real(np.sum(k1 * k2 * t)))
        return [[-float(np.real(np.sum(k1 * k1 * t))), d12], [d12, -float(np.real(np.sum(k2 * k2 * t)))]]

    start = np.array([index[0], index[1]]) * grid.dx
    root, _, ier, _ = optimize.fsolve(gradient, start, fprime=hessian, full_output=True)
    if ier != 1 or np.hypot(*(root - start)) > grid.dx:
        return gridMax
    return max(gridMax, abs(float(np.real(np.sum(terms(root))))))


class SupportComponent():
    """One connected piece of a field's support: its points, the grid-aligned box on the torus that covers it (corner
    and side lengths, which may run past 2pi) and its area."""
    def __init__(self, indices, grid):
        self.count = len(indices[0])
        self.area = self.count * grid.cellArea()
        self.points = np.column_stack(indices) * grid.dx
        start1, extent1 = geometry.circularExtent(indices[0], grid.n)
        start2, extent2 = geometry.circularExtent(indices[1], grid.n)
        self.corner = (start1 * grid.dx, start2 * grid.dx)
        self.size = ((extent1 - 1) * grid.dx, (extent2 - 1) * grid.dx)

    def getDict(self):
        return {'area': self.area, 'cells': self.count, 'corner': list(self.corner), 'size': list(self.size)}


class SupportSummary():
    """The components of {|f| > threshold * ||f||_inf} and the smallest distance between two of them, which is None
    when there are fewer than two."""
    def __init__(self, components):
        self.components = components
        self.minDistance = None
        for i, first in enumerate(components):
            for second in components[i + 1:]:
                dist = geometry.setDistance(first.points, second.points)
                if self.minDistance is None or dist < self.minDistance:
                    self.minDistance = dist

    def getAreas(self):
        return [comp.area for comp in self.components]

    def getPoints(self):
        """Returns the points of all components together"""
        if len(self.components) == 0:
            return np.zeros((0, 2))
        return np.concatenate([comp.points for comp in self.components])

    def getDict(self):
        return {'components': [comp.getDict() for comp in self.components], 'minDistance': self.minDistance}

    def __len__(self):
        return len(self.components)


def _find(parent, label):
    while parent[label] != label:
        parent[label] = parent[parent[label]]
        label = parent[label]
    return label

def supportSummary(field, thresholdRel):
    """Finds the connected components of the set where |f| exceeds thresholdRel times its largest value, with grid
    neighbours joined across the periodic edges."""
    if not 0 < thresholdRel < 1:
        raise ValueError('Threshold must be in (0, 1), got ' + str(thresholdRel))
    values = np.abs(field.samples)
    peak = float(np.max(values))
    if peak == 0:
        return SupportSummary([])
    labels, count = measure.label(values > thresholdRel * peak, connectivity=1, background=0, return_num=True)

    parent = list(range(count + 1))
    for first, second in ((labels[0, :], labels[-1, :]), (labels[:, 0], labels[:, -1])):
        for a, b in zip(first, second):
            if a and b:
                rootA, rootB = _find(parent, a), _find(parent, b)
                if rootA != rootB:
                    parent[max(rootA, rootB)] = min(rootA, rootB)
    roots = np.array([_find(parent, label) for label in range(count + 1)])
    merged = roots[labels]

    components = []
    for root in sorted(set(roots[1:].tolist())):
        components.append(SupportComponent(np.nonzero(merged == root), field.grid))
    return SupportSummary(components)
