"""Support separation experiment submodule"""

import math

import numpy as np

from ..experiment import Experiment, probeTimes
from ..properties import FloatProperty, IntProperty, TabularProperty
from ..simResult import SimAlert, SimAlertLevel, SimAlertType
from ..multiplier import LogMultiplier
from ..spectral import toSpectrum, dealias, removeMean
from ..velocity import FlowState
from ..analysis import NormSpec, sobolevNorm, lpNorm, supportSummary
from ..solutions import BlobSpec, bumpBlobPair
from ..flow import integrate
from .. import geometry

class SupportExperiment(Experiment):
    """Starts from two separated bumps (dealiased, with the mean removed) and follows the support of the vorticity,
    taken as the set where it exceeds a fraction of its peak. The two pieces have to stay two pieces, their distance
    can shrink by at most twice the peak speed times t, no point of the support may travel further than the peak
    speed allows, and the H^s norm has to stay within a frozen multiple of its initial value."""
    experimentName = 'support'

    def addProperties(self):
        self.props['blobs'] = TabularProperty('Blobs', BlobSpec)
        self.props['s'] = FloatProperty('Sobolev Index', 2, 100, minInclusive=False)
        self.props['gamma'] = FloatProperty('Gamma', 0, 100)
        self.props['tEnd'] = FloatProperty('End Time', 0, 100, minInclusive=False)
        self.props['threshold'] = FloatProperty('Support Threshold', 0, 1, minInclusive=False)
        self.props['numProbes'] = IntProperty('Probe Count', 1, 100000)
        self.props['hsRatioBound'] = FloatProperty('H^s Growth Bound', 0, 1e6, minInclusive=False)

    def getBlobs(self):
        return self.props['blobs'].tabs

    def getConfigErrors(self, grid):
        blobs = self.getBlobs()
        if len(blobs) != 2:
            desc = 'must hold exactly two blobs, got ' + str(len(blobs))
            return [SimAlert(SimAlertLevel.ERROR, SimAlertType.CONSTRAINT, desc, 'parameters.blobs')]
        gap = geometry.torusDistance(blobs[0].getCenter(), blobs[1].getCenter())
        if gap <= blobs[0].getProperty('radius') + blobs[1].getProperty('radius'):
            desc = 'blob supports overlap'
            return [SimAlert(SimAlertLevel.ERROR, SimAlertType.CONSTRAINT, desc, 'parameters.blobs')]
        if all(blob.getProperty('amplitude') == 0 for blob in blobs):
            desc = 'at least one blob must have a nonzero amplitude'
            return [SimAlert(SimAlertLevel.ERROR, SimAlertType.CONSTRAINT, desc, 'parameters.blobs')]
        return []

    def run(self, grid, solverConfig, seed, threads=1):
        report = self.newReport(grid, solverConfig, seed)
        blobs = self.getBlobs()
        raw = bumpBlobPair(blobs[0], blobs[1], grid)
        theta0 = removeMean(dealias(toSpectrum(raw)))
        if not np.any(theta0.coeffs):
            desc = 'Initial vorticity is zero on a grid of ' + str(grid.n) + '; blobs may be smaller than a cell'
            report.addAlert(SimAlert(SimAlertLevel.ERROR, SimAlertType.VALUE, desc, 'parameters.blobs'))
            return report
        gamma = self.getProperty('gamma')
        state0 = FlowState(theta0, multiplier=LogMultiplier(gamma))

        tEnd = self.getProperty('tEnd')
        probes = [0.0] + probeTimes(tEnd, self.getProperty('numProbes'))
        result = integrate(state0, solverConfig.copy({'tEnd': tEnd}), probes)
        report.addAlerts(result.alerts, 'support')
        if not result.success:
            return report

        s = self.getProperty('s')
        threshold = self.getProperty('threshold')
        spec = NormSpec(s)
        maxSpeed = result.getMaxSpeed()
        physical0 = state0.theta()
        initialNorm = sobolevNorm(theta0, spec)
        initial = supportSummary(physical0, threshold)
        initialPoints = initial.getPoints()
        initialDistance = initial.minDistance if initial.minDistance is not None else 0.0
        report.metadata['maxSpeed'] = maxSpeed
        report.metadata['transportConstant'] = maxSpeed / (lpNorm(physical0, 1) + lpNorm(physical0, math.inf))
        report.metadata['initialSupport'] = initial.getDict()

        table = report.addTable('support', [('t', float, 'Time'), ('components', int, 'Components'),
                                            ('minDistance', float, 'Min Distance'),
                                            ('distanceBound', float, 'Distance Bound'),
                                            ('hsRatio', float, 'H^s Ratio'), ('excursion', float, 'Excursion'),
                                            ('excursionBound', float, 'Excursion Bound')])
        countOk = distanceOk = excursionOk = True
        worstRatio = 0.0
        for t in probes:
            state = result.snapshots[t]
            field = state.theta()
            report.addSnapshot('theta_t' + format(t, '.6f'), field, t, gamma)
            summary = supportSummary(field, threshold)
            distance = summary.minDistance if summary.minDistance is not None else 0.0
            distanceBound = initialDistance - 2 * t * maxSpeed - 3 * grid.dx
            excursion = geometry.maxDistanceToSet(summary.getPoints(), initialPoints) if len(summary) > 0 else 0.0
            excursionBound = maxSpeed * t + 3 * grid.dx
            ratio = sobolevNorm(state.thetaHat, spec) / initialNorm
            worstRatio = max(worstRatio, ratio)

            if len(summary) != len(initial):
                countOk = False
                desc = 'Support has ' + str(len(summary)) + ' components at t = ' + str(t)
                report.addAlert(SimAlert(SimAlertLevel.WARNING, SimAlertType.VALUE, desc, 'support'))
            distanceOk = distanceOk and len(summary) >= 2 and distance >= distanceBound
            excursionOk = excursionOk and excursion <= excursionBound
            table.addRow({'t': t, 'components': len(summary), 'minDistance': distance,
                          'distanceBound': distanceBound, 'hsRatio': ratio, 'excursion': excursion,
                          'excursionBound': excursionBound})

        report.addVerdict('components', countOk and len(initial) == 2, 'Support keeps two components',
                          {'initial': len(initial)})
        report.addVerdict('separation', distanceOk, 'Component distance stays above D0 - 2 t max|u| - 3 dx',
                          {'initialDistance': initialDistance, 'maxSpeed': maxSpeed})
        report.addVerdict('excursion', excursionOk, 'Support stays within max|u| t + 3 dx of where it started',
                          {'maxSpeed': maxSpeed})
        bound = self.getProperty('hsRatioBound')
        report.addVerdict('hsBound', worstRatio <= bound, 'H^s norm stays within ' + str(bound) + ' times its start',
                          {'supRatio': worstRatio})
        return report
