"""Continuous dependence experiment submodule"""

from ..experiment import Experiment, runCases, probeTimes, perDecade
from ..properties import FloatProperty, IntProperty, FloatListProperty
from ..simResult import SimAlert, SimAlertLevel, SimAlertType
from ..multiplier import LogMultiplier
from ..velocity import FlowState, velocitySeparation
from ..analysis import NormSpec, sobolevNorm
from ..solutions import randomBandField
from ..flow import integrate, cflDt

class ContinuityExperiment(Experiment):
    """Integrates seeded smooth data theta0 and the perturbed data theta0 + delta * eta for each delta, and records the
    H^s distance between the solutions over time. All runs share one fixed timestep so the only difference between
    them is the data. The largest distance has to fall as delta falls, by a factor per decade of delta in
    [ratioMin, ratioMax]."""
    experimentName = 'continuity'

    def addProperties(self):
        self.props['deltas'] = FloatListProperty('Perturbation Sizes', 0, 1e3, minLength=1)
        self.props['s'] = FloatProperty('Sobolev Index', 2, 100, minInclusive=False)
        self.props['gamma'] = FloatProperty('Gamma', 0, 100)
        self.props['tEnd'] = FloatProperty('End Time', 0, 100, minInclusive=False)
        self.props['kmin'] = FloatProperty('Lowest Data Wavenumber', 1, 1e5)
        self.props['kmax'] = FloatProperty('Highest Data Wavenumber', 1, 1e5)
        self.props['decayExponent'] = FloatProperty('Spectral Decay Exponent', 0, 100)
        self.props['amplitude'] = FloatProperty('Data Amplitude', 0, 1e6)
        self.props['perturbationAmplitude'] = FloatProperty('Perturbation Amplitude', 0, 1e6)
        self.props['numProbes'] = IntProperty('Probe Count', 1, 100000)
        self.props['ratioMin'] = FloatProperty('Minimum Ratio per Decade', 0, 1e6)
        self.props['ratioMax'] = FloatProperty('Maximum Ratio per Decade', 0, 1e6)

    def getConfigErrors(self, grid):
        if self.getProperty('kmax') > grid.n // 3:
            return [self.resolutionError('kmax', self.getProperty('kmax'), grid)]
        if self.getProperty('kmin') > self.getProperty('kmax'):
            desc = 'kmin must not exceed kmax'
            return [SimAlert(SimAlertLevel.ERROR, SimAlertType.CONSTRAINT, desc, 'parameters.kmin')]
        return []

    def run(self, grid, solverConfig, seed, threads=1):
        report = self.newReport(grid, solverConfig, seed)
        band = (self.getProperty('kmin'), self.getProperty('kmax'), self.getProperty('decayExponent'))
        base = randomBandField(seed, grid, *band, self.getProperty('amplitude'))
        eta = randomBandField(seed + 1, grid, *band, self.getProperty('perturbationAmplitude'))
        multiplier = LogMultiplier(self.getProperty('gamma'))
        state0 = FlowState(base, multiplier=multiplier)

        config = solverConfig.copy({'tEnd': self.getProperty('tEnd')})
        if config.getProperty('fixedDt') == 0:
            config.setProperty('fixedDt', cflDt(state0, config))
        probes = [0.0] + probeTimes(self.getProperty('tEnd'), self.getProperty('numProbes'))
        s = self.getProperty('s')

        deltas = sorted(self.getProperty('deltas'), reverse=True)
        cases = [0.0] + deltas

        def runCase(delta):
            data = base.withCoeffs(base.coeffs + delta * eta.coeffs)
            return integrate(FlowState(data, multiplier=multiplier), config, probes)

        results = runCases(runCase, cases, threads)
        reference = results[0]
        report.addAlerts(reference.alerts, 'reference')
        report.addSnapshot('theta_reference_t0', state0.theta(), 0.0, multiplier.gamma)

        table = report.addTable('difference', [('delta', float, 'Delta'), ('t', float, 'Time'),
                                               ('thetaDiff', float, 'Vorticity Difference'),
                                               ('velocityDiff', float, 'Velocity Difference')])
        summary = report.addTable('summary', [('delta', float, 'Delta'), ('supThetaDiff', float, 'Sup Vorticity Diff'),
                                              ('supVelocityDiff', float, 'Sup Velocity Diff'),
                                              ('perDecade', float, 'Ratio per Decade')])
        sups = []
        spec = NormSpec(s)
        for delta, result in zip(deltas, results[1:]):
            report.addAlerts(result.alerts, 'delta=' + str(delta))
            if not (result.success and reference.success):
                continue
            supTheta = supVelocity = 0.0
            for t in probes:
                perturbed = result.snapshots[t]
                unperturbed = reference.snapshots[t]
                diff = sobolevNorm(perturbed.thetaHat.withCoeffs(perturbed.thetaHat.coeffs -
                                                                 unperturbed.thetaHat.coeffs), spec)
                velDiff = velocitySeparation(perturbed, unperturbed, s)
                table.addRow({'delta': delta, 't': t, 'thetaDiff': diff, 'velocityDiff': velDiff})
                supTheta = max(supTheta, diff)
                supVelocity = max(supVelocity, velDiff)
            ratio = 0.0
            if len(sups) > 0 and sups[-1][0] > 0 and delta > 0 and supTheta > 0:
                ratio = perDecade(sups[-1][1], supTheta, sups[-1][0], delta)
            sups.append((delta, supTheta, ratio))
            summary.addRow({'delta': delta, 'supThetaDiff': supTheta, 'supVelocityDiff': supVelocity,
                            'perDecade': ratio})

        if len(sups) == 0:
            return report

        values = [sup for _, sup, _ in sups]
        report.addVerdict('monotone', all(a >= b for a, b in zip(values, values[1:])),
                          'Largest difference does not grow as delta shrinks', {'supDifferences': values})
        for delta, sup, _ in sups:
            if delta == 0:
                report.addVerdict('zeroDelta', sup == 0, 'Unperturbed data gives identical solutions', {'sup': sup})

        ratios = [ratio for _, _, ratio in sups if ratio > 0]
        if len(ratios) > 0:
            low, high = self.getProperty('ratioMin'), self.getProperty('ratioMax')
            report.addVerdict('perDecade', all(low <= ratio <= high for ratio in ratios),
                              'Difference falls by a factor in [' + str(low) + ', ' + str(high) + '] per decade',
                              {'ratios': ratios})
        else:
            desc = 'Differences vanish; no per-decade ratio to check'
            report.addAlert(SimAlert(SimAlertLevel.MESSAGE, SimAlertType.VALUE, desc, 'perDecade'))
        return report
