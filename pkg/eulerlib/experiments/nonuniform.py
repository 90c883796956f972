"""Non-uniform dependence experiment submodule"""

import math

import numpy as np

from ..experiment import Experiment, runCases
from ..properties import FloatProperty, FloatListProperty, IntListProperty
from ..multiplier import LogMultiplier
from ..velocity import velocitySeparation
from ..analysis import multiplierDistance
from ..solutions import HMFamilySpec, hmExactState, hmSeparationClosedForm
from ..flow import integrate
from ..simResult import SimAlert, SimAlertLevel, SimAlertType

deficitFloor = 1e-12

def deficitOrder(rows):
    """Returns the least-squares slope of log |deficit| against log |T - id| over the rows with t > 0, or None if
    fewer than two distinct multiplier distances have a deficit above the floor."""
    points = [(math.log(row['multiplierDistance']), math.log(abs(row['deficit']))) for row in rows
              if row['t'] > 0 and row['multiplierDistance'] > 0 and abs(row['deficit']) > deficitFloor]
    if len(set(x for x, _ in points)) < 2:
        return None
    xs, ys = zip(*points)
    return float(np.polyfit(xs, ys, 1)[0])

class NonuniformExperiment(Experiment):
    """Integrates the omega = +1 and -1 members of the traveling shear family for each frequency n, starting from
    their common vorticity, and measures the H^s distance of their velocities at the probe times. The initial distance
    is 2/n, which goes to zero with n, while the later distance has to stay above |sin t| (with a margin) and agree
    with the closed form. The deficit against the gamma = 0 closed form is tabled next to |T - id| at frequency n, and
    the order of the deficit in |T - id| is fitted on a log-log scale."""
    experimentName = 'nonuniform'

    def addProperties(self):
        self.props['nList'] = IntListProperty('Frequencies', 1, 100000, minLength=1)
        self.props['s'] = FloatProperty('Sobolev Index', 2, 100, minInclusive=False)
        self.props['gamma'] = FloatProperty('Gamma', 0, 100)
        self.props['probes'] = FloatListProperty('Probe Times', 0, 100, minInclusive=False, minLength=1)
        self.props['margin'] = FloatProperty('Required Margin', 0, 100)
        self.props['agreement'] = FloatProperty('Closed Form Agreement', 0, 1, minInclusive=False)
        self.props['dataTolerance'] = FloatProperty('Data Separation Tolerance', 0, 1, minInclusive=False)

    def getConfigErrors(self, grid):
        errors = []
        for n in self.getProperty('nList'):
            if n > grid.n // 3:
                errors.append(self.resolutionError('nList', n, grid))
        return errors

    def run(self, grid, solverConfig, seed, threads=1):
        report = self.newReport(grid, solverConfig, seed)
        s = self.getProperty('s')
        gamma = self.getProperty('gamma')
        probes = [0.0] + sorted(self.getProperty('probes'))
        config = solverConfig.copy({'tEnd': probes[-1]})
        nList = sorted(self.getProperty('nList'))

        cases = [(n, omega) for n in nList for omega in (1, -1)]

        def runCase(case):
            n, omega = case
            return integrate(hmExactState(HMFamilySpec(n, s, omega, gamma), 0, grid), config, probes)

        results = dict(zip(cases, runCases(runCase, cases, threads)))

        separation = report.addTable('separation', [('n', int, 'Frequency'), ('t', float, 'Time'),
                                                    ('measured', float, 'Measured Separation'),
                                                    ('closed_form', float, 'Closed Form'),
                                                    ('sin_t', float, '|sin t|'),
                                                    ('data_sep', float, 'Data Separation')])
        deficit = report.addTable('deficit', [('n', int, 'Frequency'), ('t', float, 'Time'),
                                              ('deficit', float, 'Measured Minus Euler Closed Form'),
                                              ('multiplierDistance', float, '|T - id| at n')])
        dataSeps = []
        lowerOk = marginOk = agreementOk = True
        worstAgreement = 0.0
        smallestMargin = math.inf
        margin = self.getProperty('margin')
        for n in nList:
            plus, minus = results[(n, 1)], results[(n, -1)]
            report.addAlerts(plus.alerts, 'n=' + str(n) + ', omega=+1')
            report.addAlerts(minus.alerts, 'n=' + str(n) + ', omega=-1')
            if not (plus.success and minus.success):
                continue
            report.addSnapshot('theta_n' + str(n) + '_t0', plus.snapshots[0.0].theta(), 0.0, gamma)
            distance = multiplierDistance(LogMultiplier(gamma), n)
            for t in probes:
                measured = velocitySeparation(plus.snapshots[t], minus.snapshots[t], s)
                closed = hmSeparationClosedForm(n, s, gamma, t)
                euler = hmSeparationClosedForm(n, s, 0, t)['velocitySeparation']
                sinT = abs(math.sin(t))
                separation.addRow({'n': n, 't': t, 'measured': measured,
                                   'closed_form': closed['velocitySeparation'], 'sin_t': sinT,
                                   'data_sep': closed['dataSeparation']})
                deficit.addRow({'n': n, 't': t, 'deficit': measured - euler, 'multiplierDistance': distance})
                if t == 0:
                    dataSeps.append((n, measured, closed['dataSeparation']))
                if sinT > 0:
                    lowerOk = lowerOk and measured >= sinT
                    marginOk = marginOk and measured >= margin * sinT
                    smallestMargin = min(smallestMargin, measured / sinT)
                relative = abs(measured - closed['velocitySeparation']) / closed['velocitySeparation']
                worstAgreement = max(worstAgreement, relative)
                agreementOk = agreementOk and relative <= self.getProperty('agreement')

        order = deficitOrder(deficit.getRows())
        if order is None:
            desc = 'Fewer than two frequencies with a nonzero deficit; deficit order not fitted'
            report.addAlert(SimAlert(SimAlertLevel.MESSAGE, SimAlertType.VALUE, desc, 'deficit'))
        else:
            report.metadata['deficitOrder'] = order

        if len(dataSeps) == 0:
            return report
        tolerance = self.getProperty('dataTolerance')
        matches = all(abs(measured - expected) <= tolerance for _, measured, expected in dataSeps)
        measuredSeps = [measured for _, measured, _ in dataSeps]
        shrinking = all(a > b for a, b in zip(measuredSeps, measuredSeps[1:]))
        report.addVerdict('dataSeparation', matches and shrinking,
                          'Initial velocity separation equals 2/n and shrinks as n grows',
                          {'separations': measuredSeps})
        values = {'smallestRatio': smallestMargin if math.isfinite(smallestMargin) else 0.0}
        report.addVerdict('lowerBound', lowerOk, 'Separation stays at or above |sin t|', values)
        report.addVerdict('margin', marginOk, 'Separation stays at or above ' + str(margin) + ' |sin t|', values)
        report.addVerdict('closedForm', agreementOk, 'Separation agrees with the closed form to within ' +
                          str(self.getProperty('agreement')), {'worstRelative': worstAgreement})
        return report
