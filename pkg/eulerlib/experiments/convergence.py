"""Convergence experiment submodule"""

import math

import numpy as np

from ..experiment import Experiment, runCases
from ..properties import FloatProperty, IntProperty, FloatListProperty, IntListProperty
from ..simResult import SimAlert, SimAlertLevel, SimAlertType
from ..spectral import makeGrid
from ..solutions import HMFamilySpec, hmExactState
from ..flow import integrate

class ConvergenceExperiment(Experiment):
    """Integrates members of the traveling shear family with fixed timesteps and measures the error against the
    closed form. The error of the smallest timestep has to meet the tolerance, halving the timestep has to shrink the
    error by a factor in [orderMin, orderMax] (fourth order gives 16) and the grid size shouldn't matter."""
    experimentName = 'convergence'

    def addProperties(self):
        self.props['gridSizes'] = IntListProperty('Grid Sizes', 8, 4096, minLength=1)
        self.props['dtList'] = FloatListProperty('Timesteps', 0, 10, minInclusive=False, minLength=1)
        self.props['n'] = IntProperty('Frequency', 1, 100000)
        self.props['s'] = FloatProperty('Sobolev Index', 2, 100, minInclusive=False)
        self.props['gammas'] = FloatListProperty('Gammas', 0, 100, minLength=1)
        self.props['tEnd'] = FloatProperty('End Time', 0, 100, minInclusive=False)
        self.props['tolerance'] = FloatProperty('Error Tolerance', 0, 1, minInclusive=False)
        self.props['orderMin'] = FloatProperty('Minimum Halving Ratio', 1, 1000)
        self.props['orderMax'] = FloatProperty('Maximum Halving Ratio', 1, 1000)
        self.props['errorFloor'] = FloatProperty('Error Floor', 0, 1)

    def getConfigErrors(self, grid):
        errors = []
        for size in self.getProperty('gridSizes'):
            if size % 2 != 0:
                desc = 'grid size ' + str(size) + ' must be even'
                errors.append(SimAlert(SimAlertLevel.ERROR, SimAlertType.CONSTRAINT, desc, 'parameters.gridSizes'))
            elif self.getProperty('n') > size // 3:
                errors.append(self.resolutionError('n', self.getProperty('n'), makeGrid(size)))
        return errors

    def runCase(self, case, solverConfig):
        size, gamma, dt = case
        grid = makeGrid(size)
        spec = HMFamilySpec(self.getProperty('n'), self.getProperty('s'), 1, gamma)
        config = solverConfig.copy({'fixedDt': dt, 'tEnd': self.getProperty('tEnd')})
        result = integrate(hmExactState(spec, 0, grid), config)
        error = None
        if result.success:
            exact = hmExactState(spec, result.final.time, grid).thetaHat.coeffs
            diff = result.final.thetaHat.coeffs - exact
            error = math.sqrt(float(np.sum(np.abs(diff) ** 2)) / float(np.sum(np.abs(exact) ** 2)))
        return result, error

    def run(self, grid, solverConfig, seed, threads=1):
        report = self.newReport(grid, solverConfig, seed)
        dtList = sorted(self.getProperty('dtList'), reverse=True)
        cases = [(size, gamma, dt) for size in self.getProperty('gridSizes') for gamma in self.getProperty('gammas')
                 for dt in dtList]
        outcomes = runCases(lambda case: self.runCase(case, solverConfig), cases, threads)

        table = report.addTable('errors', [('gridN', int, 'Grid Size'), ('gamma', float, 'Gamma'),
                                           ('dt', float, 'Timestep'), ('error', float, 'Relative L2 Error'),
                                           ('ratio', float, 'Ratio to Previous'), ('order', float, 'Observed Order')])
        errors = {}
        for (size, gamma, dt), (result, error) in zip(cases, outcomes):
            location = 'n=' + str(size) + ', gamma=' + str(gamma) + ', dt=' + str(dt)
            report.addAlerts(result.alerts, location)
            if error is None:
                continue
            errors[(size, gamma, dt)] = error
            ratio = order = 0.0
            previous = dtList.index(dt) - 1
            if previous >= 0 and (size, gamma, dtList[previous]) in errors and error > 0:
                ratio = errors[(size, gamma, dtList[previous])] / error
                order = math.log(ratio) / math.log(dtList[previous] / dt) if ratio > 0 else 0.0
            table.addRow({'gridN': size, 'gamma': gamma, 'dt': dt, 'error': error, 'ratio': ratio, 'order': order})

        tolerance = self.getProperty('tolerance')
        finest = [errors[key] for key in errors if key[2] == dtList[-1]]
        if len(finest) > 0:
            worst = max(finest)
            report.addVerdict('accuracy', worst <= tolerance,
                              'Relative error at dt = ' + str(dtList[-1]) + ' is within ' + str(tolerance),
                              {'worstError': worst, 'tolerance': tolerance})

        ratios = []
        floor = self.getProperty('errorFloor')
        for (size, gamma, dt), error in errors.items():
            index = dtList.index(dt)
            if index == 0 or not math.isclose(dtList[index - 1], 2 * dt, rel_tol=1e-12):
                continue
            coarse = errors.get((size, gamma, dtList[index - 1]))
            if coarse is not None and coarse > floor and error > floor:
                ratios.append(coarse / error)
        if len(ratios) > 0:
            low, high = self.getProperty('orderMin'), self.getProperty('orderMax')
            report.addVerdict('order', all(low <= ratio <= high for ratio in ratios),
                              'Halving the timestep shrinks the error by a factor in [' + str(low) + ', ' +
                              str(high) + ']', {'ratios': ratios})
        else:
            desc = 'No timestep pair with errors above ' + str(floor) + '; temporal order not measured'
            report.addAlert(SimAlert(SimAlertLevel.MESSAGE, SimAlertType.VALUE, desc, 'order'))

        spreads = []
        for gamma in self.getProperty('gammas'):
            for dt in dtList:
                values = [errors[key] for key in errors if key[1] == gamma and key[2] == dt]
                if len(values) > 1:
                    spreads.append(max(values) - min(values))
        if len(spreads) > 0:
            report.addVerdict('spatialFloor', max(spreads) <= tolerance,
                              'Errors do not depend on the grid size beyond the tolerance',
                              {'largestSpread': max(spreads)})
        return report
