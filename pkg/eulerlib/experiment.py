"""This module includes the base class that all experiments inherit from, and the runner that spreads an experiment's
cases over worker threads. None of these objects should be instantiated directly."""

from abc import abstractmethod
from concurrent.futures import ThreadPoolExecutor
import math
import time

from loguru import logger

from .properties import PropertyCollection
from .report import ExperimentReport
from .simResult import SimAlert, SimAlertLevel, SimAlertType
from .defaults import defaultExperimentDicts

class Experiment(PropertyCollection):
    """A scenario that runs the solver on a set of cases and turns the numbers into a report with verdicts. Subclasses
    declare their parameters as properties, give themselves a name and implement 'run'."""
    experimentName = None

    def __init__(self, propDict=None):
        super().__init__()
        self.addProperties()
        self.setProperties(defaultExperimentDicts()[self.experimentName])
        if propDict is not None:
            self.setProperties(propDict)

    @abstractmethod
    def addProperties(self):
        """Declares the experiment's parameters"""

    def getConfigErrors(self, grid):
        """Returns a list of alerts describing parameters that can't be run on the given grid. Each alert's location
        is the name of the offending parameter."""
        return []

    @abstractmethod
    def run(self, grid, solverConfig, seed, threads=1):
        """Runs the experiment and returns an ExperimentReport"""

    def newReport(self, grid, solverConfig, seed):
        """Returns an empty report with the configuration of this run filled in"""
        report = ExperimentReport(self.experimentName, {
            'experiment': self.experimentName,
            'seed': seed,
            'grid': {'n': grid.n},
            'solver': solverConfig.getProperties(),
            'parameters': self.getProperties()
        })
        return report

    def resolutionError(self, name, value, grid):
        """Returns an alert for a frequency that the grid's dealiased band can't hold"""
        desc = 'frequency ' + str(value) + ' is not resolved on a grid of ' + str(grid.n) + ' (max ' + \
            str(grid.n // 3) + ')'
        return SimAlert(SimAlertLevel.ERROR, SimAlertType.CONSTRAINT, desc, 'parameters.' + name)


def probeTimes(tEnd, count):
    """Returns 'count' equally spaced times ending at tEnd"""
    return [tEnd * (i + 1) / count for i in range(count)]

def runCases(function, cases, threads=1, label='case'):
    """Calls 'function' on every case and returns the results in the order of the cases. With more than one thread
    the cases run concurrently; each case is sequential, so the results don't depend on the thread count."""
    cases = list(cases)
    logger.info('Running {} {}s on {} thread(s)', len(cases), label, threads)

    def timed(indexedCase):
        index, case = indexedCase
        start = time.perf_counter()
        out = function(case)
        logger.debug('{} {} of {} done in {:.2f} s', label.capitalize(), index + 1, len(cases),
                     time.perf_counter() - start)
        return out

    if threads <= 1:
        return [timed(item) for item in enumerate(cases)]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(timed, enumerate(cases)))

def perDecade(larger, smaller, deltaLarge, deltaSmall):
    """Returns the factor by which a quantity fell per decade of its driving parameter"""
    decades = math.log10(deltaLarge / deltaSmall)
    return (larger / smaller) ** (1 / decades)
