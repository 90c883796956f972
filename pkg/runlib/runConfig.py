"""Turns config text into a fully validated run description and back."""

import yaml

from eulerlib.properties import PropertyCollection, IntProperty, BoolProperty, StringProperty
from eulerlib.flow import SolverConfig
from eulerlib.spectral import makeGrid
from eulerlib.experiments import experimentTypes

from .defaults import defaultRunDict
from .fileIO import loadText, parseVersion, checkVersion, appVersionStr

sections = ('experiment', 'seed', 'grid', 'solver', 'parameters', 'output')

class GridSettings(PropertyCollection):
    def __init__(self):
        super().__init__()
        self.props['n'] = IntProperty('Grid Size', 8, 8192, even=True)


class OutputSettings(PropertyCollection):
    def __init__(self):
        super().__init__()
        self.props['dir'] = StringProperty('Output Directory')
        self.props['snapshots'] = BoolProperty('Write Snapshots')


class RunConfig():
    """Everything needed to run one experiment: which experiment, its parameters, the grid and solver settings, the
    seed and where the results go."""
    def __init__(self, propDict=None):
        self.experiment = None
        self.seed = IntProperty('Seed', 0, 2 ** 32 - 1)
        self.grid = GridSettings()
        self.solver = SolverConfig()
        self.output = OutputSettings()
        self.parameters = None
        self.applyDict(defaultRunDict())
        if propDict is not None:
            self.applyDict(propDict)

    def getDict(self):
        runDict = {}
        runDict['experiment'] = None if self.parameters is None else self.parameters.experimentName
        runDict['seed'] = self.seed.getValue()
        runDict['grid'] = self.grid.getProperties()
        runDict['solver'] = self.solver.getProperties()
        runDict['parameters'] = {} if self.parameters is None else self.parameters.getProperties()
        runDict['output'] = self.output.getProperties()
        return runDict

    def applyDict(self, dictionary):
        """Applies the sections present in the dictionary on top of the current values. Choosing a different experiment
        resets the parameters to that experiment's defaults before any given parameters are applied."""
        if not isinstance(dictionary, dict):
            raise ValueError('config must be a mapping of sections')
        for key in dictionary:
            if key not in sections:
                raise ValueError(str(key) + ' is not a recognized setting')
        if 'experiment' in dictionary:
            name = dictionary['experiment']
            if name not in experimentTypes:
                raise ValueError('experiment must be one of ' + ', '.join(experimentTypes))
            if self.parameters is None or self.parameters.experimentName != name:
                self.parameters = experimentTypes[name]()
        if 'seed' in dictionary:
            try:
                self.seed.setValue(dictionary['seed'])
            except ValueError as err:
                raise ValueError('seed ' + str(err)) from None
        for name, collection in (('grid', self.grid), ('solver', self.solver), ('output', self.output)):
            if name in dictionary:
                collection.setProperties(self._section(dictionary, name), name)
        if 'parameters' in dictionary:
            if self.parameters is None:
                raise ValueError('parameters need an experiment to be chosen')
            self.parameters.setProperties(self._section(dictionary, 'parameters'), 'parameters')

    @staticmethod
    def _section(dictionary, name):
        section = dictionary[name]
        if section is None:
            return {}
        if not isinstance(section, dict):
            raise ValueError(name + ' must be a mapping')
        return section

    def getGrid(self):
        return makeGrid(self.grid.getProperty('n'))

    def getExperiment(self):
        return self.parameters

    def getSeed(self):
        return self.seed.getValue()

    def getConfigErrors(self):
        """Returns the alerts raised by the experiment for parameters the grid can't support"""
        return self.parameters.getConfigErrors(self.getGrid())

    def __eq__(self, other):
        return isinstance(other, RunConfig) and self.getDict() == other.getDict()


def parseConfig(text):
    """Parses YAML (or JSON) config text into a validated RunConfig. Any problem raises a ValueError whose message
    starts with the path of the offending setting."""
    try:
        data = loadText(text)
    except (yaml.YAMLError, ValueError) as err:
        raise ValueError('config is not valid YAML or JSON: ' + str(err)) from None
    if not isinstance(data, dict):
        raise ValueError('config must be a mapping of sections')
    data = dict(data)
    if 'version' in data:
        checkVersion(parseVersion(data.pop('version')))
    if 'experiment' not in data:
        raise ValueError('experiment is required')

    config = RunConfig(data)
    for alert in config.getConfigErrors():
        raise ValueError(alert.location + ' ' + alert.description)
    return config

def serializeConfig(config):
    """Returns YAML text that parseConfig turns back into an equal config"""
    output = {'version': appVersionStr}
    output.update(config.getDict())
    return yaml.dump(output, sort_keys=False)

def loadConfig(path):
    with open(path, 'r') as readLocation:
        return parseConfig(readLocation.read())
