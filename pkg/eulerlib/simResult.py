"""This module contains the classes that are returned from a flow simulation and from the inequality checks, including
the main results class and the channels and tables that it is comprised of."""

from enum import Enum
import math

class SimAlertLevel(Enum):
    """Levels of severity for sim alerts"""
    ERROR = 1
    WARNING = 2
    MESSAGE = 3

class SimAlertType(Enum):
    """Types of sim alerts"""
    CONSTRAINT = 1
    VALUE = 2
    STABILITY = 3

alertLevelNames = {
    SimAlertLevel.ERROR: 'Error',
    SimAlertLevel.WARNING: 'Warning',
    SimAlertLevel.MESSAGE: 'Message'
}

alertTypeNames = {
    SimAlertType.CONSTRAINT: 'Constraint',
    SimAlertType.VALUE: 'Value',
    SimAlertType.STABILITY: 'Stability'
}

class SimAlert():
    """A sim alert signifies a possible problem with a run. It has levels of severity including 'error' (the run
    could not continue or has failed), 'warning' (the run finished but a result looks suspicious), and 'message'
    (other information). The type describes the variety of issue the alert is associated with, and the description is
    a human-readable string with more details about the problem. The location can either be None or a string to
    help the user find the problem, such as the case or setting that produced it."""
    def __init__(self, level, alertType, description, location=None):
        self.level = level
        self.type = alertType
        self.description = description
        self.location = location

    def getDict(self):
        """Returns a serializable version of the alert"""
        return {
            'level': alertLevelNames[self.level],
            'type': alertTypeNames[self.type],
            'description': self.description,
            'location': self.location
        }

    def __str__(self):
        out = alertLevelNames[self.level] + '(' + alertTypeNames[self.type]
        if self.location is not None:
            out += ', ' + self.location
        return out + '): ' + self.description


def formatValue(value):
    """Renders a table cell. Floats use 17 significant digits so that the text reads back to the same 64-bit value."""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, int):
        return str(value)
    return format(float(value), '.17g')


class LogChannel():
    """A log channel accepts data from a single source throughout a run. It has a human-readable name such as
    'L2 Norm' to help the user interpret the result, a value type that data passed in will be cast to, and a unit or
    short description of the quantity."""
    def __init__(self, name, valueType, unit=''):
        if valueType not in (int, float):
            raise TypeError('Value type not in allowed set')
        self.name = name
        self.unit = unit
        self.valueType = valueType
        self.data = []

    def getData(self):
        """Return all of the data in the channel."""
        return self.data

    def getPoint(self, i):
        """Returns a specific datapoint by index."""
        return self.data[i]

    def addData(self, data):
        """Adds a new datapoint to the end."""
        self.data.append(self.valueType(data))

    def getMax(self):
        """Returns the maximum value of all datapoints."""
        return max(self.data)

    def __len__(self):
        return len(self.data)


class ResultTable():
    """A table is a set of log channels of equal length that are written out together, one row per datapoint. The
    column order is the order in which the channels were passed in."""
    def __init__(self, name, columns):
        self.name = name
        self.channels = {}
        for key, valueType, title in columns:
            self.channels[key] = LogChannel(title, valueType)

    def addRow(self, row):
        """Adds a row, which must be a dictionary with a value for every column."""
        if set(row.keys()) != set(self.channels.keys()):
            raise ValueError('Row for table ' + self.name + ' does not match its columns')
        for key, value in row.items():
            if not math.isfinite(value):
                raise ValueError('Non-finite value for ' + key + ' in table ' + self.name)
        for key, chan in self.channels.items():
            chan.addData(row[key])

    def getColumn(self, key):
        """Returns the data in a single column"""
        return self.channels[key].getData()

    def getRows(self):
        """Returns the table as a list of dictionaries"""
        return [{key: chan.getPoint(i) for key, chan in self.channels.items()} for i in range(len(self))]

    def __len__(self):
        if len(self.channels) == 0:
            return 0
        return len(next(iter(self.channels.values())))

    def getDict(self):
        """Returns a serializable representation of the table"""
        return {key: list(chan.getData()) for key, chan in self.channels.items()}

    def getCSV(self):
        """Returns a string that contains the table as CSV, with the column keys as the header row."""
        out = ','.join(self.channels.keys()) + '\n'
        for ind in range(len(self)):
            out += ','.join(formatValue(chan.getPoint(ind)) for chan in self.channels.values()) + '\n'
        return out


class InequalityReport():
    """The outcome of checking one inequality numerically. 'lhs' and 'rhs' are the two sides, and the ratio lhs/rhs is
    compared against 'bound'. Some inequalities come with a lower bound on the ratio as well. When both sides vanish the
    ratio is defined as 0. 'inputs' holds a summary of whatever else is useful to interpret the numbers."""
    ratioFloor = 1e-300

    def __init__(self, name, lhs, rhs, bound, lower=None, inputs=None, relTol=1e-12):
        self.name = name
        self.lhs = float(lhs)
        self.rhs = float(rhs)
        self.bound = float(bound)
        self.lower = None if lower is None else float(lower)
        self.inputs = {} if inputs is None else inputs
        if self.lhs == 0:
            self.ratio = 0.0
        else:
            self.ratio = self.lhs / max(self.rhs, self.ratioFloor)
        self.passed = self.ratio <= self.bound * (1 + relTol)
        if self.lower is not None and self.lhs != 0:
            self.passed = self.passed and self.ratio >= self.lower * (1 - relTol)

    def getDict(self):
        """Returns a serializable version of the report"""
        out = {
            'name': self.name,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'ratio': self.ratio,
            'bound': self.bound,
            'passed': self.passed,
            'inputs': dict(self.inputs)
        }
        if self.lower is not None:
            out['lower'] = self.lower
        return out


class FlowResult():
    """A FlowResult contains everything an integration produced: the diagnostics records, the final state, any
    snapshots taken at probe times, and the alerts raised along the way. The success flag is False if the run was
    aborted, in which case 'final' is the last state that was valid."""
    def __init__(self, pList, sList):
        self.alerts = []
        self.success = False
        self.records = []
        self.final = None
        self.snapshots = {}
        self.steps = 0

        self.channels = {
            'time': LogChannel('Time', float),
            'l2Theta': LogChannel('L2 Norm', float),
            'linfTheta': LogChannel('Sup Norm', float),
            'linfGrid': LogChannel('Grid Sup Norm', float),
            'energy': LogChannel('Energy', float),
            'maxSpeed': LogChannel('Max Speed', float)
        }
        for p in pList:
            self.channels['lp' + formatValue(p)] = LogChannel('L' + formatValue(p) + ' Norm', float)
        for s in sList:
            self.channels['hs' + formatValue(s)] = LogChannel('H' + formatValue(s) + ' Norm', float)

    def addAlert(self, alert):
        """Add an entry to the list of alerts for the run."""
        self.alerts.append(alert)

    def getAlertsByLevel(self, level):
        """Returns all alerts of the specified level."""
        return [alert for alert in self.alerts if alert.level == level]

    def addRecord(self, record):
        """Adds a diagnostics record and copies its values into the channels."""
        self.records.append(record)
        self.channels['time'].addData(record.time)
        self.channels['l2Theta'].addData(record.l2Theta)
        self.channels['linfTheta'].addData(record.linfTheta)
        self.channels['linfGrid'].addData(record.linfGrid)
        self.channels['energy'].addData(record.energy)
        self.channels['maxSpeed'].addData(record.maxSpeed)
        for p, value in record.lpTheta.items():
            self.channels['lp' + formatValue(p)].addData(value)
        for s, value in record.hsTheta.items():
            self.channels['hs' + formatValue(s)].addData(value)

    def getRelativeDrift(self, channel):
        """Returns the largest relative deviation of a channel from its first value."""
        data = self.channels[channel].getData()
        if data[0] == 0:
            return max(abs(value) for value in data)
        return max(abs(value - data[0]) for value in data) / abs(data[0])

    def getMaxSpeed(self):
        """Returns the highest velocity magnitude that was recorded."""
        return self.channels['maxSpeed'].getMax()

    def getTable(self, name='diagnostics'):
        """Returns the diagnostics as a table"""
        table = ResultTable(name, [(key, float, chan.name) for key, chan in self.channels.items()])
        for ind in range(len(self.records)):
            table.addRow({key: chan.getPoint(ind) for key, chan in self.channels.items()})
        return table

    def getCSV(self):
        """Returns a string that contains a CSV of the diagnostics."""
        return self.getTable().getCSV()
