"""Contains the structured record that an experiment produces."""

from .simResult import SimAlertLevel, ResultTable

class Verdict():
    """A pass/fail judgement on one criterion. 'values' holds the recorded numbers it was derived from."""
    def __init__(self, name, passed, description, values=None):
        self.name = name
        self.passed = bool(passed)
        self.description = description
        self.values = {} if values is None else values

    def getDict(self):
        return {'name': self.name, 'passed': self.passed, 'description': self.description, 'values': self.values}


class FieldSnapshot():
    """A physical-space field kept for writing out, with the metadata that goes in its sidecar"""
    def __init__(self, name, field, time, gamma, kind):
        self.name = name
        self.field = field
        self.time = time
        self.gamma = gamma
        self.kind = kind


class ExperimentReport():
    """Everything an experiment produced: the tables of recorded numbers, the verdicts drawn from them, alerts raised
    by the runs, a copy of the configuration and some metadata about the run itself."""
    def __init__(self, experimentId, config=None):
        self.experimentId = experimentId
        self.config = {} if config is None else config
        self.tables = {}
        self.verdicts = []
        self.alerts = []
        self.metadata = {}
        self.snapshots = []

    def addTable(self, name, columns):
        """Creates, registers and returns a new table. 'columns' is a list of (key, type, title) tuples."""
        table = ResultTable(name, columns)
        self.tables[name] = table
        return table

    def addVerdict(self, name, passed, description, values=None):
        self.verdicts.append(Verdict(name, passed, description, values))

    def addAlert(self, alert):
        self.alerts.append(alert)

    def addAlerts(self, alerts, location=None):
        """Adds alerts from a run, tagging them with the case they came from"""
        for alert in alerts:
            if location is not None:
                alert.location = location if alert.location is None else location + ': ' + alert.location
            self.alerts.append(alert)

    def addSnapshot(self, name, field, time, gamma, kind='theta'):
        self.snapshots.append(FieldSnapshot(name, field, time, gamma, kind))

    def getVerdict(self, name):
        """Returns the first verdict with the given name, or None"""
        for verdict in self.verdicts:
            if verdict.name == name:
                return verdict
        return None

    def passed(self):
        """Returns True if every verdict passed"""
        return all(verdict.passed for verdict in self.verdicts)

    def hasErrors(self):
        """Returns True if any run raised an error alert"""
        return any(alert.level == SimAlertLevel.ERROR for alert in self.alerts)

    def getDict(self):
        """Returns a serializable version of the report"""
        return {
            'experiment': self.experimentId,
            'config': self.config,
            'metadata': self.metadata,
            'passed': self.passed(),
            'verdicts': [verdict.getDict() for verdict in self.verdicts],
            'alerts': [alert.getDict() for alert in self.alerts],
            'tables': {name: table.getDict() for name, table in self.tables.items()}
        }
