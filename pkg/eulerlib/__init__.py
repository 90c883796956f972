from .simResult import SimAlertLevel, SimAlertType, alertLevelNames, alertTypeNames
