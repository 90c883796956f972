"""Provides the run-level defaults that are applied before a config file's own values."""

def defaultRunDict():
    runDict = {}
    runDict['seed'] = 0
    runDict['grid'] = {
        'n': 128
    }
    runDict['output'] = {
        'dir': 'output',
        'snapshots': False
    }
    return runDict
