"""Reading and writing of everything that lives on disk: versioned YAML files, experiment reports and field
snapshots."""

from enum import Enum
import json
import os
import re

import numpy as np
import yaml

from eulerlib.spectral import makeGrid, RealField

appVersion = (0, 1, 0)
appVersionStr = '.'.join(map(str, appVersion))

class fileTypes(Enum):
    CONFIG = 1
    REGRESSION = 2


class ConfigLoader(yaml.SafeLoader):
    """A safe loader that also reads exponent notation without a decimal point ('1e-3') as a float"""

ConfigLoader.add_implicit_resolver(
    'tag:yaml.org,2002:float',
    re.compile(r'''^(?:[-+]?(?:[0-9][0-9_]*)\.[0-9_]*(?:[eE][-+]?[0-9]+)?
                    |[-+]?(?:[0-9][0-9_]*)(?:[eE][-+]?[0-9]+)
                    |\.[0-9_]+(?:[eE][-+]?[0-9]+)?
                    |[-+]?\.(?:inf|Inf|INF)
                    |\.(?:nan|NaN|NAN))$''', re.X),
    list('-+0123456789.'))

def loadText(text):
    """Parses YAML text, or JSON if the text is a JSON object"""
    if text.lstrip().startswith('{'):
        return json.loads(text)
    return yaml.load(text, Loader=ConfigLoader)

def parseVersion(version):
    """Turns '0.1.0' or [0, 1, 0] into a version tuple"""
    if isinstance(version, str):
        parts = version.split('.')
    elif isinstance(version, (list, tuple)):
        parts = version
    else:
        raise ValueError('version must be a string like 0.1.0')
    try:
        out = tuple(int(part) for part in parts)
    except (TypeError, ValueError):
        raise ValueError('version must be a string like 0.1.0') from None
    if len(out) != 3:
        raise ValueError('version must have three parts')
    return out

def futureVersion(verA, verB): # Returns true if a is newer than b
    return tuple(verA) > tuple(verB)

def checkVersion(version):
    """Raises a ValueError if data from the given version can't be read by this one"""
    if futureVersion(version, appVersion):
        new = '.'.join(str(num) for num in version)
        raise ValueError("Data is from a future version (" + new + " vs " + appVersionStr + ") and can't be loaded.")

def saveFile(path, data, dataType):
    output = {
        'version': appVersionStr,
        'type': dataType.name,
        'data': data
    }
    with open(path, 'w') as saveLocation:
        yaml.dump(output, saveLocation, sort_keys=False)

def loadFile(path, dataType):
    with open(path, 'r') as readLocation:
        fileData = yaml.load(readLocation, Loader=ConfigLoader)

    if not isinstance(fileData, dict) or not {'data', 'type', 'version'} <= set(fileData.keys()):
        raise ValueError('File did not contain the required fields. It may be corrupted or from an old version.')
    if fileData['type'] != dataType.name:
        raise TypeError('Loaded data type did not match expected type.')
    checkVersion(parseVersion(fileData['version']))
    return fileData['data']


def writeSnapshot(field, path, time=0.0, gamma=0.0, kind='theta'):
    """Writes the samples of a field as raw little-endian float64 values in row-major order, with a JSON sidecar at
    path + '.json' that describes them."""
    np.ascontiguousarray(field.samples, dtype='<f8').tofile(path)
    sidecar = {'n': field.grid.n, 'length': field.grid.length, 'time': time, 'gamma': gamma, 'kind': kind}
    with open(path + '.json', 'w') as sidecarFile:
        json.dump(sidecar, sidecarFile)

def readSnapshot(path):
    """Reads a snapshot written by writeSnapshot and returns the field and its sidecar"""
    with open(path + '.json', 'r') as sidecarFile:
        sidecar = json.load(sidecarFile)
    samples = np.fromfile(path, dtype='<f8')
    n = sidecar['n']
    if samples.size != n * n:
        raise ValueError('Snapshot holds ' + str(samples.size) + ' values but its sidecar declares n = ' + str(n))
    return RealField(makeGrid(n), samples.reshape((n, n))), sidecar


def writeReport(report, directory, manifest=None, snapshots=False):
    """Writes report.json, one CSV per table and manifest.json into the directory, and the report's snapshots under
    snapshots/ if asked to. Returns the paths written."""
    os.makedirs(directory, exist_ok=True)
    written = []

    path = os.path.join(directory, 'report.json')
    with open(path, 'w') as reportFile:
        json.dump(report.getDict(), reportFile, indent=2, allow_nan=False)
    written.append(path)

    for name, table in report.tables.items():
        path = os.path.join(directory, name + '.csv')
        with open(path, 'w', newline='') as tableFile:
            tableFile.write(table.getCSV())
        written.append(path)

    manifestData = {'version': appVersionStr, 'experiment': report.experimentId, 'config': report.config}
    if manifest is not None:
        manifestData.update(manifest)
    path = os.path.join(directory, 'manifest.json')
    with open(path, 'w') as manifestFile:
        json.dump(manifestData, manifestFile, indent=2)
    written.append(path)

    if snapshots and len(report.snapshots) > 0:
        snapshotDir = os.path.join(directory, 'snapshots')
        os.makedirs(snapshotDir, exist_ok=True)
        for snapshot in report.snapshots:
            path = os.path.join(snapshotDir, snapshot.name + '.bin')
            writeSnapshot(snapshot.field, path, snapshot.time, snapshot.gamma, snapshot.kind)
            written.append(path)
    return written
