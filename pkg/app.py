import time

from loguru import logger

from eulerlib import alertLevelNames, alertTypeNames, SimAlertLevel
from runlib.fileIO import appVersionStr, writeReport
from runlib.runConfig import loadConfig

class exitCodes:
    OK = 0
    VERDICT_FAILED = 1
    CONFIG_ERROR = 2
    RUNTIME_ERROR = 3
    IO_ERROR = 4

class App():
    """Runs the command that docopt parsed out of the command line and turns its outcome into an exit code"""
    def __init__(self, args):
        self.args = args

    def exec(self):
        if self.args.get('version'):
            print(appVersionStr)
            return exitCodes.OK
        if self.args.get('validate'):
            return self.validate(self.args['--config'])
        if self.args.get('run'):
            return self.run(self.args['--config'], self.args.get('--out'), self.args.get('--threads'))
        return exitCodes.CONFIG_ERROR

    def loadConfig(self, path):
        """Returns the config at path and an exit code, which is OK unless the config couldn't be loaded"""
        try:
            return loadConfig(path), exitCodes.OK
        except OSError as err:
            self.outputException(err, 'Could not read config file')
            return None, exitCodes.IO_ERROR
        except ValueError as err:
            self.outputException(err, 'Invalid config:')
            return None, exitCodes.CONFIG_ERROR

    def validate(self, path):
        config, code = self.loadConfig(path)
        if config is not None:
            logger.info("Config for experiment '{}' is valid", config.getExperiment().experimentName)
        return code

    def run(self, path, outDir=None, threads=None):
        config, code = self.loadConfig(path)
        if config is None:
            return code
        try:
            threads = 1 if threads is None else int(threads)
            if threads < 1:
                raise ValueError
        except ValueError:
            self.outputException(threads, 'Thread count must be a positive integer, got')
            return exitCodes.CONFIG_ERROR
        if outDir is None:
            outDir = config.output.getProperty('dir')

        experiment = config.getExperiment()
        logger.info("Running experiment '{}' on a {}² grid", experiment.experimentName, config.grid.getProperty('n'))
        start = time.perf_counter()
        report = experiment.run(config.getGrid(), config.solver, config.getSeed(), threads)
        wallTime = time.perf_counter() - start
        logger.info('Experiment finished in {:.2f} s', wallTime)

        for alert in report.alerts:
            message = alertLevelNames[alert.level] + '(' + alertTypeNames[alert.type] + ', ' + str(alert.location) + \
                '): ' + alert.description
            if alert.level == SimAlertLevel.ERROR:
                logger.error(message)
            elif alert.level == SimAlertLevel.WARNING:
                logger.warning(message)
            else:
                logger.info(message)
        for verdict in report.verdicts:
            logger.info('{} {}: {}', 'PASS' if verdict.passed else 'FAIL', verdict.name, verdict.description)

        manifest = {'seed': config.getSeed(), 'threads': threads, 'wallTime': wallTime,
                    'config': config.getDict()}
        try:
            written = writeReport(report, outDir, manifest, config.output.getProperty('snapshots'))
        except OSError as err:
            self.outputException(err, 'Could not write results to ' + str(outDir) + ':')
            return exitCodes.IO_ERROR
        logger.info('Wrote {} file(s) to {}', len(written), outDir)

        if report.hasErrors():
            return exitCodes.RUNTIME_ERROR
        if not report.passed():
            return exitCodes.VERDICT_FAILED
        return exitCodes.OK

    def outputException(self, exception, text):
        logger.error(text + ' ' + str(exception))
