"""logEuler: pseudospectral experiments on the log-regularized 2D Euler equations.

Usage:
  main.py run --config <file> [--out <dir>] [--threads <k>] [--verbose]
  main.py validate --config <file>
  main.py version
  main.py (-h | --help)

Options:
  --config <file>   Run configuration (YAML or JSON).
  --out <dir>       Directory for the results, overriding output.dir.
  --threads <k>     Number of worker threads for independent cases [default: 1].
  --verbose         Log the progress of every case.
  -h --help         Show this screen.
"""

import sys

from docopt import docopt
from loguru import logger

from app import App

if __name__ == '__main__':
    arguments = docopt(__doc__)
    logger.remove()
    logger.add(sys.stderr, level='DEBUG' if arguments['--verbose'] else 'INFO')
    sys.exit(App(arguments).exec())
