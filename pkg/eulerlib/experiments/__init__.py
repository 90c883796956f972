from .convergence import *
from .continuity import *
from .gammaComparison import *
from .nonuniform import *
from .support import *

# Generate experiment name -> constructor lookup table
experimentTypes = {}
experimentClasses = [ConvergenceExperiment, ContinuityExperiment, GammaComparisonExperiment, NonuniformExperiment,
                     SupportExperiment]
for experimentType in experimentClasses:
    experimentTypes[experimentType.experimentName] = experimentType
