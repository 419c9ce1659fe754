__version__ = "0.1.0"

from pycatalyst.benchmark import run_experiment as run
