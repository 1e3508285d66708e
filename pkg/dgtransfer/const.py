# -*- coding:utf-8 -*-

"""
Some constants.

Author: dgtransfer developers
Date:   2024/03/02
"""

# Version
VERSION = "0.3.0"

# Exit codes of the command line tool.
EXIT_OK = 0
EXIT_CONFIG = 2  # Bad config, inadmissible characteristic.
EXIT_VERIFICATION = 3  # Some identity failed.
EXIT_PARSE = 4  # Element text could not be parsed.

# Verification suites.
SUITE_ALL = "all"
SUITE_ROWS = "rows"
SUITE_SDR = "sdr"
SUITE_DG = "dg"
SUITE_RESOLUTION = "resolution"
SUITE_COMPARISON = "comparison"
SUITE_HTT = "htt"
SUITES = (SUITE_ROWS, SUITE_SDR, SUITE_DG, SUITE_RESOLUTION, SUITE_COMPARISON, SUITE_HTT)

# Sampling modes.
MODE_EXHAUSTIVE = "exhaustive"
MODE_SAMPLED = "sampled"

# Defaults, overridable through the DEFAULTS section of the config file.
DEFAULT_CHARACTERISTIC = 0
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 1000
DEFAULT_EXHAUSTIVE_LIMIT = 4096  # Above this many tuples a suite samples instead.
DEFAULT_MAX_FAILURES = 20  # Located failures kept per check.

# Label of the generator of R = (L_a)_0.
UNIT_LABEL = "1"
