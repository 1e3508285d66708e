# Small parameters shared by the test suites.

N = 2
A = 2
PRIME = 11
SMALL_PRIME = 3
SEED = 7
SAMPLES = 300
