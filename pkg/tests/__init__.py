# Tests package for the Exponential Congruence Toolkit
# Contains test suites for arithmetic, the symbol, partitions, classical symbols,
# analytic sums, models, verification and the command-line interface
