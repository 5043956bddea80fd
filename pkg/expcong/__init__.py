# Exponential Congruence Toolkit
# Evaluates the symbol (a/n)_k, its partitions of the unit group, classical
# symbol relations and analytic sums, with a click command-line front end
__version__ = "1.0.0"
