# Calculations package for the Exponential Congruence Toolkit
# Contains modular arithmetic, vectorized tables, symbol evaluation, partitions,
# classical symbols and analytic sums
