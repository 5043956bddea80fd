# Models package for the Exponential Congruence Toolkit
# Contains frozen data models for queries, factorizations, partitions and reports
