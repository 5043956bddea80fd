# Constants for the Exponential Congruence Toolkit

# Arithmetic caps
MODULUS_CAP = 2 ** 62  # largest modulus accepted anywhere
VECTOR_MODULUS_LIMIT = 2 ** 31  # int64 products stay exact below this
DEFAULT_MAX_N = 10 ** 6  # enumeration cap (EXPCONG_MAX_N overrides)
DISCRETE_LOG_LIMIT = 10 ** 10  # baby-step giant-step table stays below 10^5 entries
ORACLE_LIMIT = 10 ** 5  # exhaustive cross-checks run automatically up to here

# Primality
# Deterministic for every n < 3.3 * 10^24, which covers the modulus cap
MILLER_RABIN_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
TRIAL_DIVISION_BOUND = 1000
RHO_MAX_ROUNDS = 64

# Floating point
FLOAT_SLACK = 1e-9
EXACT_FLOAT_SLACK = 1e-12

# Parallel scans
DEFAULT_JOBS = 1
MIN_CHUNK_SIZE = 4096

# Exit codes
EXIT_VERIFICATION_FAILURE = 1
EXIT_DOMAIN_ERROR = 2
EXIT_RESOURCE_CAP = 3

# Environment variables
ENV_MAX_N = "EXPCONG_MAX_N"
ENV_JOBS = "EXPCONG_JOBS"
ENV_LOG_LEVEL = "EXPCONG_LOG_LEVEL"
DEFAULT_LOG_LEVEL = "WARNING"

# Symbol branches reported by --explain
BRANCH_PLUS_ONE = "plus-one"
BRANCH_MINUS_ONE = "minus-one"
BRANCH_NEITHER = "neither"
BRANCH_NOT_A_UNIT = "not-a-unit"

# Provenance strings attached to every output record and verification result
PROVENANCE = {
    'definition': "Definition: exponential congruence symbol",
    'residue_class': "Theorem: dependence only on residue class",
    'invertibility': "Theorem: invertibility is necessary",
    'worked_example': "Example: composite modulus 15 via CRT",
    'prime_count': "Corollary: counting residues for prime modulus",
    'power_compat': "Proposition: power-compatibility",
    'periodicity': "Proposition: periodicity in the exponent",
    'inverse': "Proposition: inverse and sign symmetry",
    'sign_subgroup': "Proposition: subgroup of k-sign elements",
    'restricted_multiplicativity': "Corollary: multiplicativity on the k-sign subgroup",
    'crt': "Proposition: decomposition via the Chinese Remainder Theorem",
    'legendre': "Theorem: connection with the Legendre symbol",
    'jacobi': "Corollary: Jacobi relation",
    'order': "Theorem: symbol and multiplicative order",
    'multiplicativity': "Theorem: multiplicativity in a (expected to fail)",
    'symmetry': "Theorem: symmetry property",
    'solvability': "Theorem: symbol and solvability",
    'orders': "Theorem: connection with orders",
    'partition': "Theorem: partition of residue classes",
    'quadratic': "Theorem: quadratic residues",
    'higher_residues': "Theorem: cubic and higher residues",
    'primitive_root': "Theorem: symbol via primitive roots",
    'membership': "Theorem: membership criterion",
    'index_two': "Corollary: index-two subgroup",
    'orthogonality': "Theorem: orthogonality relation",
    'exp_sum_bound': "Theorem: bound on symbolic exponential sum",
    'dirichlet_series': "Theorem: Dirichlet series representation",
    'euler_product': "Euler product of the Dirichlet series (breaks when chi vanishes on units)",
    'completed': "Conjecture: zeta-type relation (exploratory samples only)",
    'arithmetic': "Arithmetic substrate: factorization, totients, orders, CRT",
    'scan': "Bulk scan: counting corollary and orthogonality",
    'verify': "Verification suite",
}

# Verification scale presets
VERIFICATION_SCALES = {
    'quick': {
        'n_max': 120,
        'k_max': 12,
        'arith_n_max': 400,
        'scalar_n_max': 40,
        'prime_count_p_max': 60,
        'prime_count_k_max': 20,
        'legendre_p_max': 100,
        'power_residue_p_max': 60,
        'primitive_root_p_max': 50,
        'primitive_root_k_max': 12,
        'exp_sum_n_max': 60,
        'exp_sum_k_max': 6,
        'series_terms': 10 ** 4,
        'euler_prime_cutoff': 10 ** 3,
        'multiplicativity_n_max': 60,
        'jacobi_n_max': 60,
    },
    'default': {
        'n_max': 600,
        'k_max': 24,
        'arith_n_max': 2000,
        'scalar_n_max': 80,
        'prime_count_p_max': 500,
        'prime_count_k_max': 60,
        'legendre_p_max': 1000,
        'power_residue_p_max': 150,
        'primitive_root_p_max': 200,
        'primitive_root_k_max': 40,
        'exp_sum_n_max': 200,
        'exp_sum_k_max': 12,
        'series_terms': 10 ** 5,
        'euler_prime_cutoff': 10 ** 4,
        'multiplicativity_n_max': 200,
        'jacobi_n_max': 300,
    },
    'full': {
        'n_max': 2000,
        'k_max': 24,
        'arith_n_max': 10 ** 4,
        'scalar_n_max': 150,
        'prime_count_p_max': 500,
        'prime_count_k_max': 60,
        'legendre_p_max': 1000,
        'power_residue_p_max': 300,
        'primitive_root_p_max': 200,
        'primitive_root_k_max': 40,
        'exp_sum_n_max': 500,
        'exp_sum_k_max': 12,
        'series_terms': 10 ** 6,
        'euler_prime_cutoff': 10 ** 4,
        'multiplicativity_n_max': 2000,
        'jacobi_n_max': 1000,
    },
}
DEFAULT_SCALE = 'default'
