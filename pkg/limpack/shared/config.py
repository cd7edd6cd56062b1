import os

EXACT_VERTEX_LIMIT = int(os.getenv('LIMPACK_EXACT_VERTEX_LIMIT', '64'))
ORACLE_VERTEX_LIMIT = int(os.getenv('LIMPACK_ORACLE_VERTEX_LIMIT', '20'))
BROOKS_EXHAUSTIVE_LIMIT = int(os.getenv('LIMPACK_BROOKS_EXHAUSTIVE_LIMIT', '24'))
REDUCTION_FALLBACK_LIMIT = int(os.getenv('LIMPACK_REDUCTION_FALLBACK_LIMIT', '20'))

LLL_CLAMP = float(os.getenv('LIMPACK_LLL_CLAMP', '0.5'))
LLL_MAX_ROUNDS = int(os.getenv('LIMPACK_LLL_MAX_ROUNDS', '100000'))
REGULAR_MAX_ATTEMPTS = int(os.getenv('LIMPACK_REGULAR_MAX_ATTEMPTS', '1000'))

BOUND_TOLERANCE = float(os.getenv('LIMPACK_BOUND_TOLERANCE', '1e-9'))
DEFAULT_SEED = int(os.getenv('LIMPACK_DEFAULT_SEED', '0'))
N_JOBS = int(os.getenv('LIMPACK_N_JOBS', '1'))
LOG_LEVEL = os.getenv('LIMPACK_LOG_LEVEL', 'WARNING')
