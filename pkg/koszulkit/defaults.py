"""
Commonly used limits and settings, read once at import time, similar to a config file.
"""
import os

# Upper bound on any hom-set, free-cover fiber, tensor space or module fiber.
MAX_DIM = int(os.environ.get("KOSZULKIT_MAX_DIM", 5000))

# VI_q is only built for these fields and up to this object unless explicitly allowed.
VI_PRIMES = (2, 3)
VI_MAX_OBJECT = 3

# Primes with table arithmetic in gf_rank.
GF_TABLE_PRIMES = (2, 3, 5, 7)

# validate() checks every basis triple below this count, a seeded sample above it.
ASSOCIATIVITY_LIMIT = int(os.environ.get("KOSZULKIT_ASSOCIATIVITY_LIMIT", 200000))
SAMPLE_SEED = int(os.environ.get("KOSZULKIT_SEED", 0))

DEFAULT_DEPTH = 4

FORMAT = "%(asctime)s:%(name)s:%(levelname)s: %(message)s"
MAX_LOG_SIZE = 5 * 1024 * 1024
