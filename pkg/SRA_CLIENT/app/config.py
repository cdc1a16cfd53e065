import os

DEFAULT_FIELD = os.environ.get("SRA_FIELD", "q")
# Alternative fields:
# DEFAULT_FIELD = "fp:32003"   # large prime, fast coefficient arithmetic
# DEFAULT_FIELD = "fp:3"       # smallest admissible prime (2 must be invertible)

MAX_DEGREE = int(os.environ.get("SRA_MAX_DEGREE", "40"))
MAX_ODD = int(os.environ.get("SRA_MAX_ODD", "8"))
TIMEOUT = float(os.environ.get("SRA_TIMEOUT", "60"))   # seconds, 0 disables
GB_CACHE_SIZE = int(os.environ.get("SRA_GB_CACHE_SIZE", "256"))   # closed bases kept per ring

CERT_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
               53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

JSON_OUTPUT = False   # set at runtime (--json)
LOG_LEVEL = os.environ.get("SRA_LOG_LEVEL", "WARNING")
