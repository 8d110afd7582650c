import os
import dotenv
from pathlib import Path
env_path = Path('.') / '.env'
if env_path.exists():
    dotenv.load_dotenv(dotenv_path=env_path)


def _env_bool(name, default):
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in ("1", "true", "yes", "on")


LOG_LEVEL = os.getenv("GINV_LOG_LEVEL", "INFO")
LOG_FILE = os.getenv("GINV_LOG_FILE", os.path.join("logs", "ginv.log"))
LOG_ROTATION = _env_bool("GINV_LOG_ROTATION", True)
MAX_LOG_SIZE_MB = int(os.getenv("GINV_MAX_LOG_SIZE_MB", "10"))
LOG_BACKUP_COUNT = int(os.getenv("GINV_LOG_BACKUP_COUNT", "5"))
LOG_JSON_FORMAT = _env_bool("GINV_LOG_JSON_FORMAT", False)
PERFORMANCE_TRACKING = _env_bool("GINV_PERFORMANCE_TRACKING", True)

# Largest structure that may be enumerated (M2(Z5) has 625 elements).
ENUMERATION_BUDGET = int(os.getenv("GINV_ENUMERATION_BUDGET", "10000"))
EXHAUSTIVE_TRIPLE_LIMIT = int(os.getenv("GINV_EXHAUSTIVE_TRIPLE_LIMIT", str(10 ** 6)))
SAMPLE_TRIPLES = int(os.getenv("GINV_SAMPLE_TRIPLES", str(10 ** 5)))

DEFAULT_K_RANGE = os.getenv("GINV_K_RANGE", "1..3")
DEFAULT_SEED = int(os.getenv("GINV_SEED", "20200101"))
DEFAULT_COUNT = int(os.getenv("GINV_COUNT", "200"))
# dimension of matrix:<field> contexts given without one
DEFAULT_MATRIX_DIM = int(os.getenv("GINV_MATRIX_DIM", "2"))
RANDOM_ENTRY_BOUND = int(os.getenv("GINV_RANDOM_ENTRY_BOUND", "3"))

WORKERS = int(os.getenv("GINV_WORKERS", "1"))

SLOW_TESTS = _env_bool("GINV_SLOW_TESTS", False)
