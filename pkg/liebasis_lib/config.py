import os
from dotenv import load_dotenv

from .errors import LieBasisError

DOTENV_PATH = os.path.join(os.getcwd(), '.env')

DEFAULT_CANDIDATE_BUDGET = 10 ** 6
DEFAULT_THREADS = 1
DEFAULT_CENSUS_MAX_RANK = 4
DEFAULT_CENSUS_MAX_WORDS = 100_000


def _load_dotenv() -> None:
    if os.path.exists(DOTENV_PATH):
        load_dotenv(dotenv_path=DOTENV_PATH)
    else:
        load_dotenv()


def _positive_int_from_env(name: str, default: int) -> int:
    _load_dotenv()
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise LieBasisError(f"{name} must be a positive integer, got {raw!r}.")
    if value <= 0:
        raise LieBasisError(f"{name} must be a positive integer, got {value}.")
    return value


def get_candidate_budget() -> int:
    """
    Retrieves the cap on candidate exponents enumerated for one weight space.
    Defaults to 10**6 if ESSENTIAL_BUDGET is not set in the environment or .env.
    """
    return _positive_int_from_env("ESSENTIAL_BUDGET", DEFAULT_CANDIDATE_BUDGET)


def get_thread_count() -> int:
    """
    Retrieves the default number of worker threads (LIEBASIS_THREADS, default 1).
    """
    return _positive_int_from_env("LIEBASIS_THREADS", DEFAULT_THREADS)


def get_census_max_rank() -> int:
    """Largest rank the census runs on without an explicit long-run request."""
    return _positive_int_from_env("LIEBASIS_CENSUS_MAX_RANK", DEFAULT_CENSUS_MAX_RANK)


def get_census_max_words() -> int:
    return _positive_int_from_env("LIEBASIS_CENSUS_MAX_WORDS", DEFAULT_CENSUS_MAX_WORDS)
