import os
from pathlib import Path
from typing import List

from dotenv import load_dotenv

from .exact_oracle import BACKTRACK_LIMIT

# Load environment variables
load_dotenv()


def _int_list(value: str) -> List[int]:
    return [int(part) for part in value.split(",") if part.strip()]


class Config:
    """Configuration management for the positional isomorphism toolkit"""

    # Logging
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    LOG_FILE = os.getenv("LOG_FILE", "positional_iso.log")

    # Random corpora
    DEFAULT_SEED = int(os.getenv("DEFAULT_SEED", "0"))
    EDGE_PROBABILITY = float(os.getenv("EDGE_PROBABILITY", "0.5"))
    CONNECTED_RETRIES = int(os.getenv("CONNECTED_RETRIES", "1000"))
    FIXTURES_PATH = Path(os.getenv("FIXTURES_PATH", "./fixtures"))

    # Mining
    MINE_TRIALS = int(os.getenv("MINE_TRIALS", "2000"))
    MINE_MIN_N = int(os.getenv("MINE_MIN_N", "5"))
    MINE_MAX_N = int(os.getenv("MINE_MAX_N", "10"))
    MINE_WORKERS = int(os.getenv("MINE_WORKERS", "1"))
    MINE_OUTPUT_PATH = Path(os.getenv("MINE_OUTPUT_PATH", "./mining"))

    # Oracle
    EXHAUSTIVE_MAX_N = int(os.getenv("EXHAUSTIVE_MAX_N", "8"))
    CROSS_CHECK_RATE = float(os.getenv("CROSS_CHECK_RATE", "0.1"))

    # Benchmark
    BENCH_SIZES = _int_list(os.getenv("BENCH_SIZES", "20,40,80,160"))
    BENCH_REPS = int(os.getenv("BENCH_REPS", "5"))

    def __init__(self):
        """Initialize configuration and validate settings"""
        self.validate()

    def validate(self):
        """Validate configuration settings"""
        problems = []
        if self.LOG_LEVEL.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            problems.append(f"LOG_LEVEL={self.LOG_LEVEL}")
        if not 0 <= self.DEFAULT_SEED < 2 ** 64:
            problems.append(f"DEFAULT_SEED={self.DEFAULT_SEED}")
        for name in ("EDGE_PROBABILITY", "CROSS_CHECK_RATE"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                problems.append(f"{name}={getattr(self, name)}")
        for name in ("CONNECTED_RETRIES", "MINE_WORKERS", "MINE_MIN_N", "EXHAUSTIVE_MAX_N", "BENCH_REPS"):
            if getattr(self, name) < 1:
                problems.append(f"{name}={getattr(self, name)}")
        if self.MINE_TRIALS < 0:
            problems.append(f"MINE_TRIALS={self.MINE_TRIALS}")
        if self.MINE_MIN_N > self.MINE_MAX_N:
            problems.append(f"MINE_MIN_N={self.MINE_MIN_N} > MINE_MAX_N={self.MINE_MAX_N}")
        if self.MINE_MAX_N > BACKTRACK_LIMIT:
            problems.append(f"MINE_MAX_N={self.MINE_MAX_N} > {BACKTRACK_LIMIT}")
        if problems:
            raise ValueError(f"Invalid configuration: {', '.join(problems)}")

    def setup_directories(self, *paths: Path):
        """Create output directories if they don't exist"""
        for path in paths:
            Path(path).mkdir(parents=True, exist_ok=True)


# Global config instance
config = Config()
