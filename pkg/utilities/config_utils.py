#!/usr/bin/env python3
"""
Configuration loading: .env file at the project root, environment variables,
then built-in defaults.
"""

import os
from dataclasses import dataclass, replace
from pathlib import Path

DEFAULT_CEILING = 10**6
DEFAULT_SAMPLES = 200
DEFAULT_SEED = 0
DEFAULT_ORACLE_LIMIT = 2**16

# Keys read from .env / the environment
ENV_KEYS = ("SECOH_CEILING", "SECOH_SAMPLES", "SECOH_SEED", "SECOH_ORACLE_LIMIT")


@dataclass(frozen=True)
class Settings:
    ceiling: int = DEFAULT_CEILING
    samples: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    oracle_limit: int = DEFAULT_ORACLE_LIMIT

    def override(self, **changes):
        """Return a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def load_env_file(env_file=None):
    """
    Load environment variables from a .env file.
    Looks for .env in the project root directory unless a path is given.

    Args:
        env_file (str or Path): Explicit .env path (optional)

    Returns:
        dict: Dictionary containing the SECOH_* variables that are set
    """
    if env_file is None:
        # Project root is the parent of the utilities directory
        env_file = Path(__file__).parent.parent / '.env'
    env_file = Path(env_file)

    env_vars = {}

    if env_file.exists():
        with open(env_file, 'r', encoding='utf-8') as f:
            for line in f:
                line = line.strip()
                # Skip empty lines and comments
                if not line or line.startswith('#'):
                    continue
                if '=' in line:
                    key, value = line.split('=', 1)
                    key = key.strip()
                    value = value.strip()
                    if value[:1] in ('"', "'") and value[-1:] == value[:1]:
                        value = value[1:-1]
                    env_vars[key] = value
    else:
        # Fallback to system environment variables if .env doesn't exist
        env_vars = {key: os.environ[key] for key in ENV_KEYS if key in os.environ}

    return env_vars


def _int_setting(env, key, default):
    raw = env.get(key)
    if raw in (None, ""):
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{key} must be an integer, got {raw!r}")
    if value < 0:
        raise ValueError(f"{key} must be non-negative, got {value}")
    return value


def load_settings(env_file=None):
    """
    Build the Settings used by the command line.

    Returns:
        Settings: defaults overridden by .env (or environment) values
    """
    env = load_env_file(env_file)
    return Settings(
        ceiling=_int_setting(env, "SECOH_CEILING", DEFAULT_CEILING),
        samples=_int_setting(env, "SECOH_SAMPLES", DEFAULT_SAMPLES),
        seed=_int_setting(env, "SECOH_SEED", DEFAULT_SEED),
        oracle_limit=_int_setting(env, "SECOH_ORACLE_LIMIT", DEFAULT_ORACLE_LIMIT),
    )
