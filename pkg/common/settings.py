"""Runtime settings: defaults with environment overrides, dot-accessible via Box."""

import os

from box import Box

_DEFAULTS = {
    "max_dim": 64,          # largest accepted matrix dimension
    "oracle_limit": 5000,   # largest |det| for which coset enumeration is attempted
    "samples": 100,         # conjugation check sample count
    "seed": 0,
    "workers": 1,           # sweep processes
}

_ENV = {
    "max_dim": "FIXBOUND_MAX_DIM",
    "oracle_limit": "FIXBOUND_ORACLE_LIMIT",
    "workers": "FIXBOUND_WORKERS",
}


def load_settings(**overrides) -> Box:
    """Return the settings Box. Explicit keyword overrides win over environment values.

    Examples:
        settings = load_settings(max_dim=8)
        settings.max_dim        # 8
        settings['oracle_limit']
    """
    settings = Box(_DEFAULTS)
    for key, var in _ENV.items():
        raw = os.environ.get(var)
        if raw is not None:
            settings[key] = int(raw)
    for key, value in overrides.items():
        if value is not None:
            settings[key] = value
    return settings


__all__ = ["load_settings"]
