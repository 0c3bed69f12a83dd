"""Residual finiteness of tubular groups, with machine-checkable certificates.

Thin convenience layer over the compiled ``_tubular`` module: the compiled
functions speak JSON strings; the wrappers here decode them to dicts.
"""

import json as _json

try:
    from tubular._tubular import (  # type: ignore[import-not-found]
        TubularError,
        britton_reduce,
        canonical,
        expand,
        is_trivial_word,
        local_quotient,
        recheck,
        regulate,
        run_sequence,
        scale,
        snowflake,
        subtubular,
        validate,
        witness,
    )
    from tubular import _tubular as _impl
except ImportError:  # build-tree layout: extension next to the package
    from _tubular import (  # type: ignore[import-not-found]
        TubularError,
        britton_reduce,
        canonical,
        expand,
        is_trivial_word,
        local_quotient,
        recheck,
        regulate,
        run_sequence,
        scale,
        snowflake,
        subtubular,
        validate,
        witness,
    )
    import _tubular as _impl

__all__ = [
    "TubularError",
    "britton_reduce",
    "canonical",
    "decide",
    "decide_json",
    "expand",
    "is_trivial_word",
    "local_quotient",
    "recheck",
    "regulate",
    "run_sequence",
    "scale",
    "snowflake",
    "subtubular",
    "validate",
    "witness",
]


def decide_json(group: str, budget: int = 64) -> str:
    """Verdict document for a group presentation, as a JSON string."""
    return _impl.decide(group, budget)


def decide(group, budget: int = 64) -> dict:
    """Verdict document for a group presentation, as a dict.

    ``group`` may be a JSON string or a dict in the documented format.
    """
    if isinstance(group, dict):
        group = _json.dumps(group)
    return _json.loads(_impl.decide(group, budget))
