"""Default size bounds for the exhaustive procedures.

Each bound can be overridden through an environment variable, read at call
time so that the CLI and tests can adjust them without code changes.
"""

import os

from .errors import SizeBoundError

DEFAULTS = {
    "HALLGAME_MINIMAX_MAX_VERTICES": 14,
    "HALLGAME_HALL_MAX_SIDE": 20,
    "HALLGAME_BALANCED_MAX_ELEMENTS": 16,
    "HALLGAME_TRANSVERSAL_MAX_VERTICES": 16,
    "HALLGAME_HYPER_MATCHING_MAX_EDGES": 16,
    "HALLGAME_HYPER_MINIMAX_MAX_ELEMENTS": 18,
    "HALLGAME_SEARCH_MAX_VERTICES": 10,
    "HALLGAME_SEARCH_MAX_EDGES": 10,
}


def bound(name: str, override: int | None = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(name)
    if raw is None:
        return DEFAULTS[name]
    try:
        return int(raw)
    except ValueError:
        raise SizeBoundError(f"environment variable {name}={raw!r} is not an integer") from None


def check(what: str, size: int, name: str, override: int | None = None) -> None:
    limit = bound(name, override)
    if size > limit:
        raise SizeBoundError(
            f"{what} is {size}, above the exhaustive-search bound {limit} "
            f"(raise it with {name} or an explicit argument)")
