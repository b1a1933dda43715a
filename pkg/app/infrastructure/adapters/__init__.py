"""
Engine adapters.
"""

from ...domain.services import WedEngineInterface
from ...domain.services.eds import DEFAULT_BRUTE_MAX_VERTICES
from .brute_adapter import BruteForceEngineAdapter
from .s123_adapter import S123EngineAdapter
from .square_adapter import SquareEngineAdapter


def build_engines(brute_max_vertices: int = DEFAULT_BRUTE_MAX_VERTICES) -> dict[str, WedEngineInterface]:
    """Fresh engine set keyed by engine name; picklable entry point for campaign workers."""
    return {
        "brute": BruteForceEngineAdapter(brute_max_vertices),
        "square": SquareEngineAdapter(),
        "s123": S123EngineAdapter(),
    }


__all__ = ["BruteForceEngineAdapter", "S123EngineAdapter", "SquareEngineAdapter", "build_engines"]
