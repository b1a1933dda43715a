"""
Value objects shared by the domination engines.
"""

from typing import Any


class ValueObject:
    """Immutable object compared by its private state.

    Subclasses keep their state in ``_``-prefixed attributes holding only
    hashable values (ints, tuples, frozensets); the hash is computed once.
    """

    def _state(self) -> tuple[tuple[str, Any], ...]:
        return tuple((k, v) for k, v in vars(self).items() if k != "_cached_hash")

    def __eq__(self, other: Any) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._state() == other._state()

    def __hash__(self) -> int:
        cached = vars(self).get("_cached_hash")
        if cached is None:
            cached = hash((type(self).__name__, self._state()))
            self._cached_hash = cached
        return cached

    def __repr__(self) -> str:
        attrs = ", ".join(f"{k.lstrip('_')}={v!r}" for k, v in self._state())
        return f"{self.__class__.__name__}({attrs})"
