"""Stable handle registry.

Objects handed across the export boundary are pinned in a process-wide
lookup table and referenced by opaque 64-bit tokens instead of raw
addresses.  A token encodes a slot index in the high 32 bits and a
generation counter in the low 32 bits; freeing a slot bumps its
generation, so stale tokens (double free, use after free, ABA reuse)
are always detected instead of silently resolving to the wrong object.

Token value 0 is reserved as the null handle so foreign callers can
zero-initialize handle storage safely.
"""

from __future__ import annotations

import threading
from typing import Any

NULL_HANDLE = 0

_GEN_MASK = 0xFFFF_FFFF


class HandleError(Exception):
    """Base class for handle misuse errors."""


class NullHandleError(HandleError):
    """The null handle (0) was passed where a live handle is required."""


class StaleHandleError(HandleError):
    """The handle was already freed, or never issued by this registry."""


class _Slot:
    __slots__ = ("generation", "occupant", "occupied")

    def __init__(self) -> None:
        self.generation = 1
        self.occupant: Any = None
        self.occupied = False


class HandleRegistry:
    """Growable table of generation-tagged slots.

    All methods are safe to call concurrently from any thread,
    including threads not created by this library.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._slots: list[_Slot] = []
        self._free: list[int] = []
        self._live = 0

    def register(self, obj: Any) -> int:
        """Pin ``obj`` and return a fresh non-zero handle for it."""
        with self._lock:
            if self._free:
                index = self._free.pop()
                slot = self._slots[index]
            else:
                index = len(self._slots)
                slot = _Slot()
                self._slots.append(slot)
            slot.occupant = obj
            slot.occupied = True
            self._live += 1
            return self._encode(index, slot.generation)

    def resolve(self, handle: int) -> Any:
        """Return the object a live handle refers to.

        Raises NullHandleError for handle 0 and StaleHandleError for
        freed or never-issued handles; never returns a wrong object.
        """
        with self._lock:
            slot = self._checked_slot(handle)
            return slot.occupant

    def free(self, handle: int) -> None:
        """Release the handle's slot and unpin its object.

        A second free of the same handle raises StaleHandleError and
        leaves every other live handle untouched.
        """
        with self._lock:
            slot = self._checked_slot(handle)
            slot.occupant = None
            slot.occupied = False
            slot.generation = (slot.generation + 1) & _GEN_MASK
            if slot.generation == 0:
                # generation 0 in slot 0 would collide with the null handle
                slot.generation = 1
            self._free.append(self._index_of(handle))
            self._live -= 1

    def live_count(self) -> int:
        """Number of currently occupied slots."""
        with self._lock:
            return self._live

    @staticmethod
    def _encode(index: int, generation: int) -> int:
        return (index << 32) | generation

    @staticmethod
    def _index_of(handle: int) -> int:
        return handle >> 32

    def _checked_slot(self, handle: int) -> _Slot:
        # caller holds self._lock
        if handle == NULL_HANDLE:
            raise NullHandleError("null handle")
        index = handle >> 32
        generation = handle & _GEN_MASK
        if index < 0 or index >= len(self._slots):
            raise StaleHandleError(f"handle {handle:#x} was never issued")
        slot = self._slots[index]
        if not slot.occupied or slot.generation != generation:
            raise StaleHandleError(f"handle {handle:#x} is stale")
        return slot
