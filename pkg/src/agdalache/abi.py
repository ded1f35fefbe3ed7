"""The exported call surface (see include/agdalache.h for the C contract).

Every function here mirrors one exported symbol: flat names, status
codes instead of exceptions, and opaque integer handles instead of
object references.  Misuse (null, stale or wrong-kind handles, calls
before al_init) surfaces as a status code; nothing aborts the process.

Futures cross this boundary as a pair of handles: slot 0 interrupts,
slot 1 resolves.  al_future_try_put_interrupt is the fast path: it
fills the interrupt cell directly, never blocks, and always consumes
its handle.  ec_interrupt_full is the slow baseline that routes the
same interruption through full handle resolution plus a blocking
rendezvous with the result publication; the bench CLI compares the
two.

Status codes (stable, documented in the header):
    0   OK / Completed
    1   Interrupted (getters) / first parameter is odd (increment)
    2   second parameter is odd
    100 null handle
    101 stale handle (also: handle of the wrong kind)
    102 runtime not initialized
"""

from __future__ import annotations

import threading
from typing import Any, Callable, MutableSequence, Optional

from . import evencounter, futures
from .evencounter import AddError, AddErrorCode, AppState
from .futures import Completed, Future
from .handles import HandleRegistry, NullHandleError, StaleHandleError

AL_OK = 0
AL_INTERRUPTED = 1
AL_FIRST_ODD = 1
AL_SECOND_ODD = 2
AL_NULL_HANDLE = 100
AL_STALE_HANDLE = 101
AL_NOT_INITIALIZED = 102

_ERROR_MESSAGES = {
    AL_OK: "ok",
    AL_FIRST_ODD: "first parameter is odd",
    AL_SECOND_ODD: "second parameter is odd",
    AL_NULL_HANDLE: "null handle",
    AL_STALE_HANDLE: "stale handle",
    AL_NOT_INITIALIZED: "runtime not initialized",
}
_UNKNOWN_ERROR = "unknown error"

_lifecycle_lock = threading.Lock()
_registry: Optional[HandleRegistry] = None


def _default_tick_observer(value: int) -> None:
    print(value, flush=True)


_tick_observer: Optional[Callable[[int], None]] = _default_tick_observer


class _InterruptHandle:
    """Registry occupant for slot 0: the interrupt side of one future."""

    __slots__ = ("future",)

    def __init__(self, future: Future) -> None:
        self.future = future


def al_init() -> None:
    """Bring up the runtime (handle registry).  Idempotent."""
    global _registry
    with _lifecycle_lock:
        if _registry is None:
            _registry = HandleRegistry()


def al_exit() -> None:
    """Tear the runtime down.  Callers free all handles first.  Idempotent."""
    global _registry
    with _lifecycle_lock:
        _registry = None


def al_set_tick_observer(observer: Optional[Callable[[int], None]]) -> None:
    """Route the background loop's per-tick values.

    Embedding hook, not part of the C surface.  None silences ticks;
    the default prints each value to standard output.
    """
    global _tick_observer
    _tick_observer = observer


def al_live_count() -> int:
    """Live handle count, for leak accounting.  0 when uninitialized."""
    registry = _registry
    return registry.live_count() if registry is not None else 0


def ec_init_app() -> int:
    """Create an app state with counter 0 and return its handle (0 if down)."""
    registry = _registry
    if registry is None:
        return 0
    return registry.register(evencounter.init_app_state(0))


def _resolve(handle: int, kind: type) -> tuple[int, Any]:
    registry = _registry
    if registry is None:
        return AL_NOT_INITIALIZED, None
    try:
        obj = registry.resolve(handle)
    except NullHandleError:
        return AL_NULL_HANDLE, None
    except StaleHandleError:
        return AL_STALE_HANDLE, None
    if not isinstance(obj, kind):
        # wrong-kind handles are caller misuse, reported like stale ones
        return AL_STALE_HANDLE, None
    return AL_OK, obj


def ec_increment(app: int, delta: int) -> tuple[int, Optional[int]]:
    """Add ``delta`` to the counter.  Returns (status, new value or None)."""
    status, state = _resolve(app, AppState)
    if status != AL_OK:
        return status, None
    result = state.increment(delta)
    if isinstance(result, AddError):
        code = AL_FIRST_ODD if result.code is AddErrorCode.FIRST_ODD else AL_SECOND_ODD
        return code, None
    return AL_OK, result


def ec_read(app: int) -> tuple[int, Optional[int]]:
    """Read the counter.  Returns (status, value or None)."""
    status, state = _resolve(app, AppState)
    if status != AL_OK:
        return status, None
    return AL_OK, state.read()


def ec_increase_async(app: int, duration_s: int, future_out: MutableSequence[int]) -> int:
    """Fork the one-per-second increase loop as a future.

    On success writes the interrupt handle to future_out[0] and the
    result handle to future_out[1] and returns immediately.  On error
    the slots are left untouched.  Negative durations behave like 0.
    """
    status, state = _resolve(app, AppState)
    if status != AL_OK:
        return status
    registry = _registry
    assert registry is not None
    duration = max(duration_s, 0)

    def task(token: futures.CancelToken) -> int:
        return evencounter.increase_continuously(state, duration, token, _tick_observer)

    future = futures.fork_future(task)
    future_out[0] = registry.register(_InterruptHandle(future))
    future_out[1] = registry.register(future)
    return AL_OK


def _get_result(fut: MutableSequence[int]) -> tuple[int, Any]:
    status, future = _resolve(fut[1], Future)
    if status != AL_OK:
        return status, None
    result = future.get()
    if isinstance(result, Completed):
        return AL_OK, result.value
    return AL_INTERRUPTED, None


def al_future_get_int(fut: MutableSequence[int]) -> tuple[int, Optional[int]]:
    """Block until the future resolves; (0, value) or (1, None) on interrupt.

    Does not free the handles; repeatable (the result cell is read, not
    taken).
    """
    return _get_result(fut)


def al_future_get_unit(fut: MutableSequence[int]) -> int:
    """Blocking getter for unit-valued futures; the payload is discarded."""
    status, _ = _get_result(fut)
    return status


def al_future_get_ptr(fut: MutableSequence[int]) -> tuple[int, Any]:
    """Blocking getter for opaque-payload futures."""
    return _get_result(fut)


def al_future_try_put_interrupt(handle: int) -> int:
    """Fast-path interrupt: fill the interrupt cell, never block.

    Always consumes ``handle`` (even when the cell was already filled),
    mirroring the one-shot put-and-free native call it stands in for.
    Returns 1 if this call filled the cell, 0 if it was already filled,
    or a negated status code (-100/-101/-102) for bad handles.
    """
    status, holder = _resolve(handle, _InterruptHandle)
    if status != AL_OK:
        return -status
    registry = _registry
    assert registry is not None
    try:
        registry.free(handle)
    except (NullHandleError, StaleHandleError):
        return -AL_STALE_HANDLE  # lost a racing free
    return 1 if holder.future.interrupt() else 0


def ec_interrupt_full(fut: MutableSequence[int]) -> int:
    """Full-call interruption baseline for the bench CLI.

    Observationally equivalent to al_future_try_put_interrupt(fut[0])
    plus manual bookkeeping, but deliberately heavyweight: resolves
    both handles, frees slot 0, then blocks until the watcher has
    published the result.
    """
    status, holder = _resolve(fut[0], _InterruptHandle)
    if status != AL_OK:
        return status
    status, future = _resolve(fut[1], Future)
    if status != AL_OK:
        return status
    registry = _registry
    assert registry is not None
    try:
        registry.free(fut[0])
    except (NullHandleError, StaleHandleError):
        return AL_STALE_HANDLE
    holder.future.interrupt()
    future.result_cell.read()  # rendezvous with the publication
    return AL_OK


def al_handle_free(h: int) -> int:
    """Free any handle.  Double frees report stale, never corrupt others."""
    registry = _registry
    if registry is None:
        return AL_NOT_INITIALIZED
    try:
        registry.free(h)
    except NullHandleError:
        return AL_NULL_HANDLE
    except StaleHandleError:
        return AL_STALE_HANDLE
    return AL_OK


def al_error_message(code: int) -> str:
    """Static message for a status code; unknown codes map to one string."""
    return _ERROR_MESSAGES.get(code, _UNKNOWN_ERROR)
