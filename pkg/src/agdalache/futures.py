"""Interruptible futures built from one-shot cells and a watcher thread.

A future bundles two one-shot cells: an interrupt cell (unit) and a
result cell.  The computation runs on its own thread and publishes
``Completed(value)`` on normal exit; a dedicated watcher thread blocks
on the interrupt cell and, when released by an interrupt, publishes
``Interrupted`` immediately so waiters unblock at once.  The task
itself winds down cooperatively at its next cancellation checkpoint;
a late result it produces after that loses the first-writer-wins race
on the result cell and is discarded.

Cancellation is cooperative: tasks receive a CancelToken and are
expected to call checkpoint() or cancellable_sleep() at points where
stopping is safe.  Side effects performed before the last Continue
checkpoint remain visible after interruption.
"""

from __future__ import annotations

import enum
import logging
import threading
from dataclasses import dataclass
from typing import Any, Callable, Optional, Union

log = logging.getLogger(__name__)

_EMPTY = object()


class OneShotCell:
    """A write-once cell; readers block until it is filled.

    try_put on a filled cell fails and changes nothing, so racing
    writers resolve to exactly one winner.  Reads do not consume the
    value: every reader sees the same content forever after.
    """

    def __init__(self) -> None:
        self._cond = threading.Condition()
        self._value: Any = _EMPTY

    def try_put(self, value: Any = None) -> bool:
        """Fill the cell if empty.  Returns True iff this call filled it."""
        with self._cond:
            if self._value is not _EMPTY:
                return False
            self._value = value
            self._cond.notify_all()
            return True

    def read(self, timeout: Optional[float] = None) -> Any:
        """Block until filled, then return the value (without consuming)."""
        with self._cond:
            if not self._cond.wait_for(lambda: self._value is not _EMPTY, timeout):
                raise TimeoutError("one-shot cell still empty after timeout")
            return self._value

    def try_read(self) -> tuple[bool, Any]:
        """(True, value) if filled, (False, None) otherwise; never blocks."""
        with self._cond:
            if self._value is _EMPTY:
                return False, None
            return True, self._value

    @property
    def filled(self) -> bool:
        with self._cond:
            return self._value is not _EMPTY


class Progress(enum.Enum):
    CONTINUE = "continue"
    STOP = "stop"


class CancelToken:
    """Monotone stop flag observed at checkpoints inside computations."""

    def __init__(self) -> None:
        self._event = threading.Event()

    def cancel(self) -> None:
        self._event.set()

    @property
    def stop_requested(self) -> bool:
        return self._event.is_set()

    def wait(self, timeout: Optional[float] = None) -> bool:
        """Block until cancelled or timeout; True iff cancelled."""
        return self._event.wait(timeout)


def checkpoint(token: CancelToken) -> Progress:
    """Cancellation point: STOP once the token's stop flag is set."""
    return Progress.STOP if token.stop_requested else Progress.CONTINUE


def cancellable_sleep(token: CancelToken, micros: int) -> Progress:
    """Sleep ``micros`` microseconds, waking early on cancellation.

    Returns CONTINUE after a full sleep, or STOP promptly (well inside
    a 50 ms budget) if the stop flag is or becomes set.
    """
    if micros < 0:
        raise ValueError("sleep duration must be nonnegative")
    if micros == 0:
        return checkpoint(token)
    if token.wait(micros / 1_000_000):
        return Progress.STOP
    return Progress.CONTINUE


@dataclass(frozen=True)
class Completed:
    value: Any


@dataclass(frozen=True)
class Interrupted:
    pass


INTERRUPTED = Interrupted()

FutureResult = Union[Completed, Interrupted]


class Future:
    """Handle to a running computation, interruptible from any thread."""

    def __init__(self) -> None:
        self.interrupt_cell = OneShotCell()
        self.result_cell = OneShotCell()
        self.token = CancelToken()
        self.queried = False
        self.interrupted_flag = False

    def get(self) -> FutureResult:
        """Block until resolved; repeatable (a read, not a take)."""
        result = self.result_cell.read()
        self.queried = True
        return result

    def try_get(self) -> Optional[FutureResult]:
        """Non-blocking poll: the result if resolved, else None."""
        filled, value = self.result_cell.try_read()
        return value if filled else None

    def interrupt(self) -> bool:
        """Request interruption; never blocks.

        Returns True iff this call filled the interrupt cell (the first
        interrupt on a still-unresolved future); False if the cell was
        already filled by an earlier interrupt or by task completion.
        """
        first = self.interrupt_cell.try_put()
        if first:
            self.interrupted_flag = True
        return first


def fork_future(task: Callable[[CancelToken], Any]) -> Future:
    """Start ``task`` on its own thread and return a Future for it.

    The computation thread runs task(token) and on completion try-puts
    Completed(result), then releases the watcher via the interrupt
    cell.  The watcher thread blocks on the interrupt cell; once woken
    it exits silently if the result is already published, otherwise it
    sets the token's stop flag and publishes Interrupted.
    """
    future = Future()

    def run() -> None:
        try:
            value = task(future.token)
        except Exception:
            # a crashing task surfaces as Interrupted via the watcher
            log.exception("future task raised")
        else:
            future.result_cell.try_put(Completed(value))
        finally:
            future.interrupt_cell.try_put()

    def watch() -> None:
        future.interrupt_cell.read()
        filled, _ = future.result_cell.try_read()
        if filled:
            return
        future.token.cancel()
        future.result_cell.try_put(INTERRUPTED)

    threading.Thread(target=run, name="alache-task", daemon=True).start()
    threading.Thread(target=watch, name="alache-watcher", daemon=True).start()
    return future
