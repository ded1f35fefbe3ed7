"""The even-counter model layer.

AppState holds a single integer counter that is even after every
completed model operation.  Additions go through either_add_integer,
which rejects odd operands with fixed error messages; the stored
counter always plays the role of the first parameter, so with an even
initial value the invariant is preserved forever.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .futures import CancelToken, Progress, cancellable_sleep


class AddErrorCode(enum.Enum):
    FIRST_ODD = 1
    SECOND_ODD = 2


_MESSAGES = {
    AddErrorCode.FIRST_ODD: "first parameter is odd",
    AddErrorCode.SECOND_ODD: "second parameter is odd",
}


@dataclass(frozen=True)
class AddError:
    code: AddErrorCode

    @property
    def message(self) -> str:
        return _MESSAGES[self.code]


FIRST_ODD = AddError(AddErrorCode.FIRST_ODD)
SECOND_ODD = AddError(AddErrorCode.SECOND_ODD)


class OddInitialValueError(ValueError):
    """An AppState was requested with an odd initial counter value."""


def is_even_integer(x: int) -> bool:
    """Mathematical parity: negative evens are even."""
    return x % 2 == 0


def either_add_integer(x: int, y: int) -> Union[int, AddError]:
    """Sum of two even integers, or the error for the first odd operand.

    The first parameter is checked before the second.
    """
    if not is_even_integer(x):
        return FIRST_ODD
    if not is_even_integer(y):
        return SECOND_ODD
    return x + y


class AppState:
    """Mutable even-integer counter, shareable across threads.

    increment is an atomic read-modify-write, so synchronous calls may
    race a background increase loop without losing updates.
    """

    def __init__(self, initial: int = 0) -> None:
        if not is_even_integer(initial):
            raise OddInitialValueError(f"initial value {initial} is odd")
        self._lock = threading.Lock()
        self._counter = initial

    def read(self) -> int:
        """Current counter value; never blocks for long."""
        with self._lock:
            return self._counter

    def increment(self, x: int) -> Union[int, AddError]:
        """Add ``x`` to the counter.

        Returns the new value, or an AddError (counter unchanged) when
        the addition would break the evenness invariant.
        """
        with self._lock:
            result = either_add_integer(self._counter, x)
            if isinstance(result, AddError):
                return result
            self._counter = result
            return result


def init_app_state(initial: int = 0) -> AppState:
    """Create an AppState; the initial value must be even."""
    return AppState(initial)


def increase_continuously(
    state: AppState,
    duration: int,
    token: CancelToken,
    observer: Optional[Callable[[int], None]] = None,
) -> int:
    """Add 2 to the counter once per second for ``duration`` seconds.

    Each iteration sleeps first, then increments and reports the new
    value to ``observer``; cancellation during the sleep exits the loop
    before the pending increment.  Returns the counter value at exit,
    whether the run finished or was cancelled.
    """
    if duration < 0:
        raise ValueError("duration must be nonnegative")
    while duration > 0:
        if cancellable_sleep(token, 1_000_000) is Progress.STOP:
            break
        value = state.increment(2)
        assert not isinstance(value, AddError)  # 2 is even, cannot fail
        if observer is not None:
            observer(value)
        duration -= 1
    return state.read()
