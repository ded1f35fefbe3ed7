"""Interruptible futures and stable handles behind a C-style export surface."""

from .evencounter import (
    AddError,
    AddErrorCode,
    AppState,
    OddInitialValueError,
    either_add_integer,
    increase_continuously,
    init_app_state,
    is_even_integer,
)
from .futures import (
    INTERRUPTED,
    CancelToken,
    Completed,
    Future,
    FutureResult,
    Interrupted,
    OneShotCell,
    Progress,
    cancellable_sleep,
    checkpoint,
    fork_future,
)
from .handles import (
    NULL_HANDLE,
    HandleRegistry,
    NullHandleError,
    StaleHandleError,
)

__all__ = [
    "AddError",
    "AddErrorCode",
    "AppState",
    "CancelToken",
    "Completed",
    "Future",
    "FutureResult",
    "HandleRegistry",
    "INTERRUPTED",
    "Interrupted",
    "NULL_HANDLE",
    "NullHandleError",
    "OddInitialValueError",
    "OneShotCell",
    "Progress",
    "StaleHandleError",
    "cancellable_sleep",
    "checkpoint",
    "either_add_integer",
    "fork_future",
    "increase_continuously",
    "init_app_state",
    "is_even_integer",
]
