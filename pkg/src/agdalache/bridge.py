"""JSON-lines stdio bridge exposing the exported surface to a frontend.

Run as ``python -m agdalache.bridge``.  Each stdin line is one request:

    {"id": 1, "op": "ec_increment", "args": [handle, 4]}

and produces exactly one response line carrying the op's return value:

    {"id": 1, "result": {"status": 0, "value": 4}}

Requests are dispatched on worker threads, so blocking ops (the future
getters) do not stall the loop; responses may arrive out of order and
are matched by id.  Background-loop ticks are pushed as unsolicited
event lines: {"event": "tick", "value": 6}.

The process speaks this protocol only; it is the out-of-process analog
of loading the shared library.
"""

from __future__ import annotations

import json
import sys
import threading
from typing import Any

from . import abi

_stdout_lock = threading.Lock()


def _send(payload: dict[str, Any]) -> None:
    line = json.dumps(payload)
    with _stdout_lock:
        sys.stdout.write(line + "\n")
        sys.stdout.flush()


def _tick(value: int) -> None:
    _send({"event": "tick", "value": value})


def _dispatch(op: str, args: list[Any]) -> Any:
    if op == "al_init":
        abi.al_init()
        return None
    if op == "al_exit":
        abi.al_exit()
        return None
    if op == "al_live_count":
        return abi.al_live_count()
    if op == "ec_init_app":
        return abi.ec_init_app()
    if op == "ec_increment":
        status, value = abi.ec_increment(args[0], args[1])
        return {"status": status, "value": value}
    if op == "ec_read":
        status, value = abi.ec_read(args[0])
        return {"status": status, "value": value}
    if op == "ec_increase_async":
        fut = [0, 0]
        status = abi.ec_increase_async(args[0], args[1], fut)
        return {"status": status, "future": fut if status == abi.AL_OK else None}
    if op == "al_future_get_int":
        status, value = abi.al_future_get_int(args[0])
        return {"status": status, "value": value}
    if op == "al_future_get_unit":
        return {"status": abi.al_future_get_unit(args[0])}
    if op == "al_future_try_put_interrupt":
        return abi.al_future_try_put_interrupt(args[0])
    if op == "ec_interrupt_full":
        return {"status": abi.ec_interrupt_full(args[0])}
    if op == "al_handle_free":
        return {"status": abi.al_handle_free(args[0])}
    if op == "al_error_message":
        return abi.al_error_message(args[0])
    raise ValueError(f"unknown op: {op}")


def _handle_request(request: dict[str, Any]) -> None:
    request_id = request.get("id")
    try:
        result = _dispatch(request["op"], request.get("args", []))
    except Exception as exc:
        _send({"id": request_id, "error": str(exc)})
    else:
        _send({"id": request_id, "result": result})


def main() -> int:
    abi.al_set_tick_observer(_tick)
    abi.al_init()
    try:
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            try:
                request = json.loads(line)
            except json.JSONDecodeError as exc:
                _send({"id": None, "error": f"bad request: {exc}"})
                continue
            threading.Thread(
                target=_handle_request, args=(request,), daemon=True
            ).start()
    finally:
        abi.al_exit()
    return 0


if __name__ == "__main__":
    sys.exit(main())
