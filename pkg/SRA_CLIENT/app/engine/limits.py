"""Per-command resource budget: wall-clock deadline and degree cap."""

import contextvars
import time
from contextlib import contextmanager

import config
from errors import ResourceLimit

_deadline = contextvars.ContextVar("sra_deadline", default=None)


@contextmanager
def budget(timeout=None):
    """Run the enclosed computation under a wall-clock budget (seconds, 0 = none)."""
    timeout = config.TIMEOUT if timeout is None else timeout
    deadline = time.monotonic() + timeout if timeout and timeout > 0 else None
    token = _deadline.set(deadline)
    try:
        yield
    finally:
        _deadline.reset(token)


def check_time():
    deadline = _deadline.get()
    if deadline is not None and time.monotonic() > deadline:
        raise ResourceLimit(f"timeout after {config.TIMEOUT:g} s")


def check_degree(degree):
    if degree > config.MAX_DEGREE:
        raise ResourceLimit(f"degree {degree} exceeds cap {config.MAX_DEGREE} (--max-degree)")


def check_odd(d):
    if d > config.MAX_ODD:
        raise ResourceLimit(f"{d} odd variables exceed cap {config.MAX_ODD} (--max-odd)")
