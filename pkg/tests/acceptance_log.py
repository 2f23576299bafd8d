"""One result line per acceptance criterion, printed after the test run."""

import time
from contextlib import contextmanager

LINES = []


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        LINES.append(f"criterion {number}: FAIL  {title}  ({type(exc).__name__}: {exc})".splitlines()[0])
        print(LINES[-1])
        raise
    LINES.append(f"criterion {number}: PASS  {title}  [{time.perf_counter() - start:.1f} s]")
    print(LINES[-1])
