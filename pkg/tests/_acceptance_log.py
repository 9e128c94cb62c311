"""Shared record of acceptance outcomes, printed at the end of the run."""

RESULTS = {}


def report(key, ok, detail):
    RESULTS[key] = (bool(ok), detail)
    print(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
    return ok
