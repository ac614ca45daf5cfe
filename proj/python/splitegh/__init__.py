import json

from ._splitegh import (
    Error,
    InvariantError,
    NotRealizableError,
    ParseError,
    egh_json,
    hilbert,
    kk_check,
    lpp,
    macaulay_upper,
    reduce,
    run,
)


def egh(problem, recurse=True):
    """Run the construction and return the decoded JSON document."""
    return json.loads(egh_json(problem, recurse))


__all__ = [
    "Error",
    "InvariantError",
    "NotRealizableError",
    "ParseError",
    "egh",
    "egh_json",
    "hilbert",
    "kk_check",
    "lpp",
    "macaulay_upper",
    "reduce",
    "run",
]
