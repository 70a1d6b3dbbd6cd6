"""E-words: palindromic primitive words in the free group on {a, b}."""

import json

from ._core import (
    ParseError,
    continued_fraction,
    count,
    e_word,
    farey_level,
    is_palindrome,
    parents,
    reduce,
)
from ._core import _trace_json, _verify_json

__all__ = [
    "ParseError",
    "continued_fraction",
    "count",
    "e_word",
    "farey_level",
    "is_palindrome",
    "parents",
    "reduce",
    "trace",
    "verify",
]


def trace(sequence, alphabet="ab"):
    """Run an E-sequence such as "[5;4,3]" from (a, b); returns the trace as a dict."""
    return json.loads(_trace_json(sequence, alphabet))


def verify(bound=20):
    """Exhaustive property sweep up to |p| + q <= bound."""
    return json.loads(_verify_json(bound))
