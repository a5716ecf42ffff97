"""Order caps for the exhaustive routines.

``SKB_ORDER_CAP`` in the environment raises every cap to at least its
value (it never lowers one).
"""
import os

GROUP_CAP = 64
BRACE_CAP = 16
IDEAL_CAP = 24
POWERSET_CAP = 16
ENUMERATE_CAP = 6
ENUMERATE_MAX = 8


def _override():
    raw = os.environ.get("SKB_ORDER_CAP", "").strip()
    if not raw:
        return 0
    try:
        return int(raw)
    except ValueError:
        return 0


def cap(default: int) -> int:
    return max(default, _override())


def enumerate_cap() -> int:
    # hard ceiling: the canonical-form search is factorial in n
    return min(cap(ENUMERATE_CAP), ENUMERATE_MAX)
