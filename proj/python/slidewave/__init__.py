"""Bounded edit distance of two similar strings.

Inputs may be ``bytes`` or ``str`` (encoded as UTF-8). Functions that take a
budget ``k`` return ``None`` when the distance is larger than ``k``.
"""

from ._core import (
    align,
    apply_script,
    auto_k,
    banded_distance,
    cap_c,
    distance,
    edit_script,
    gcd0,
    gen_pair,
    run,
    wf_distance,
)

ALGORITHMS = ("dp", "band", "rowwave", "stream-lce", "stream-periodic", "auto")

__all__ = [
    "ALGORITHMS",
    "align",
    "apply_script",
    "auto_k",
    "banded_distance",
    "cap_c",
    "distance",
    "edit_script",
    "gcd0",
    "gen_pair",
    "run",
    "wf_distance",
]
