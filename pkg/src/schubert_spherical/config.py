"""Run-wide knobs.  The CLI overwrites ``LIMITS`` from its flags."""

from dataclasses import dataclass


@dataclass
class Limits:
    # largest Bruhat interval (or group) we are willing to enumerate
    interval_cap: int = 10**7
    # Kempf-transfer recursion never needs more than l(w) steps; this is a
    # hard stop in case of a bug
    max_transfer_depth: int = 200
    # groups up to this order get a precomputed table of all lower Bruhat
    # intervals as bitsets
    table_cap: int = 6000


LIMITS = Limits()
