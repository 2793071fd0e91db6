"""Time-bounded complexity on the toy machine.

``k_time(x, y, bound, cap)`` is the length of the shortest accepted program
with at most ``cap`` bits that prints ``x`` from conditional ``y`` within
``bound.t(|x|)`` steps. ``e_time`` takes the max over both directions.

``nid_time`` divides ``e_time`` by the larger unconditional value. It is a
time-bounded surrogate only. The normalized information distance it imitates
has no computable approximation from either side, so nothing here converges to
it in any guaranteed direction.

All ratios are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .approx import ApproximationTrace, elementwise_max
from .bitcore import EPSILON, BitString, check_bitstring, render
from .errors import NoWitness
from .machine import StepBound, run, shortest_program

Schedule = Sequence[tuple[StepBound, int]]


@dataclass(frozen=True)
class ComplexityEstimate:
    x: BitString
    y: BitString
    value: int
    witness: BitString
    bound: StepBound
    search_cap: int
    steps: int

    def verify(self) -> bool:
        """Replay the witness under the stated budget."""
        r = run(self.witness, self.y, self.bound.t(len(self.x)))
        return r.accepted and r.output == self.x and len(self.witness) == self.value

    def to_record(self) -> dict:
        return {
            "x": render(self.x),
            "y": render(self.y),
            "bound": list(self.bound.as_tuple()),
            "cap": self.search_cap,
            "value": self.value,
            "witness": self.witness,
            "steps": self.steps,
        }


@lru_cache(maxsize=1 << 16)
def _k_time(x: str, y: str, bound: StepBound, cap: int) -> ComplexityEstimate:
    found = shortest_program(x, y, bound, cap)
    if found is None:
        raise NoWitness(
            f"no program of <= {cap} bits prints {render(x, True)} from "
            f"{render(y, True)} within {bound.t(len(x))} steps"
        )
    code, steps = found
    return ComplexityEstimate(x, y, len(code), code, bound, cap, steps)


def k_time(x: BitString, y: BitString, bound: StepBound, search_cap: int) -> ComplexityEstimate:
    check_bitstring(x)
    check_bitstring(y)
    return _k_time(x, y, bound, search_cap)


def e_time(x: BitString, y: BitString, bound: StepBound, search_cap: int) -> int:
    return max(k_time(x, y, bound, search_cap).value, k_time(y, x, bound, search_cap).value)


def nid_time(x: BitString, y: BitString, bound: StepBound, search_cap: int) -> Fraction:
    denom = max(k_time(x, EPSILON, bound, search_cap).value,
                k_time(y, EPSILON, bound, search_cap).value)
    return Fraction(e_time(x, y, bound, search_cap), denom)


def check_schedule(schedule: Schedule, n: int) -> None:
    """Budgets at length ``n`` and caps must both be nondecreasing."""
    if not schedule:
        raise ValueError("schedule must be nonempty")
    for (b0, c0), (b1, c1) in zip(schedule, schedule[1:]):
        if b1.t(n) < b0.t(n) or c1 < c0:
            raise ValueError("schedule must be nondecreasing in budget and cap")


def k_upper_trace(x: BitString, y: BitString, schedule: Schedule) -> ApproximationTrace:
    """``k_time`` along a growing schedule: a nonincreasing trace from above."""
    check_schedule(schedule, len(x))
    values = [k_time(x, y, bound, cap).value for bound, cap in schedule]
    return ApproximationTrace(values, f"K^t({render(x, True)}|{render(y, True)})")


def e_upper_trace(x: BitString, y: BitString, schedule: Schedule) -> ApproximationTrace:
    """``e_time`` along a schedule; nonincreasing because both directions are."""
    check_schedule(schedule, max(len(x), len(y)))
    return elementwise_max(
        k_upper_trace(x, y, schedule),
        k_upper_trace(y, x, schedule),
        label=f"E^t({render(x, True)},{render(y, True)})",
    )


def clear_cache() -> None:
    _k_time.cache_clear()
