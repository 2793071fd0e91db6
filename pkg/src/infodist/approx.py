"""Finite approximation traces and fluctuation counting.

A trace is a finite prefix of a rational-valued approximation sequence. The
fluctuation count is the number of strict downward steps. A function is
n-approximable when some approximation has at most ``n - 1`` of them, so
1-approximable means nondecreasing (approximable from below).

Only prefixes exist at runtime. The count of a prefix is a lower bound on the
count of the full approximation it was cut from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import MalformedTrace

Number = Union[int, Fraction]


def _as_fraction(v: object) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
        raise MalformedTrace(f"trace values must be exact rationals, got {v!r}")
    return Fraction(v)


@dataclass(frozen=True)
class ApproximationTrace:
    values: tuple[Fraction, ...]
    label: str = field(default="", compare=False)

    def __init__(self, values: Iterable[Number], label: str = ""):
        vals = tuple(_as_fraction(v) for v in values)
        if not vals:
            raise MalformedTrace("an approximation trace must be nonempty")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "label", label)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __iter__(self):
        return iter(self.values)

    def is_nonincreasing(self) -> bool:
        return all(b <= a for a, b in zip(self.values, self.values[1:]))

    def is_nondecreasing(self) -> bool:
        return all(b >= a for a, b in zip(self.values, self.values[1:]))

    def to_text(self) -> str:
        lines = [f"# {self.label}"]
        lines += [f"{v.numerator}/{v.denominator}" for v in self.values]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> ApproximationTrace:
        label = ""
        values = []
        for line in text.splitlines():
            if line.startswith("#"):
                if not values and not label:
                    label = line[1:].strip()
                continue
            if line.strip():
                values.append(Fraction(line.strip()))
        return cls(values, label)


def fluctuation_count(trace: Union[ApproximationTrace, Sequence[Number]]) -> int:
    """Number of indices k with ``values[k+1] < values[k]``; ties never count."""
    vals = list(trace)
    return sum(1 for a, b in zip(vals, vals[1:]) if b < a)


def is_n_approx(trace: Union[ApproximationTrace, Sequence[Number]], n: int) -> bool:
    if n < 1:
        raise ValueError("n must be at least 1")
    return fluctuation_count(trace) <= n - 1


class Classification(NamedTuple):
    kind: str  # "upper", "lower" or "mixed"
    fluctuations: int

    def __str__(self) -> str:
        if self.kind == "mixed":
            return f"mixed({self.fluctuations})"
        return f"{self.kind}-style"


def classify(trace: Union[ApproximationTrace, Sequence[Number]]) -> Classification:
    """Upper-style (nonincreasing), lower-style (nondecreasing) or mixed.

    A constant trace is both and is reported as upper-style.
    """
    vals = list(trace)
    pairs = list(zip(vals, vals[1:]))
    k = sum(1 for a, b in pairs if b < a)
    if all(b <= a for a, b in pairs):
        return Classification("upper", k)
    if k == 0:
        return Classification("lower", 0)
    return Classification("mixed", k)


def elementwise_max(*traces: ApproximationTrace, label: str = "") -> ApproximationTrace:
    n = min(len(t) for t in traces)
    return ApproximationTrace((max(t[k] for t in traces) for k in range(n)), label)


def running_max(trace: ApproximationTrace, label: str = "") -> ApproximationTrace:
    out = []
    cur = None
    for v in trace:
        cur = v if cur is None or v > cur else cur
        out.append(cur)
    return ApproximationTrace(out, label or trace.label)
