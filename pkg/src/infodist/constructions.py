"""Desk-scale versions of the diagonal and XOR constructions and the threshold search.

diagonal_u
    Run every program shorter than ``n`` bits, with ``n`` as conditional, for
    ``t'(n)`` steps and take the least length-``n`` string none of them prints.
    By counting it always exists, and by construction ``K^{t'}(u|n) >= n``.
random_v
    The least length-``n`` string whose time-bounded complexity given ``n`` is
    at least ``n``.
xor_pair
    ``w = v xor u``. A single XORLIT program carrying ``u`` maps ``v`` to ``w``
    and ``w`` to ``v``, giving a measured upper bound on the distance between
    them; ``e_time(v, w)`` is the time-bounded value it is compared with.
threshold_search / s_of_n
    Least index where a nondecreasing trace ``e_i`` reaches
    ``E_i / (n + 2 ceil(log2 n) + c)``, and its max over all pairs of length ``n``.
    No computable lower approximation of the true normalized distance exists,
    so these run on caller-supplied traces. The machinery is real; the input is
    hypothetical. :func:`surrogate_traces` provides time-bounded stand-ins.

The conditional "n" is always ``string_of(n)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Optional

from .approx import ApproximationTrace, elementwise_max, running_max
from .bitcore import BitString, ceil_log2, render, string_of, strings_of_length, xor
from .complexity import Schedule, check_schedule, e_time, k_time, k_upper_trace, nid_time
from .errors import Infeasible, MalformedTrace, NoWitness
from .machine import StepBound, enumerate_programs, literal_bound, run, xor_program

ENUMERATION_LIMIT = 14

TraceSupplier = Callable[[BitString, BitString], tuple[ApproximationTrace, ApproximationTrace]]


def _check_feasible(n: int, limit: int) -> None:
    if n > limit:
        raise Infeasible(f"n={n} exceeds the enumeration limit {limit}")


def default_prime(bound: StepBound) -> StepBound:
    """``t'`` defaults to ``2t``."""
    return bound.scaled(2)


def diagonal_outputs(n: int, bound_prime: StepBound) -> set[BitString]:
    """Length-``n`` outputs of programs shorter than ``n`` bits within ``t'(n)`` steps."""
    return {out for _, out in enumerate_programs(n - 1, string_of(n), bound_prime)
            if len(out) == n}


def diagonal_u(n: int, bound_prime: StepBound, limit: int = ENUMERATION_LIMIT) -> BitString:
    if n < 1:
        raise ValueError("n must be at least 1")
    _check_feasible(n, limit)
    produced = diagonal_outputs(n, bound_prime)
    for u in strings_of_length(n):
        if u not in produced:
            return u
    raise AssertionError("counting guarantees an unproduced string")


def diagonal_violations(n: int, u: BitString, bound_prime: StepBound) -> int:
    """Re-run every code shorter than ``n`` bits directly and count those printing ``u``."""
    cond = string_of(n)
    budget = bound_prime.t(n)
    hits = 0
    for length in range(n):
        for bits in product("01", repeat=length):
            r = run("".join(bits), cond, budget)
            hits += r.accepted and r.output == u
    return hits


def _complexity_at_least(x: BitString, y: BitString, bound: StepBound, cap: int,
                         n: int) -> bool:
    try:
        return k_time(x, y, bound, cap).value >= n
    except NoWitness:
        # nothing within cap bits; cap >= n is checked by the caller
        return True


def random_v(n: int, bound: StepBound, search_cap: Optional[int] = None,
             limit: int = ENUMERATION_LIMIT) -> BitString:
    _check_feasible(n, limit)
    cap = literal_bound(n) if search_cap is None else search_cap
    if cap < n:
        raise ValueError("search_cap must be at least n")
    cond = string_of(n)
    for v in strings_of_length(n):
        if _complexity_at_least(v, cond, bound, cap, n):
            return v
    raise AssertionError("counting guarantees an incompressible string")


@dataclass(frozen=True)
class GapReport:
    n: int
    v: BitString
    u: BitString
    w: BitString
    e_upper_witness: BitString
    e_upper_witness_len: int
    e_t_value: int
    bound: StepBound
    bound_prime: StepBound
    search_cap: int

    def verify(self) -> bool:
        """Check the XOR relation and replay the witness in both directions."""
        if not (len(self.v) == len(self.u) == len(self.w) == self.n):
            return False
        if xor(self.v, self.u) != self.w or xor(self.w, self.u) != self.v:
            return False
        budget = self.bound.t(self.n)
        fwd = run(self.e_upper_witness, self.v, budget)
        back = run(self.e_upper_witness, self.w, budget)
        return (fwd.accepted and fwd.output == self.w
                and back.accepted and back.output == self.v
                and len(self.e_upper_witness) == self.e_upper_witness_len)

    def to_line(self) -> str:
        fields = {
            "n": self.n,
            "v": render(self.v),
            "u": render(self.u),
            "w": render(self.w),
            "e_upper_witness_len": self.e_upper_witness_len,
            "e_t_value": self.e_t_value,
            "witness": self.e_upper_witness,
            "bound": ",".join(map(str, self.bound.as_tuple())),
            "bound_prime": ",".join(map(str, self.bound_prime.as_tuple())),
            "cap": self.search_cap,
        }
        return " ".join(f"{k}={v}" for k, v in fields.items())


def xor_pair(n: int, bound: StepBound, bound_prime: Optional[StepBound] = None,
             search_cap: Optional[int] = None, limit: int = ENUMERATION_LIMIT) -> GapReport:
    bound_prime = default_prime(bound) if bound_prime is None else bound_prime
    cap = literal_bound(n) if search_cap is None else search_cap
    v = random_v(n, bound, cap, limit)
    u = diagonal_u(n, bound_prime, limit)
    w = xor(v, u)
    witness = xor_program(u)
    return GapReport(n, v, u, w, witness, len(witness), e_time(v, w, bound, cap),
                     bound, bound_prime, cap)


def gap_sweep(ns, bound: StepBound, bound_prime: Optional[StepBound] = None,
              search_cap: Optional[int] = None) -> list[GapReport]:
    return [xor_pair(n, bound, bound_prime, search_cap) for n in sorted(ns)]


def gap_threshold(reports: list[GapReport]) -> Optional[int]:
    """Least n from which the witness length stays below ``e_t_value`` for the rest of the sweep."""
    n0 = None
    for r in reports:
        if r.e_upper_witness_len < r.e_t_value:
            n0 = r.n if n0 is None else n0
        else:
            n0 = None
    return n0


def threshold_denominator(n: int, c: int) -> int:
    return n + 2 * ceil_log2(n) + c


@dataclass(frozen=True)
class ThresholdResult:
    i: Optional[int]
    c: int
    n: int
    trace_e: ApproximationTrace = field(repr=False)
    trace_E: ApproximationTrace = field(repr=False)

    @property
    def exhausted(self) -> bool:
        return self.i is None

    def to_line(self) -> str:
        i = "exhausted" if self.i is None else str(self.i)
        return (f"n={self.n} c={self.c} i={i} "
                f"e_label={self.trace_e.label!r} E_label={self.trace_E.label!r}")


def threshold_search(n: int, trace_e: ApproximationTrace, trace_E: ApproximationTrace,
                     c: int, step_cap: int) -> ThresholdResult:
    """Least ``i <= step_cap`` with ``trace_e[i] >= trace_E[i] / (n + 2 ceil(log2 n) + c)``."""
    if c < 0:
        raise ValueError("c must be nonnegative")
    if not trace_e.is_nondecreasing():
        raise MalformedTrace(f"trace_e must be nondecreasing: {trace_e.label}")
    if not trace_E.is_nonincreasing():
        raise MalformedTrace(f"trace_E must be nonincreasing: {trace_E.label}")
    denom = threshold_denominator(n, c)
    last = min(step_cap, len(trace_e) - 1, len(trace_E) - 1)
    for i in range(last + 1):
        if trace_e[i] * denom >= trace_E[i]:
            return ThresholdResult(i, c, n, trace_e, trace_E)
    return ThresholdResult(None, c, n, trace_e, trace_E)


def s_of_n(n: int, trace_supplier: TraceSupplier, c: int, step_cap: int) -> Optional[int]:
    """Max threshold index over all pairs of length-``n`` strings; None if any pair exhausts."""
    if n > 4:
        raise Infeasible("s_of_n enumerates 2^(2n) pairs; n must be at most 4")
    worst = 0
    for x in strings_of_length(n):
        for y in strings_of_length(n):
            res = threshold_search(n, *trace_supplier(x, y), c, step_cap)
            if res.exhausted:
                return None
            worst = max(worst, res.i)
    return worst


def diagonal_nid(x: BitString, schedule: Schedule) -> ApproximationTrace:
    """``1 / K^t(x)`` along a schedule: nondecreasing, approaching ``1/K(x)`` from below."""
    check_schedule(schedule, len(x))
    return ApproximationTrace(
        (Fraction(1, k_time(x, "", b, cap).value) for b, cap in schedule),
        f"1/K^t({render(x, True)})",
    )


def surrogate_traces(schedule: Schedule) -> TraceSupplier:
    """Time-bounded stand-ins for the traces the threshold search expects.

    ``trace_E`` is ``e_time`` along the schedule (nonincreasing). ``trace_e`` is
    the running max of ``nid_time`` along the schedule, made nondecreasing by
    the running max. For ``x == y`` it equals ``K^t(x|x)`` times
    :func:`diagonal_nid`.
    """
    def supply(x: BitString, y: BitString) -> tuple[ApproximationTrace, ApproximationTrace]:
        tag = f"{render(x, True)},{render(y, True)}"
        trace_E = elementwise_max(k_upper_trace(x, y, schedule), k_upper_trace(y, x, schedule),
                                  label=f"E^t({tag})")
        nid = ApproximationTrace((nid_time(x, y, b, cap) for b, cap in schedule))
        return running_max(nid, label=f"e^t({tag})"), trace_E

    return supply
