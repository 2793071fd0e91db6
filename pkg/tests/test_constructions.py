from fractions import Fraction

import pytest

from infodist.approx import ApproximationTrace, classify, fluctuation_count
from infodist.bitcore import ceil_log2, string_of, strings_of_length, xor
from infodist.complexity import k_time, k_upper_trace
from infodist.constructions import (
    diagonal_nid,
    diagonal_u,
    diagonal_violations,
    gap_sweep,
    gap_threshold,
    random_v,
    s_of_n,
    surrogate_traces,
    threshold_denominator,
    threshold_search,
    xor_pair,
)
from infodist.errors import Infeasible, MalformedTrace
from infodist.machine import StepBound, literal_bound
from oracles import accepted_outputs, brute_k_table, linear_scan

T = StepBound(8, 1, 16)


def test_diagonal_tiny_n():
    assert diagonal_u(1, T) == "0"
    assert diagonal_u(2, T.scaled(2)) == "00"


def test_diagonal_n6_against_brute_force():
    bp = StepBound(4, 1, 0)
    produced = {o for o in accepted_outputs(5, string_of(6), bp).values() if len(o) == 6}
    want = next(u for u in strings_of_length(6) if u not in produced)
    assert want == "000000"
    assert diagonal_u(6, bp) == want


@pytest.mark.parametrize("n", range(1, 11))
def test_diagonal_never_produced(n):
    u = diagonal_u(n, T.scaled(2))
    assert diagonal_violations(n, u, T.scaled(2)) == 0


def test_diagonal_moves_off_zero_once_zeros_fits():
    # ZEROS HALT is 6 bits, so from n = 7 on it prints 0^n from conditional n
    assert diagonal_u(7, T.scaled(2)) == "0000001"


def test_enumeration_limit():
    with pytest.raises(Infeasible):
        diagonal_u(15, T)
    with pytest.raises(Infeasible):
        random_v(15, T)


def test_random_v_small():
    assert random_v(1, T) == "0"
    v = random_v(4, T)
    cond = string_of(4)
    table = brute_k_table(list(strings_of_length(4)), cond, T, literal_bound(4))
    want = next(x for x in strings_of_length(4) if table[x] is None or table[x][0] >= 4)
    assert v == want == "0000"


@pytest.mark.parametrize("n", range(1, 10))
def test_random_v_post_check(n):
    v = random_v(n, T)
    assert k_time(v, string_of(n), T, literal_bound(n)).value >= n


@pytest.mark.parametrize("n", range(2, 10))
def test_xor_pair_report(n):
    r = xor_pair(n, T)
    assert r.verify()
    assert xor(xor(r.v, r.u), r.u) == r.v
    assert r.bound_prime == T.scaled(2)


def test_gap_trend():
    reports = gap_sweep(range(4, 9), T)
    lens = [r.e_upper_witness_len for r in reports]
    e_t = [r.e_t_value for r in reports]
    assert lens == sorted(lens) and lens[-1] - lens[0] <= 3 * ceil_log2(8)
    assert e_t == sorted(e_t) and e_t[-1] > e_t[0]
    # the witness runs inside the time bound, so E^t never exceeds it here
    assert all(t <= w for t, w in zip(e_t, lens))
    assert gap_threshold(reports) is None


def test_gap_report_line():
    line = xor_pair(4, T).to_line()
    fields = dict(kv.split("=", 1) for kv in line.split())
    assert fields["n"] == "4" and fields["bound"] == "8,1,16" and fields["bound_prime"] == "16,1,32"


def test_threshold_trivial_cases():
    n = 5
    ones = ApproximationTrace([1] * 4)
    big = ApproximationTrace([n] * 4)
    assert threshold_search(n, ones, big, 1000, 10).i == 0
    zeros = ApproximationTrace([0] * 4)
    assert threshold_search(n, zeros, ApproximationTrace([1] * 4), 8, 10).exhausted


def test_threshold_crossing_traces():
    e = ApproximationTrace([0, Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1])
    E = ApproximationTrace([8, 6, 4, 2, 1])
    res = threshold_search(8, e, E, 2, 10)
    assert threshold_denominator(8, 2) == 16
    assert res.i == linear_scan(8, e, E, 2, 10, ceil_log2) == 2
    assert threshold_search(8, e, E, 2, 1).exhausted


def test_threshold_rejects_bad_traces():
    with pytest.raises(MalformedTrace):
        threshold_search(4, ApproximationTrace([1, 0]), ApproximationTrace([1]), 0, 5)
    with pytest.raises(MalformedTrace):
        threshold_search(4, ApproximationTrace([0]), ApproximationTrace([1, 2]), 0, 5)


def test_s_of_n_constant_traces():
    supply = lambda x, y: (ApproximationTrace([1]), ApproximationTrace([1]))  # noqa: E731
    assert s_of_n(1, supply, 10**6, 5) == 0


def _crossing_supplier(x, y):
    # deterministic traces whose crossing index depends on the pair
    k = int(x or "0", 2) + int(y or "0", 2)
    e = ApproximationTrace([Fraction(i, 8) for i in range(12)])
    E = ApproximationTrace([max(12 - i - k, 1) for i in range(12)])
    return e, E


def test_s_of_n_matches_scan_oracle():
    for c in (0, 2, 6):
        per_pair = [linear_scan(2, *_crossing_supplier(x, y), c, 20, ceil_log2)
                    for x in strings_of_length(2) for y in strings_of_length(2)]
        want = None if None in per_pair else max(per_pair)
        assert s_of_n(2, _crossing_supplier, c, 20) == want


def test_s_of_n_nonincreasing_in_c():
    values = [s_of_n(2, _crossing_supplier, c, 20) for c in range(0, 12)]
    finite = [v for v in values if v is not None]
    assert finite == sorted(finite, reverse=True)
    # once finite, larger c keeps it finite
    first = next(i for i, v in enumerate(values) if v is not None)
    assert all(v is not None for v in values[first:])


def test_s_of_n_limit():
    with pytest.raises(Infeasible):
        s_of_n(5, _crossing_supplier, 0, 1)


GROWING = [(StepBound(0, 0, c), cap) for c, cap in ((2, 27), (9, 27), (11, 27), (13, 27))]


def test_diagonal_nid_repeat_rise():
    trace = diagonal_nid("01" * 6, GROWING)
    assert trace.values == (Fraction(1, 25), Fraction(1, 23), Fraction(1, 21), Fraction(1, 19))
    assert str(classify(trace)) == "lower-style"
    upper = k_upper_trace("01" * 6, "", GROWING)
    assert all(a * b == 1 for a, b in zip(trace, upper))


def test_diagonal_nid_constant_schedule():
    trace = diagonal_nid("0110", [(T, 17)] * 3)
    assert fluctuation_count(trace) == 0 and len(set(trace)) == 1


def test_diagonal_nid_nondecreasing_short_strings():
    schedule = [(StepBound(0, 0, c), cap) for c, cap in ((2, 19), (5, 19), (9, 20), (40, 21))]
    for n in range(7):
        for x in strings_of_length(n):
            assert diagonal_nid(x, schedule).is_nondecreasing()


def test_surrogate_traces_shape():
    supply = surrogate_traces([(StepBound(0, 0, 3), 17), (T, 17)])
    e, E = supply("01", "10")
    assert e.is_nondecreasing() and E.is_nonincreasing()
    e_same, _ = supply("0", "0")
    assert e_same[0] == 6 * diagonal_nid("0", [(StepBound(0, 0, 3), 17)])[0]
