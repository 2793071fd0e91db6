from fractions import Fraction

import pytest

from infodist.bitcore import strings_of_length, strings_up_to
from infodist.complexity import (
    check_schedule,
    e_time,
    e_upper_trace,
    k_time,
    k_upper_trace,
    nid_time,
)
from infodist.approx import fluctuation_count
from infodist.errors import NoWitness
from infodist.machine import C_COPY, StepBound, literal_bound, run
from oracles import brute_k, brute_k_table

GENEROUS = StepBound(8, 1, 16)


def test_copy_is_cheap():
    for x in ["", "1", "0110", "1111111111"]:
        est = k_time(x, x, GENEROUS, literal_bound(len(x)))
        assert est.value <= C_COPY


def test_empty_string_costs_one_halt():
    est = k_time("", "", GENEROUS, 12)
    assert (est.value, est.witness) == (3, "000")
    assert brute_k("", "", GENEROUS, 12) == (3, "000")


def test_e_time_0000_1111():
    # frozen from brute_k over all codes of <= 17 bits
    assert e_time("0000", "1111", GENEROUS, 17) == 15
    assert max(brute_k("0000", "1111", GENEROUS, 17)[0],
               brute_k("1111", "0000", GENEROUS, 17)[0]) == 15


def test_e_time_symmetric_and_diagonal():
    for x in strings_up_to(3):
        for y in strings_up_to(3):
            assert e_time(x, y, GENEROUS, 14) == e_time(y, x, GENEROUS, 14)
        assert e_time(x, x, GENEROUS, 14) == k_time(x, x, GENEROUS, 14).value


def test_no_witness_below_literal_cap():
    with pytest.raises(NoWitness):
        k_time("0000", "", GENEROUS, 12)


@pytest.mark.parametrize("y", ["", "1", "0110"])
def test_oracle_equivalence_cap_12(y):
    targets = list(strings_up_to(4))
    table = brute_k_table(targets, y, GENEROUS, 12)
    for x in targets:
        try:
            est = k_time(x, y, GENEROUS, 12)
        except NoWitness:
            assert table[x] is None
            continue
        assert (est.value, est.witness) == table[x]


def test_witnesses_replay():
    for x in strings_up_to(5):
        for y in ["", "0", "11"]:
            est = k_time(x, y, GENEROUS, literal_bound(len(x)))
            assert est.verify()
            r = run(est.witness, y, GENEROUS.t(len(x)))
            assert r.output == x and r.steps_used == est.steps


def test_anti_monotone_in_time_and_cap():
    tight, loose = StepBound(0, 0, 2), StepBound(8, 1, 16)
    for x in strings_up_to(4):
        for y in ["", "01", "1111"]:
            cap = literal_bound(len(x))
            assert k_time(x, y, tight, cap).value >= k_time(x, y, loose, cap).value
            assert k_time(x, y, loose, cap).value >= k_time(x, y, loose, cap + 4).value


def test_upper_bound_law():
    for x in strings_up_to(10):
        assert k_time(x, "", GENEROUS, literal_bound(len(x))).value <= literal_bound(len(x))


REPEATED = "01" * 6


def test_repeat_drop_point():
    # the REPEAT witness "01" x 6 needs 13 steps; find that by running it
    witness = k_time(REPEATED, "", GENEROUS, 27).witness
    first_ok = next(b for b in range(40) if run(witness, "", b).accepted)
    assert first_ok == 13 and len(witness) == 19
    schedule = [(StepBound(0, 0, c), 27) for c in (2, 9, first_ok - 1, first_ok, 40)]
    trace = k_upper_trace(REPEATED, "", schedule)
    assert trace.values == (25, 23, 21, 19, 19)
    assert trace[3] < trace[2]


def test_constant_schedule_constant_trace():
    trace = k_upper_trace("0110", "", [(GENEROUS, 17)] * 4)
    assert len(set(trace)) == 1 and fluctuation_count(trace) == 0


def test_traces_nonincreasing():
    schedule = [(StepBound(0, 0, c), cap) for c, cap in ((2, 17), (6, 18), (12, 20), (30, 24))]
    for x in strings_of_length(4):
        for y in ["", "1", "0101"]:
            assert k_upper_trace(x, y, schedule).is_nonincreasing()
        assert e_upper_trace(x, "10", schedule).is_nonincreasing()


def test_schedule_must_grow():
    with pytest.raises(ValueError):
        check_schedule([(StepBound(0, 0, 9), 17), (StepBound(0, 0, 2), 17)], 4)
    with pytest.raises(ValueError):
        check_schedule([(GENEROUS, 18), (GENEROUS, 17)], 4)


def test_nid_self_at_most_one_beyond_copy_length():
    for n in (C_COPY, C_COPY + 1):
        for x in strings_of_length(n):
            cap = literal_bound(n)
            v = nid_time(x, x, GENEROUS, cap)
            assert v == Fraction(k_time(x, x, GENEROUS, cap).value, k_time(x, "", GENEROUS, cap).value)
            assert v <= 1


def test_nid_range_and_symmetry_length_4():
    slack = Fraction(C_COPY, 4)
    for x in strings_of_length(4):
        for y in strings_of_length(4):
            v = nid_time(x, y, GENEROUS, 17)
            assert 0 < v <= 1 + slack
            assert v == nid_time(y, x, GENEROUS, 17)


def test_record_fields():
    rec = k_time("01", "", GENEROUS, 12).to_record()
    assert set(rec) == {"x", "y", "bound", "cap", "value", "witness", "steps"}
    assert rec["bound"] == [8, 1, 16]
