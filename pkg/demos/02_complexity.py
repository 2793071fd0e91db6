"""
Time-bounded complexity
=======================

K^t(x|y) is the length of the shortest program that prints x from y within
t(|x|) steps. Giving the machine more time can only shorten the answer.
"""

from infodist.complexity import e_time, k_time, k_upper_trace, nid_time
from infodist.machine import StepBound, disassemble

t = StepBound(8, 1, 16)
print("bound:", t.describe())

est = k_time("0101", "", t, 17)
print("K^t(0101) =", est.value, "witness", disassemble(est.witness))

# E^t is the larger of the two conditional complexities; the NID surrogate
# divides it by the larger unconditional one.
print("E^t(0000, 1111) =", e_time("0000", "1111", t, 17))
print("nid(0000, 1111) =", nid_time("0000", "1111", t, 17))

# A repetitive string gets cheaper once REPEAT fits in the budget.
schedule = [(StepBound(0, 0, c), 27) for c in (2, 9, 12, 13, 40)]
trace = k_upper_trace("01" * 6, "", schedule)
print("upper trace for (01)^6:", [int(v) for v in trace])
