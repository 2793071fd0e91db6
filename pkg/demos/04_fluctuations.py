"""
Counting fluctuations
=====================

A trace is n-approximable when it drops at most n - 1 times. Monotone
nondecreasing traces never drop.
"""

from itertools import product

from infodist.approx import classify, fluctuation_count, is_n_approx
from infodist.constructions import diagonal_nid, surrogate_traces, threshold_search
from infodist.machine import StepBound

for bits in ("00111", "01010", "10101"):
    trace = [int(b) for b in bits]
    smallest = next(n for n in range(1, 6) if is_n_approx(trace, n))
    print(bits, "drops:", fluctuation_count(trace), "least n:", smallest, classify(trace))

histogram = {}
for bits in product((0, 1), repeat=5):
    k = fluctuation_count(bits)
    histogram[k] = histogram.get(k, 0) + 1
print("drops over all 0/1 traces of length 5:", dict(sorted(histogram.items())))

schedule = [(StepBound(0, 0, 2), 27), (StepBound(0, 0, 9), 27), (StepBound(0, 0, 13), 27)]
lower = diagonal_nid("01" * 6, schedule)
print("1/K trace for (01)^6:", [str(v) for v in lower], classify(lower))

# Threshold search: the first step where e_i >= E_i / (n + 2 log n + c).
supply = surrogate_traces([(StepBound(0, 0, 3), 17), (StepBound(8, 1, 16), 17)])
e, E = supply("01", "10")
print(threshold_search(2, e, E, 8, 1).to_line())
