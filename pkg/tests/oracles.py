"""Brute-force reference computations, independent of the search code under test.

Everything here goes through ``machine.run`` on every code of a given length;
none of it touches ``enumerate_programs`` or ``shortest_program``.
"""

from itertools import product

from infodist.machine import run


def all_codes(max_len):
    for n in range(max_len + 1):
        for bits in product("01", repeat=n):
            yield "".join(bits)


def accepted_outputs(max_len, conditional, bound):
    """{code: output} for every code accepted within t(|output|) steps."""
    found = {}
    for code in all_codes(max_len):
        # a generous run first, then the output-dependent budget
        r = run(code, conditional, 10**6)
        if r.accepted and r.steps_used <= bound.t(len(r.output)):
            found[code] = r.output
    return found


def brute_k(x, y, bound, cap):
    """Least (length, code) printing x from y within t(|x|) steps, or None."""
    budget = bound.t(len(x))
    for code in all_codes(cap):
        r = run(code, y, budget)
        if r.accepted and r.output == x:
            return len(code), code
    return None


def brute_k_table(targets, y, bound, cap):
    """brute_k for many targets with one pass over the codes per target length."""
    best = {}
    wanted = set(targets)
    for length in sorted({len(x) for x in wanted}):
        budget = bound.t(length)
        for code in all_codes(cap):
            r = run(code, y, budget)
            if r.accepted and r.output in wanted and len(r.output) == length:
                best.setdefault(r.output, (len(code), code))
    return {x: best.get(x) for x in targets}


def linear_scan(n, trace_e, trace_E, c, step_cap, log2ceil):
    denom = n + 2 * log2ceil(n) + c
    for i in range(min(step_cap + 1, len(trace_e), len(trace_E))):
        if trace_e[i] >= trace_E[i] / denom:
            return i
    return None
