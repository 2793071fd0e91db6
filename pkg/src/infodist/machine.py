"""A small deterministic prefix-free machine with step-bounded execution.

The machine reads its program strictly on demand, left to right, in 3-bit
opcodes. It has a read-only conditional tape, a write-only output tape and one
register (the last literal block). There are no jumps, so every run ends after
at most ``len(code) / 3`` dispatches.

A run *accepts* a program only if it executes HALT within the step budget and
has read exactly all bits of the program. Because reading is on demand, a
proper extension of an accepted program halts at the same point with bits left
over, so the accepted set is prefix-free.

This machine is not universal. It is complete (every string has a literal
program of length ``|x| + O(log |x|)``) and it can copy its conditional with a
constant-length program, which is what the desk-scale experiments need.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional

from .bitcore import BitString, ceil_log2, check_bitstring, index

MACHINE_VERSION = "toy-prefix-v1"

HALT = "000"
WRITE0 = "001"
WRITE1 = "010"
COPYCOND = "011"
LITERAL = "100"
REPEAT = "101"
XORLIT = "110"
ZEROS = "111"

OPCODES = {
    HALT: "HALT",
    WRITE0: "WRITE0",
    WRITE1: "WRITE1",
    COPYCOND: "COPYCOND",
    LITERAL: "LITERAL",
    REPEAT: "REPEAT",
    XORLIT: "XORLIT",
    ZEROS: "ZEROS",
}

# Length of the literal program for x is |x| + 2*floor(log2(|x|+1)) + 7, which is
# at most |x| + 2*ceil(log2(|x|+2)) + C_M.
C_M = 7
# COPYCOND HALT
C_COPY = 6

MACHINE_SPEC = f"""\
# infodist machine table
version: {MACHINE_VERSION}
opcode_width: 3
header_code: elias-gamma of (k + 1): z zeros, then the {{z+1}}-bit binary form of k + 1
step_cost: 1 per opcode dispatch; REPEAT and ZEROS add 1 per output bit
acceptance: HALT reached within the budget and every program bit read
budget: t(|output|) with t(n) = a*n^b + c
c_m: {C_M}
c_copy: {C_COPY}

bits  name      effect
000   HALT      stop
001   WRITE0    append 0
010   WRITE1    append 1
011   COPYCOND  append the whole conditional
100   LITERAL   read header k, read k bits, append them; they become the block register
101   REPEAT    read header k, append the block register k times
110   XORLIT    read header k, read k bits b; append b[j] xor cond[j] (cond padded with 0)
111   ZEROS     append index(cond) zeros (the conditional read as a number)
"""


@dataclass(frozen=True)
class StepBound:
    """Time bound ``t(n) = a * n**b + c``."""

    a: int = 8
    b: int = 1
    c: int = 16

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c) < 0:
            raise ValueError("StepBound coefficients must be nonnegative")

    def t(self, n: int) -> int:
        return self.a * n**self.b + self.c

    def scaled(self, factor: int) -> StepBound:
        return StepBound(self.a * factor, self.b, self.c * factor)

    def describe(self) -> str:
        return f"t(n)={self.a}*n^{self.b}+{self.c}"

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)


@dataclass(frozen=True)
class ExecutionResult:
    halted: bool
    output: BitString
    steps_used: int
    bits_read: int
    accepted: bool


class _OutOfProgram(Exception):
    pass


def gamma_encode(k: int) -> BitString:
    """Self-delimiting header for a count ``k >= 0``."""
    body = bin(k + 1)[2:]
    return "0" * (len(body) - 1) + body


def gamma_headers(max_bits: int) -> Iterator[tuple[int, BitString]]:
    """All ``(k, header)`` with ``len(header) <= max_bits``, by increasing k."""
    z = 0
    while 2 * z + 1 <= max_bits:
        for m in range(1 << z, 1 << (z + 1)):
            yield m - 1, "0" * z + bin(m)[2:]
        z += 1


def literal_program(x: BitString) -> BitString:
    return LITERAL + gamma_encode(len(x)) + x + HALT


def xor_program(u: BitString) -> BitString:
    """Program mapping conditional ``v`` to ``v xor u`` when ``|v| == |u|``."""
    return XORLIT + gamma_encode(len(u)) + u + HALT


def copy_program() -> BitString:
    return COPYCOND + HALT


def literal_bound(n: int) -> int:
    """Guaranteed upper bound on the shortest program length for an ``n``-bit string."""
    return n + 2 * ceil_log2(n + 2) + C_M


def _xor_padded(bits: str, cond: str, start: int = 0) -> str:
    seg = cond[start:start + len(bits)].ljust(len(bits), "0")
    return "".join("1" if a != b else "0" for a, b in zip(bits, seg))


def run(code: BitString, conditional: BitString, step_budget: int) -> ExecutionResult:
    """Execute ``code`` with ``conditional`` on the conditional tape."""
    if step_budget < 0:
        raise ValueError("step_budget must be nonnegative")
    pos = 0
    steps = 0
    out: list[str] = []
    block = ""

    def read(k: int) -> str:
        nonlocal pos
        if pos + k > len(code):
            pos = len(code)
            raise _OutOfProgram
        s = code[pos:pos + k]
        pos += k
        return s

    def read_header() -> int:
        z = 0
        while read(1) == "0":
            z += 1
        return int("1" + read(z), 2) - 1 if z else 0

    def result(halted: bool) -> ExecutionResult:
        return ExecutionResult(halted, "".join(out), steps, pos, halted and pos == len(code))

    try:
        while True:
            if steps + 1 > step_budget:
                return result(False)
            op = read(3)
            steps += 1
            if op == HALT:
                return result(True)
            elif op == WRITE0:
                out.append("0")
            elif op == WRITE1:
                out.append("1")
            elif op == COPYCOND:
                out.append(conditional)
            elif op == LITERAL:
                block = read(read_header())
                out.append(block)
            elif op == REPEAT:
                k = read_header()
                cost = k * len(block)
                if steps + cost > step_budget:
                    steps = step_budget
                    return result(False)
                steps += cost
                out.append(block * k)
            elif op == XORLIT:
                out.append(_xor_padded(read(read_header()), conditional))
            else:  # ZEROS
                k = index(conditional)
                if steps + k > step_budget:
                    steps = step_budget
                    return result(False)
                steps += k
                out.append("0" * k)
    except _OutOfProgram:
        return result(False)


class _Search:
    """Depth-first exploration of every accepted program up to ``max_len`` bits.

    With ``target`` set, branches whose output stops being a prefix of the
    target or whose step count exceeds ``budget`` are cut, and literal payloads
    are forced by the target instead of enumerated.
    """

    def __init__(self, conditional: str, max_len: int, bound: StepBound,
                 target: Optional[str] = None, shortest_only: bool = False):
        self.cond = conditional
        self.cond_num = index(conditional)
        self.max_len = max_len
        self.bound = bound
        self.target = target
        self.budget = bound.t(len(target)) if target is not None else None
        self.shortest_only = shortest_only
        self.found: list[tuple[str, str, int]] = []
        self.best = max_len
        # (out, steps, block) -> least (len, code) that reached it
        self.seen: dict[tuple[str, int, str], tuple[int, str]] = {}

    def _alive(self, out: str, steps: int) -> bool:
        if self.target is None:
            return True
        # the pending HALT needs one more step
        return steps + 1 <= self.budget and self.target.startswith(out)

    def explore(self, code: str, out: str, steps: int, block: str,
                first_ops: Optional[tuple[str, ...]] = None) -> None:
        if self.best - len(code) < 3:
            return
        if self.shortest_only:
            # a state reached again by a longer (or equally long, larger) code is dominated
            key = (out, steps, block)
            mark = (len(code), code)
            prev = self.seen.get(key)
            if prev is not None and prev <= mark:
                return
            self.seen[key] = mark
        for op in first_ops or OPCODES:
            if self.best - len(code) < 3:
                return
            self._dispatch(op, code + op, out, steps + 1, block)

    def _accept(self, code: str, out: str, steps: int) -> None:
        budget = self.budget if self.budget is not None else self.bound.t(len(out))
        if steps > budget:
            return
        if self.target is not None and out != self.target:
            return
        if self.shortest_only and len(code) < self.best:
            self.best = len(code)
            self.found = [f for f in self.found if len(f[0]) <= self.best]
        self.found.append((code, out, steps))

    def _payloads(self, k: int, out: str, xored: bool) -> Iterator[str]:
        if self.target is None:
            for bits in product("01", repeat=k):
                yield "".join(bits)
            return
        want = self.target[len(out):len(out) + k]
        if len(want) < k:
            return
        yield _xor_padded(want, self.cond) if xored else want

    def _dispatch(self, op: str, code: str, out: str, steps: int, block: str) -> None:
        if op == HALT:
            self._accept(code, out, steps)
            return
        if op in (WRITE0, WRITE1, COPYCOND, ZEROS):
            if op == WRITE0:
                out += "0"
            elif op == WRITE1:
                out += "1"
            elif op == COPYCOND:
                out += self.cond
            else:
                steps += self.cond_num
                out += "0" * self.cond_num
            if self._alive(out, steps):
                self.explore(code, out, steps, block)
            return
        # header-carrying opcodes; 3 bits are kept back for a closing HALT
        for k, header in gamma_headers(self.best - len(code) - 3):
            if op == REPEAT:
                rep_out = out + block * k
                rep_steps = steps + k * len(block)
                if self._alive(rep_out, rep_steps):
                    self.explore(code + header, rep_out, rep_steps, block)
                continue
            if len(code) + len(header) + k + 3 > self.best:
                break
            for payload in self._payloads(k, out, xored=(op == XORLIT)):
                if op == LITERAL:
                    new_out, new_block = out + payload, payload
                else:
                    new_out, new_block = out + _xor_padded(payload, self.cond), block
                if self._alive(new_out, steps):
                    self.explore(code + header + payload, new_out, steps, new_block)


def _enumerate_part(args: tuple) -> list[tuple[str, str]]:
    max_code_len, conditional, bound, ops = args
    search = _Search(conditional, max_code_len, bound)
    search.explore("", "", 0, "", first_ops=ops)
    return [(code, out) for code, out, _ in search.found]


def enumerate_programs(max_code_len: int, conditional: BitString, bound: StepBound,
                       jobs: int = 1) -> list[tuple[BitString, BitString]]:
    """Every accepted ``(program, output)`` with ``|program| <= max_code_len``.

    A program counts as accepted when it halts within ``bound.t(|output|)``
    steps. Results are in length-lex order of the program codes and do not
    depend on ``jobs``.
    """
    if max_code_len < 0:
        raise ValueError("max_code_len must be nonnegative")
    check_bitstring(conditional)
    if jobs > 1:
        parts = [(max_code_len, conditional, bound, (op,)) for op in OPCODES]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            found = [item for part in pool.map(_enumerate_part, parts) for item in part]
    else:
        found = _enumerate_part((max_code_len, conditional, bound, None))
    found.sort(key=lambda item: (len(item[0]), item[0]))
    return found


def enumerate(max_code_len: int, conditional: BitString,
              bound: StepBound) -> Iterator[tuple[BitString, BitString]]:
    """Stream form of :func:`enumerate_programs`."""
    yield from enumerate_programs(max_code_len, conditional, bound)


def shortest_program(target: BitString, conditional: BitString, bound: StepBound,
                     max_code_len: int) -> Optional[tuple[BitString, int]]:
    """Least (length-lex) accepted program printing ``target``, with its step count.

    Returns None when no program of at most ``max_code_len`` bits prints the
    target within ``bound.t(len(target))`` steps.
    """
    check_bitstring(target)
    check_bitstring(conditional)
    search = _Search(conditional, max_code_len, bound, target=target, shortest_only=True)
    search.explore("", "", 0, "")
    if not search.found:
        return None
    code, _, steps = min(search.found, key=lambda f: (len(f[0]), f[0]))
    return code, steps


def disassemble(code: BitString) -> list[str]:
    """Human-readable listing of the instructions ``code`` would execute."""
    listing = []
    pos = 0

    def header() -> Optional[int]:
        nonlocal pos
        z = 0
        while pos < len(code) and code[pos] == "0":
            z += 1
            pos += 1
        if pos + 1 + z > len(code):
            return None
        m = int(code[pos:pos + 1 + z], 2)
        pos += 1 + z
        return m - 1

    while pos + 3 <= len(code):
        op = code[pos:pos + 3]
        pos += 3
        name = OPCODES[op]
        if op in (LITERAL, XORLIT):
            k = header()
            if k is None or pos + k > len(code):
                listing.append(f"{name} <truncated>")
                return listing
            listing.append(f"{name} {k} {code[pos:pos + k] or 'eps'}")
            pos += k
        elif op == REPEAT:
            k = header()
            listing.append(f"{name} {k}" if k is not None else f"{name} <truncated>")
            if k is None:
                return listing
        else:
            listing.append(name)
        if op == HALT:
            break
    if pos < len(code):
        listing.append(f"<{len(code) - pos} unread bits>")
    return listing
