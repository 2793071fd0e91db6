"""
The toy prefix machine
======================

Programs are bit strings read three bits at a time. A program counts only if
it halts within its step budget and has read every one of its bits, which makes
the set of accepted programs prefix-free.
"""

from infodist.machine import MACHINE_SPEC, disassemble, literal_program, run, xor_program

print(MACHINE_SPEC)

# A literal program carries its payload behind an Elias-gamma length header.
code = literal_program("0110")
print("literal program:", code, "->", disassemble(code))
print(run(code, "", 100))

# XORLIT flips the conditional: the same 7-bit mask turns 1010101 into 1111111.
mask = "0101010"
prog = xor_program(mask)
print("xor program:", prog, "->", run(prog, "1010101", 100).output)

# One extra trailing bit and the program is no longer accepted.
print("with trailing bit:", run(code + "0", "", 100).accepted)
