"""Sliding-window LZSS coder used as the built-in compressor.

Format::

    4 bytes    raw length, little endian
    groups of  1 flag byte + up to 8 tokens (bit i set -> token i is a match)
    literal    1 byte
    match      2 bytes (distance - 1, big endian) + 1 byte (length - MIN_MATCH)

Greedy longest match over a 32 KiB window with hash chains on 3-byte keys.
There is no entropy stage, so random input grows by about 1/8.
"""

from __future__ import annotations

import struct

WINDOW = 32 * 1024
MIN_MATCH = 4
MAX_MATCH = MIN_MATCH + 255
MAX_CHAIN = 64
HEADER = 4


def _match_len(data: bytes, i: int, j: int, limit: int) -> int:
    n = 0
    # 8-byte slices first; cheap in CPython compared to a per-byte loop
    while n + 8 <= limit and data[i + n:i + n + 8] == data[j + n:j + n + 8]:
        n += 8
    while n < limit and data[i + n] == data[j + n]:
        n += 1
    return n


def compress(data: bytes) -> bytes:
    data = bytes(data)
    size = len(data)
    out = bytearray(struct.pack("<I", size))
    head: dict[bytes, int] = {}
    prev = [-1] * size

    def insert(p: int) -> None:
        if p + 3 <= size:
            key = data[p:p + 3]
            prev[p] = head.get(key, -1)
            head[key] = p

    flag_pos = -1
    nbits = 8
    i = 0
    while i < size:
        if nbits == 8:
            flag_pos = len(out)
            out.append(0)
            nbits = 0
        best_len, best_dist = 0, 0
        limit = min(MAX_MATCH, size - i)
        if limit >= MIN_MATCH:
            cand = head.get(data[i:i + 3], -1)
            chain = MAX_CHAIN
            while cand >= 0 and i - cand <= WINDOW and chain:
                # the byte just past the current best must agree for a longer match
                if data[cand + best_len] == data[i + best_len]:
                    n = _match_len(data, cand, i, limit)
                    if n > best_len:
                        best_len, best_dist = n, i - cand
                        if n == limit:
                            break
                cand = prev[cand]
                chain -= 1
        if best_len >= MIN_MATCH:
            out[flag_pos] |= 1 << nbits
            out += struct.pack(">HB", best_dist - 1, best_len - MIN_MATCH)
            for p in range(i, i + best_len):
                insert(p)
            i += best_len
        else:
            out.append(data[i])
            insert(i)
            i += 1
        nbits += 1
    return bytes(out)


def decompress(blob: bytes) -> bytes:
    (size,) = struct.unpack_from("<I", blob, 0)
    out = bytearray()
    pos = HEADER
    while len(out) < size:
        flags = blob[pos]
        pos += 1
        for bit in range(8):
            if len(out) >= size:
                break
            if flags >> bit & 1:
                dist_m1, len_m = struct.unpack_from(">HB", blob, pos)
                pos += 3
                start = len(out) - dist_m1 - 1
                if start < 0:
                    raise ValueError("corrupt stream: match before start of data")
                for k in range(len_m + MIN_MATCH):
                    out.append(out[start + k])
            else:
                out.append(blob[pos])
                pos += 1
    return bytes(out)


def compressed_length(data: bytes) -> int:
    return len(compress(data))
