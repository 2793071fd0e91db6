"""Normalized compression distance over byte corpora.

``ncd(x, y) = (C(xy) - min(C(x), C(y))) / max(C(x), C(y))`` where ``C(xy)``
is the smaller of the two concatenation orders, so the value is symmetric
exactly. Values are Fractions. Negative values are clamped to 0 (and logged);
anything above :data:`SANITY_CEILING` raises :class:`CompressorInsane`.
"""

from __future__ import annotations

import bz2
import json
import logging
import lzma
import shlex
import subprocess
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

import numpy as np

from . import lz
from .corpus import CorpusItem, check_labels
from .errors import CompressorInsane

log = logging.getLogger(__name__)

SANITY_CEILING = Fraction(6, 5)


@dataclass(frozen=True)
class Compressor:
    """A named byte-length function. ``serial`` compressors are never called concurrently."""

    name: str
    compressed_length: Callable[[bytes], int]
    serial: bool = False

    def __call__(self, data: bytes) -> int:
        n = self.compressed_length(data)
        if n < 1:
            raise CompressorInsane(f"{self.name} returned length {n}")
        return n


def _zlib_len(data: bytes) -> int:
    return len(zlib.compress(data, 9))


def _bz2_len(data: bytes) -> int:
    return len(bz2.compress(data, 9))


def _lzma_len(data: bytes) -> int:
    return len(lzma.compress(data, preset=9))


@dataclass(frozen=True)
class ExternalCommand:
    """Runs a shell-free command with the payload on stdin; counts stdout bytes."""

    argv: tuple[str, ...]

    def __call__(self, data: bytes) -> int:
        proc = subprocess.run(self.argv, input=data, stdout=subprocess.PIPE, check=True)
        return len(proc.stdout)


BUILTIN = Compressor("builtin", lz.compressed_length)

_NAMED = {
    "builtin": BUILTIN,
    "zlib": Compressor("zlib", _zlib_len),
    "bz2": Compressor("bz2", _bz2_len),
    "lzma": Compressor("lzma", _lzma_len),
}


def get_compressor(selector: str) -> Compressor:
    """``builtin``, ``zlib``, ``bz2``, ``lzma`` or ``cmd:<command line>``."""
    if selector.startswith("cmd:"):
        argv = tuple(shlex.split(selector[4:]))
        if not argv:
            raise ValueError("empty external compressor command")
        return Compressor(selector, ExternalCommand(argv), serial=True)
    try:
        return _NAMED[selector]
    except KeyError:
        raise ValueError(f"unknown compressor {selector!r}") from None


def builtin_compressed_length(payload: bytes) -> int:
    return lz.compressed_length(payload)


def ncd_from_lengths(cx: int, cy: int, cxy: int) -> Fraction:
    value = Fraction(cxy - min(cx, cy), max(cx, cy))
    if value < 0:
        log.warning("negative NCD %s clamped to 0", value)
        value = Fraction(0)
    if value > SANITY_CEILING:
        raise CompressorInsane(f"NCD {float(value):.4f} exceeds {float(SANITY_CEILING)}")
    return value


def ncd(x: CorpusItem, y: CorpusItem, c: Compressor = BUILTIN) -> Fraction:
    cxy = min(c(x.payload + y.payload), c(y.payload + x.payload))
    return ncd_from_lengths(c(x.payload), c(y.payload), cxy)


@dataclass(frozen=True)
class DistanceMatrix:
    labels: tuple[str, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError("distance matrix must be square and match its labels")
        for i in range(n):
            for j in range(i):
                if self.entries[i][j] != self.entries[j][i]:
                    raise ValueError(f"matrix not symmetric at ({self.labels[i]}, {self.labels[j]})")

    def __len__(self) -> int:
        return len(self.labels)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def as_array(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.entries])

    def permuted(self, order: Sequence[int]) -> DistanceMatrix:
        return DistanceMatrix(tuple(self.labels[i] for i in order),
                              tuple(tuple(self.entries[i][j] for j in order) for i in order))

    def to_tsv(self, header: Iterable[str] = ()) -> str:
        lines = [f"# {h}" for h in header]
        lines.append("\t".join(["", *self.labels]))
        for label, row in zip(self.labels, self.entries):
            lines.append("\t".join([label, *(f"{float(v):.6f}" for v in row)]))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_tsv(cls, text: str) -> DistanceMatrix:
        rows = [line.split("\t") for line in text.splitlines()
                if line.strip() and not line.startswith("#")]
        labels = tuple(rows[0][1:])
        entries = []
        for expected, row in zip(labels, rows[1:]):
            if row[0] != expected:
                raise ValueError(f"row label {row[0]!r} does not match column {expected!r}")
            entries.append(tuple(Fraction(v) for v in row[1:]))
        return cls(labels, tuple(entries))

    def to_report(self, header: Optional[dict] = None) -> str:
        """Machine-readable JSON keeping the exact rationals as ``"p/q"`` strings."""
        doc = {
            "header": header or {},
            "labels": list(self.labels),
            "entries": [[f"{v.numerator}/{v.denominator}" for v in row] for row in self.entries],
        }
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"

    @classmethod
    def from_report(cls, text: str) -> DistanceMatrix:
        doc = json.loads(text)
        return cls(tuple(doc["labels"]),
                   tuple(tuple(Fraction(v) for v in row) for row in doc["entries"]))


def _lengths(c: Compressor, payloads: list[bytes], jobs: int) -> list[int]:
    if jobs > 1 and not c.serial and len(payloads) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(c, payloads, chunksize=4))
    return [c(p) for p in payloads]


def matrix(corpus: Sequence[CorpusItem], c: Compressor = BUILTIN, jobs: int = 1) -> DistanceMatrix:
    """All pairwise NCD values, diagonal included."""
    if len(corpus) < 2:
        raise ValueError("a distance matrix needs at least two items")
    check_labels(corpus)
    n = len(corpus)
    pairs = [(i, j) for i in range(n) for j in range(i, n)]
    payloads = [item.payload for item in corpus]
    for i, j in pairs:
        payloads.append(corpus[i].payload + corpus[j].payload)
        if i != j:
            payloads.append(corpus[j].payload + corpus[i].payload)
    lengths = _lengths(c, payloads, jobs)
    single, joint = lengths[:n], iter(lengths[n:])
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i, j in pairs:
        cxy = next(joint) if i == j else min(next(joint), next(joint))
        entries[i][j] = entries[j][i] = ncd_from_lengths(single[i], single[j], cxy)
    return DistanceMatrix(tuple(item.label for item in corpus),
                          tuple(tuple(row) for row in entries))


@dataclass(frozen=True)
class TriangleAudit:
    triples: int
    violations: int
    max_excess: Fraction
    tolerance: Fraction


def triangle_audit(m: DistanceMatrix, tolerance: Fraction = Fraction(1, 20)) -> TriangleAudit:
    """Check ``d(i,k) <= d(i,j) + d(j,k)`` over distinct triples.

    ``max_excess`` is the largest ``d(i,k) - d(i,j) - d(j,k)`` (0 if none is
    positive); ``violations`` counts triples whose excess exceeds ``tolerance``.
    """
    n = len(m)
    worst = Fraction(0)
    bad = 0
    triples = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) < 3:
                    continue
                triples += 1
                excess = m[i, k] - m[i, j] - m[j, k]
                worst = max(worst, excess)
                bad += excess > tolerance
    return TriangleAudit(triples, bad, worst, tolerance)
