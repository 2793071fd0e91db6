"""Corpus items, corpus loading, and the seeded synthetic Markov corpus."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import DuplicateLabel

DEFAULT_SEED = 20100101
ALPHABET = b"abcdefghijklmnop"


@dataclass(frozen=True)
class CorpusItem:
    label: str
    payload: bytes


def check_labels(items: Iterable[CorpusItem]) -> None:
    seen = set()
    for item in items:
        if item.label in seen:
            raise DuplicateLabel(f"duplicate label {item.label!r}")
        seen.add(item.label)


def load_corpus(path: str | os.PathLike) -> list[CorpusItem]:
    """Read a directory (label = file name) or a manifest of ``label,path`` lines.

    Manifest paths are relative to the manifest's directory. Blank lines and
    lines starting with ``#`` are skipped.
    """
    path = Path(path)
    if path.is_dir():
        items = [CorpusItem(p.name, p.read_bytes())
                 for p in sorted(path.iterdir()) if p.is_file()]
    else:
        items = []
        for line in path.read_text().splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            label, _, rel = line.partition(",")
            if not rel:
                raise ValueError(f"manifest line without a path: {line!r}")
            items.append(CorpusItem(label.strip(), (path.parent / rel.strip()).read_bytes()))
    check_labels(items)
    return items


def markov_table(rng: np.random.Generator, alphabet_size: int, concentration: float) -> np.ndarray:
    """Cumulative transition table indexed by the two previous symbols."""
    probs = rng.dirichlet(np.full(alphabet_size, concentration),
                          size=(alphabet_size, alphabet_size))
    return np.cumsum(probs, axis=-1)


def markov_sample(table: np.ndarray, length: int, rng: np.random.Generator) -> bytes:
    k = table.shape[0]
    draws = rng.random(length)
    a, b = rng.integers(k, size=2)
    out = bytearray(length)
    for pos in range(length):
        row = table[a, b]
        c = int(np.searchsorted(row, draws[pos] * row[-1], side="right"))
        c = min(c, k - 1)
        out[pos] = ALPHABET[c]
        a, b = b, c
    return bytes(out)


def synthetic_corpus(seed: int = DEFAULT_SEED, families: int = 3, per_family: int = 4,
                     size: int = 4096, concentration: float = 0.2) -> list[CorpusItem]:
    """Order-2 Markov families: one transition table per family, one stream per item.

    Labels are ``f{family}_{item}``. Every draw is derived from ``seed``.
    """
    items = []
    for f in range(families):
        table = markov_table(np.random.default_rng([seed, f]), len(ALPHABET), concentration)
        for i in range(per_family):
            rng = np.random.default_rng([seed, f, i + 1])
            items.append(CorpusItem(f"f{f}_{i}", markov_sample(table, size, rng)))
    return items


def family_of(label: str) -> str:
    return label.split("_", 1)[0]


def write_corpus(items: Iterable[CorpusItem], directory: str | os.PathLike) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for item in items:
        (directory / item.label).write_bytes(item.payload)
