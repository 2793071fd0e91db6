"""Average-linkage (UPGMA) clustering and Newick serialization."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ncd import DistanceMatrix


@dataclass(frozen=True)
class Node:
    height: Fraction
    label: Optional[str] = None
    children: tuple["Node", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> list[str]:
        if self.is_leaf:
            return [self.label]
        return [leaf for child in self.children for leaf in child.leaves()]

    def min_label(self) -> str:
        return min(self.leaves())


def upgma_tree(m: DistanceMatrix) -> Node:
    """Merge the closest pair of clusters until one remains.

    Ties go to the pair whose smallest leaf labels, as a sorted pair, compare
    least. Children are ordered by their smallest leaf label, so the tree does
    not depend on the order of the input rows.
    """
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    # id -> (subtree, size, least leaf label)
    clusters: dict[int, tuple[Node, int, str]] = {
        i: (Node(Fraction(0), m.labels[i]), 1, m.labels[i]) for i in range(n)
    }
    dist: dict[frozenset, Fraction] = {
        frozenset((i, j)): m[i, j] for i in range(n) for j in range(i + 1, n)
    }
    next_id = n
    while len(clusters) > 1:
        def rank(key: frozenset):
            a, b = sorted(clusters[k][2] for k in key)
            return (dist[key], a, b)

        best = min(dist, key=rank)
        a, b = sorted(best, key=lambda k: clusters[k][2])
        (na, sa, la), (nb, sb, _) = clusters.pop(a), clusters.pop(b)
        merged = Node(dist.pop(best) / 2, None, (na, nb))
        for k in clusters:
            dak = dist.pop(frozenset((a, k)))
            dbk = dist.pop(frozenset((b, k)))
            dist[frozenset((next_id, k))] = (sa * dak + sb * dbk) / (sa + sb)
        clusters[next_id] = (merged, sa + sb, la)
        next_id += 1
    (root, _, _), = clusters.values()
    return root


_PLAIN = re.compile(r"^[A-Za-z0-9_.\-]+$")


def _newick_label(label: str) -> str:
    if _PLAIN.match(label):
        return label
    return "'" + label.replace("'", "''") + "'"


def _fmt(v: Fraction) -> str:
    return f"{float(v):.6f}"


def to_newick(root: Node) -> str:
    def emit(node: Node, parent_height: Optional[Fraction]) -> str:
        if node.is_leaf:
            text = _newick_label(node.label)
        else:
            text = "(" + ",".join(emit(ch, node.height) for ch in node.children) + ")"
        if parent_height is not None:
            text += ":" + _fmt(parent_height - node.height)
        return text

    return emit(root, None) + ";"


def upgma(m: DistanceMatrix) -> str:
    return to_newick(upgma_tree(m))


def cut(root: Node, k: int) -> list[list[str]]:
    """Leaf sets of the ``k`` clusters left after undoing the top ``k - 1`` merges."""
    parts = [root]
    while len(parts) < k:
        splittable = [p for p in parts if not p.is_leaf]
        if not splittable:
            break
        top = max(splittable, key=lambda p: (p.height, p.min_label()))
        parts.remove(top)
        parts.extend(top.children)
    return sorted((sorted(p.leaves()) for p in parts), key=lambda leaves: leaves[0])


def parse_newick(text: str) -> Node:
    """Read back the Newick produced by :func:`to_newick` (heights rebuilt from branch lengths)."""
    text = text.strip()
    if not text.endswith(";"):
        raise ValueError("Newick text must end with ';'")
    pos = 0

    def label() -> str:
        nonlocal pos
        if text[pos] == "'":
            end = pos + 1
            buf = []
            while True:
                if text[end] == "'" and text[end + 1:end + 2] == "'":
                    buf.append("'")
                    end += 2
                elif text[end] == "'":
                    break
                else:
                    buf.append(text[end])
                    end += 1
            pos = end + 1
            return "".join(buf)
        start = pos
        while text[pos] not in ",():;":
            pos += 1
        return text[start:pos]

    def length() -> Fraction:
        nonlocal pos
        if text[pos] != ":":
            return Fraction(0)
        start = pos = pos + 1
        while text[pos] not in ",();":
            pos += 1
        return Fraction(text[start:pos])

    def node() -> tuple[str, list, Fraction]:
        nonlocal pos
        if text[pos] == "(":
            pos += 1
            kids = [node()]
            while text[pos] == ",":
                pos += 1
                kids.append(node())
            pos += 1  # ")"
            return ("", kids, length())
        name = label()
        return (name, [], length())

    def build(raw, height: Fraction) -> Node:
        name, kids, _ = raw
        if not kids:
            return Node(height, name)
        return Node(height, None, tuple(build(k, height - k[2]) for k in kids))

    raw = node()

    def depth(r) -> Fraction:
        _, kids, _ = r
        return max((k[2] + depth(k) for k in kids), default=Fraction(0))

    return build(raw, depth(raw))
