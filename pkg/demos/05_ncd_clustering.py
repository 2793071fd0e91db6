"""
Compression distance on a synthetic corpus
==========================================

Three order-2 Markov sources, four 4 KiB samples each. Samples from the same
source share statistics, so they compress better together.
"""

import numpy as np

from infodist.cluster import cut, upgma_tree, to_newick
from infodist.corpus import synthetic_corpus
from infodist.ncd import matrix, triangle_audit

corpus = synthetic_corpus()
m = matrix(corpus)

np.set_printoptions(precision=3, suppress=True, linewidth=120)
print(m.labels)
print(m.as_array())

audit = triangle_audit(m)
print(f"triangle audit: {audit.triples} triples, max excess {float(audit.max_excess):.4f}")

tree = upgma_tree(m)
print(to_newick(tree))
for group in cut(tree, 3):
    print("cluster:", group)
