##
# File:    InstanceGenerator.py
# Author:  Dennis Piehl
# Date:    16-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Seeded instance generators: the binary-tree gadget with many latest cuts, random DAGs and
digraphs with bounded arc multiplicity, and random 4-partite graphs.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging

import numpy as np

from rcsb.utils.apmc.FourPartiteGraph import FourPartiteGraph
from rcsb.utils.apmc.MultiDigraph import MultiDigraph

logger = logging.getLogger(__name__)


class InstanceGenerator(object):
    def treeGadget(self, depth, mult):
        """Full binary tree of the given depth rooted at the source, arcs directed away from the
        root, every leaf joined to the sink by mult parallel arcs.

        Tree vertices are numbered in heap order (root 0, children of v at 2v+1 and 2v+2);
        the sink is the last vertex. Tree arcs come first in heap order, then the leaf arcs.

        Returns:
            (MultiDigraph, int, int): gadget, source, sink
        """
        if depth < 0 or mult < 1:
            raise ValueError("need depth >= 0 and mult >= 1, got %r and %r" % (depth, mult))
        numTree = 2 ** (depth + 1) - 1
        sink = numTree
        arcL = []
        firstLeaf = 2**depth - 1
        for v in range(firstLeaf):
            arcL.append((v, 2 * v + 1))
            arcL.append((v, 2 * v + 2))
        for leaf in range(firstLeaf, numTree):
            arcL.extend([(leaf, sink)] * mult)
        return MultiDigraph(numTree + 1, arcL), 0, sink

    def randomDag(self, n, m, seed, maxMult=3):
        """m arcs drawn among forward pairs of a hidden random order, at most maxMult per pair."""
        rng = np.random.default_rng(seed)
        perm = [int(v) for v in rng.permutation(n)] if n else []
        slotL = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n)]
        return MultiDigraph(n, self.__drawArcs(rng, slotL, m, maxMult))

    def randomDigraph(self, n, m, seed, maxMult=1):
        """m arcs drawn among all ordered pairs of distinct vertices, cycles allowed."""
        rng = np.random.default_rng(seed)
        slotL = [(u, v) for u in range(n) for v in range(n) if u != v]
        return MultiDigraph(n, self.__drawArcs(rng, slotL, m, maxMult))

    def randomFourPartite(self, nPerSide, prob, seed):
        return FourPartiteGraph.random(nPerSide, prob, seed)

    def __drawArcs(self, rng, slotL, m, maxMult):
        if maxMult < 1 or m < 0:
            raise ValueError("need m >= 0 and maxMult >= 1, got %r and %r" % (m, maxMult))
        capacity = len(slotL) * maxMult
        if m > capacity:
            raise ValueError("%d arcs exceed the %d available slots" % (m, capacity))
        if m == 0:
            return []
        pool = np.repeat(np.arange(len(slotL)), maxMult)
        chosen = np.sort(rng.choice(pool.size, size=m, replace=False))
        arcL = [slotL[int(pool[idx])] for idx in chosen]
        logger.debug("Drew %d arcs over %d slots", len(arcL), len(slotL))
        return arcL
