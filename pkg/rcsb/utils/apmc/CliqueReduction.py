##
# File:    CliqueReduction.py
# Author:  Dennis Piehl
# Date:    16-Oct-2026
#
# Updates:
#   18-Oct-2026  dwp Compare the bounded sums against the per-copy estimate total
#
# To Do:
##

"""
Reductions from 4-Clique on a 4-partite graph (sides A, B, C, D) to all-pairs vertex
connectivity on layered DAGs.

The layered DAG H has arcs a->b, b->c and c->d for present edges and a->c, b->d for
ABSENT edges. For an edge {a, d} the connectivity NC(a, d) in H equals the number of
2-hop paths |B'(a,d)| + |C'(a,d)| exactly when {a, d} lies in no 4-clique, and is larger
otherwise. The bounded variant splits A and D into blocks of k vertices and builds one
H per block pair, in which every connectivity is at most 2k.

Vertex layout in H: A at [0, n), B at [n, 2n), C at [2n, 3n), D at [3n, 4n).
"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging
import time

import numpy as np

from rcsb.utils.apmc.FlowOracle import FlowOracle
from rcsb.utils.apmc.MultiDigraph import MultiDigraph
from rcsb.utils.apmc.NetworkCoding import NetworkCoding

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger(__name__)


class EstimateTable(object):
    """|B'(a,d)| and |C'(a,d)| for every a in A and d in D."""

    def __init__(self, bCounts, cCounts):
        self.bCounts = np.asarray(bCounts, dtype=np.int64)
        self.cCounts = np.asarray(cCounts, dtype=np.int64)

    @property
    def nPerSide(self):
        return self.bCounts.shape[0]

    def value(self, a, d):
        return int(self.bCounts[a, d] + self.cCounts[a, d])

    def matrix(self):
        return self.bCounts + self.cCounts

    def toDict(self):
        return {"bCounts": self.bCounts.tolist(), "cCounts": self.cCounts.tolist()}


def oracleSolver(h, pairL, bound):
    """Vertex connectivities through vertex splitting and bounded augmenting paths."""
    fO = FlowOracle(h.splitVertices())
    return {(s, t): fO.maxFlowBounded(h.vOut(s), h.vIn(t), bound).value for s, t in pairL}


def netcodingSolver(h, pairL, bound, seed=0):
    """Vertex connectivities by network coding; a value equal to bound means at least bound."""
    if not pairL:
        return {}
    report = NetworkCoding().kstmvc(h, {s for s, _ in pairL}, {t for _, t in pairL}, bound, seed=seed)
    return {pair: report.value(*pair) for pair in pairL}


class CliqueReduction(object):
    def __init__(self, **kwargs):
        """
        Args:
            solver (callable, optional): (h, pairList, bound) -> {pair: connectivity}. Defaults to oracleSolver.
        """
        self.__solver = kwargs.get("solver", oracleSolver)

    def buildH(self, g4):
        """Layered DAG on 4n vertices for the unbounded reduction."""
        n = g4.nPerSide
        arcL = []
        for a, b in zip(*np.nonzero(g4.matrix("AB"))):
            arcL.append((int(a), n + int(b)))
        for b, c in zip(*np.nonzero(g4.matrix("BC"))):
            arcL.append((n + int(b), 2 * n + int(c)))
        for c, d in zip(*np.nonzero(g4.matrix("CD"))):
            arcL.append((2 * n + int(c), 3 * n + int(d)))
        for a, c in zip(*np.nonzero(~g4.matrix("AC"))):
            arcL.append((int(a), 2 * n + int(c)))
        for b, d in zip(*np.nonzero(~g4.matrix("BD"))):
            arcL.append((n + int(b), 3 * n + int(d)))
        return MultiDigraph(4 * n, arcL)

    def estimates(self, g4):
        """|B'| = M_AB . (not M_BD) and |C'| = (not M_AC) . M_CD as integer products."""
        bCounts = g4.matrix("AB").astype(np.int64) @ (~g4.matrix("BD")).astype(np.int64)
        cCounts = (~g4.matrix("AC")).astype(np.int64) @ g4.matrix("CD").astype(np.int64)
        return EstimateTable(bCounts, cCounts)

    def connectivities(self, g4):
        """NC(a, d) in H for every edge {a, d} in A x D."""
        n = g4.nPerSide
        h = self.buildH(g4)
        edgeL = [(int(a), int(d)) for a, d in zip(*np.nonzero(g4.matrix("AD")))]
        valueD = self.__solver(h, [(a, 3 * n + d) for a, d in edgeL], 2 * n + 1)
        return {(a, d): valueD[(a, 3 * n + d)] for a, d in edgeL}

    def cliqueEdges(self, g4):
        """A x D edges whose connectivity exceeds the estimate, i.e. edges that lie in a 4-clique."""
        est = self.estimates(g4)
        return sorted(pair for pair, nc in self.connectivities(g4).items() if nc > est.value(*pair))

    def decideUnbounded(self, g4):
        startTime = time.time()
        found = bool(self.cliqueEdges(g4))
        logger.info("Completed unbounded 4-clique decision n=%d found=%r (%.4f seconds)", g4.nPerSide, found, time.time() - startTime)
        return found

    def buildHBounded(self, g4, k, i, j):
        """The block instance for A_i x D_j.

        Copy a_x of the a-th vertex of A_i sits at x * k + a; copy d_y of the d-th vertex of
        D_j at 3n + y * k + d. Copy a_x reaches B only through block B_x, and copy d_y is
        reached from C only through block C_y.

        Raises:
            ValueError: k does not divide the side size or (i, j) is out of range
        """
        n = g4.nPerSide
        if k < 1 or n % k:
            raise ValueError("block size %r does not divide side size %d" % (k, n))
        numBlocks = n // k
        if not (0 <= i < numBlocks and 0 <= j < numBlocks):
            raise ValueError("block (%r, %r) outside [0, %d)" % (i, j, numBlocks))
        abM, bcM, cdM = g4.matrix("AB"), g4.matrix("BC"), g4.matrix("CD")
        acM, bdM = g4.matrix("AC"), g4.matrix("BD")
        arcL = []
        for x in range(numBlocks):
            for aa in range(k):
                a = i * k + aa
                ax = x * k + aa
                for b in range(x * k, (x + 1) * k):
                    if abM[a, b]:
                        arcL.append((ax, n + b))
                for c in range(n):
                    if not acM[a, c]:
                        arcL.append((ax, 2 * n + c))
        for b, c in zip(*np.nonzero(bcM)):
            arcL.append((n + int(b), 2 * n + int(c)))
        for y in range(numBlocks):
            for dd in range(k):
                d = j * k + dd
                dy = 3 * n + y * k + dd
                for c in range(y * k, (y + 1) * k):
                    if cdM[c, d]:
                        arcL.append((2 * n + c, dy))
                for b in range(n):
                    if not bdM[b, d]:
                        arcL.append((n + b, dy))
        return MultiDigraph(4 * n, arcL)

    def decideBounded(self, g4, k):
        """Pad to a multiple of k, then test every edge {a, d} against the summed block connectivities.

        The sum over all copies (a_x, d_y) of the estimates equals (n / k) * (|B'(a,d)| + |C'(a,d)|).
        """
        startTime = time.time()
        n = g4.nPerSide
        if k < 1:
            raise ValueError("block size must be positive, got %r" % k)
        if n % k:
            g4 = g4.padded(n + k - n % k)
            n = g4.nPerSide
        numBlocks = n // k
        est = self.estimates(g4)
        adM = g4.matrix("AD")
        found = False
        for i in range(numBlocks):
            for j in range(numBlocks):
                edgeL = [(i * k + aa, j * k + dd) for aa in range(k) for dd in range(k) if adM[i * k + aa, j * k + dd]]
                if not edgeL:
                    continue
                h = self.buildHBounded(g4, k, i, j)
                pairL = [(x * k + a - i * k, 3 * n + y * k + d - j * k) for a, d in edgeL for x in range(numBlocks) for y in range(numBlocks)]
                valueD = self.__solver(h, pairL, 2 * k + 1)
                for a, d in edgeL:
                    total = sum(valueD[(x * k + a - i * k, 3 * n + y * k + d - j * k)] for x in range(numBlocks) for y in range(numBlocks))
                    if total > numBlocks * est.value(a, d):
                        logger.debug("Edge (%d, %d) in block (%d, %d) exceeds its estimate (%d > %d)", a, d, i, j, total, numBlocks * est.value(a, d))
                        found = True
        logger.info("Completed bounded 4-clique decision n=%d k=%d found=%r (%.4f seconds)", n, k, found, time.time() - startTime)
        return found
