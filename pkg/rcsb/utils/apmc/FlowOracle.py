##
# File:    FlowOracle.py
# Author:  Dennis Piehl
# Date:    12-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Exact unit-capacity max-flow / min-cut reference implementation, brute-force extremal
cut enumeration and brute-force 4-clique detection.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import itertools
import logging
from collections import deque

from rcsb.utils.apmc.ApmcExceptions import TooLargeError
from rcsb.utils.apmc.CutFamily import Cut, CutFamily

logger = logging.getLogger(__name__)


class FlowResult(object):
    """Bounded flow value, the residual t-reaching vertex set T_{s,t} and the flow support."""

    def __init__(self, value, residualReachT, saturated):
        self.value = value
        self.residualReachT = frozenset(residualReachT)
        self.saturated = frozenset(saturated)

    def __repr__(self):
        return "FlowResult(value=%d, |T|=%d)" % (self.value, len(self.residualReachT))


class FlowOracle(object):
    """Ford-Fulkerson with BFS augmentation over unit-capacity arcs of a MultiDigraph."""

    def __init__(self, g, **kwargs):
        self.__g = g
        self.__maxBruteForceArcs = kwargs.get("maxBruteForceArcs", 20)
        # residual candidates per vertex, ordered by arc identifier: (arcId, isForward)
        self.__residualL = []
        for v in range(g.n):
            candL = [(aId, True) for aId in g.outArcs(v)] + [(aId, False) for aId in g.inArcs(v)]
            self.__residualL.append(sorted(candL))

    def maxFlowBounded(self, s, t, bound):
        """At most `bound` shortest augmenting paths, lowest arc identifier first.

        Args:
            s (int): source
            t (int): target
            bound (int): cap on the flow value

        Returns:
            FlowResult: min(bound, max number of arc-disjoint s-t paths) with T_{s,t} and the flow arcs
        """
        if s == t:
            raise ValueError("source and target coincide (%r)" % s)
        if bound < 1:
            raise ValueError("bound must be positive, got %r" % bound)
        g = self.__g
        flowS = set()
        value = 0
        while value < bound:
            parentD = {s: None}
            queue = deque([s])
            while queue and t not in parentD:
                v = queue.popleft()
                for aId, isForward in self.__residualL[v]:
                    if isForward == (aId in flowS):
                        continue
                    w = g.head(aId) if isForward else g.tail(aId)
                    if w not in parentD:
                        parentD[w] = (v, aId, isForward)
                        queue.append(w)
            if t not in parentD:
                break
            w = t
            while parentD[w] is not None:
                v, aId, isForward = parentD[w]
                if isForward:
                    flowS.add(aId)
                else:
                    flowS.discard(aId)
                w = v
            value += 1
        return FlowResult(value, self.__residualReach(t, flowS), flowS)

    def __residualReach(self, t, flowS):
        g = self.__g
        seen = {t}
        queue = deque([t])
        while queue:
            y = queue.popleft()
            for aId in g.inArcs(y):
                if aId not in flowS and g.tail(aId) not in seen:
                    seen.add(g.tail(aId))
                    queue.append(g.tail(aId))
            for aId in g.outArcs(y):
                if aId in flowS and g.head(aId) not in seen:
                    seen.add(g.head(aId))
                    queue.append(g.head(aId))
        return seen

    def minCutValue(self, s, t):
        return self.maxFlowBounded(s, t, self.__g.arcCount + 1).value

    def latestMinCut(self, s, t):
        """The unique latest min-cut A ∩ (complement(T_{s,t}) x T_{s,t}); empty when t is unreachable."""
        g = self.__g
        fR = self.maxFlowBounded(s, t, g.arcCount + 1)
        tSide = fR.residualReachT
        arcs = [aId for aId in g.arcIds if g.tail(aId) not in tSide and g.head(aId) in tSide]
        return Cut(arcs, g.reachableFrom(s, blocked=set(arcs)), g.reachingTo(t, blocked=set(arcs)))

    def earliestMinCut(self, s, t):
        g = self.__g
        rCut = FlowOracle(g.reverse()).latestMinCut(t, s)
        return Cut(rCut.arcs, g.reachableFrom(s, blocked=rCut.arcs), g.reachingTo(t, blocked=rCut.arcs))

    def minimalCutsBruteForce(self, s, t, k):
        """All minimal s-t cuts with at most k arcs, with their sides.

        Raises:
            TooLargeError: when the graph has more arcs than the brute-force guard allows
        """
        g = self.__g
        if g.arcCount > self.__maxBruteForceArcs:
            raise TooLargeError("brute-force enumeration over %d arcs exceeds guard %d" % (g.arcCount, self.__maxBruteForceArcs))
        cutL = []
        for size in range(0, k + 1):
            for subset in itertools.combinations(g.arcIds, size):
                blocked = set(subset)
                if g.reaches(s, t, blocked):
                    continue
                if any(not g.reaches(s, t, blocked - {aId}) for aId in subset):
                    continue
                cutL.append(Cut(subset, g.reachableFrom(s, blocked), g.reachingTo(t, blocked)))
        return cutL

    def enumerateExtremalCutsBruteForce(self, s, t, k):
        """Earliest and latest <=k families by exhaustive subset enumeration.

        Returns:
            (CutFamily, CutFamily): earliest family, latest family
        """
        cutL = self.minimalCutsBruteForce(s, t, k)
        latestL = [m1 for m1 in cutL if not any(m2.size <= m1.size and m2.targetSide < m1.targetSide for m2 in cutL)]
        earliestL = [m1 for m1 in cutL if not any(m2.size <= m1.size and m2.sourceSide < m1.sourceSide for m2 in cutL)]
        return CutFamily.fromSides(earliestL, kind=CutFamily.EARLIEST, k=k), CutFamily.fromSides(latestL, kind=CutFamily.LATEST, k=k)

    def vertexConnectivityBounded(self, s, t, k):
        """min(k, number of internally vertex-disjoint s-t paths) through the vertex-splitting transform."""
        g = self.__g
        h = g.splitVertices()
        return FlowOracle(h).maxFlowBounded(g.vOut(s), g.vIn(t), k).value

    @staticmethod
    def find4CliqueBruteForce(g4):
        """First (a, b, c, d) in lexicographic order forming a 4-clique, or None."""
        n = g4.nPerSide
        for a, b, c, d in itertools.product(range(n), repeat=4):
            if g4.hasEdge("AB", a, b) and g4.hasEdge("BC", b, c) and g4.hasEdge("CD", c, d) and g4.hasEdge("AC", a, c) and g4.hasEdge("BD", b, d) and g4.hasEdge("AD", a, d):
                return (a, b, c, d)
        return None
