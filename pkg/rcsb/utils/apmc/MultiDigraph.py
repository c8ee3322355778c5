##
# File:    MultiDigraph.py
# Author:  Dennis Piehl
# Date:    12-Oct-2026
#
# Updates:
#   14-Oct-2026  dwp Add splitVertices() and padded() for the vertex-capacity and recursive code paths
#
# To Do:
##

"""
Unit-capacity directed multigraph with stable arc identifiers, topological ordering,
arc splits, contraction, reversal and the vertex-splitting transform.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import heapq
import logging
from collections import deque

from rcsb.utils.apmc.ApmcExceptions import CyclicGraphError, InvalidGraphError, InvalidOrderError

logger = logging.getLogger(__name__)


class ArcSplit(object):
    """Two-block partition (a1, a2) of the arc identifiers of a graph."""

    def __init__(self, a1, a2):
        self.a1 = frozenset(a1)
        self.a2 = frozenset(a2)

    def isValid(self, g):
        """Return True if (a1, a2) partitions the arcs of g and no arc of a2 is followed by an arc of a1."""
        if self.a1 & self.a2 or (self.a1 | self.a2) != frozenset(g.arcIds):
            return False
        headsOfA2 = {g.head(aId) for aId in self.a2}
        for aId in self.a1:
            if g.tail(aId) in headsOfA2:
                return False
        return True

    def __repr__(self):
        return "ArcSplit(a1=%r, a2=%r)" % (sorted(self.a1), sorted(self.a2))


class MultiDigraph(object):
    """Immutable directed multigraph on vertices [0, n).

    Parallel arcs are distinct arcs with distinct identifiers. Identifiers survive every
    derived-graph operation (subgraph, contraction, reversal) so that cuts can always be
    reported against the input graph.
    """

    def __init__(self, n, arcList=None, arcIds=None):
        """Build the graph.

        Args:
            n (int): vertex count
            arcList (list, optional): (tail, head) pairs
            arcIds (list, optional): identifiers for arcList, defaults to 0..m-1 in list order

        Raises:
            InvalidGraphError: for out-of-range endpoints, self-loops or duplicate identifiers
        """
        if n < 0:
            raise InvalidGraphError("negative vertex count %r" % n)
        arcList = list(arcList) if arcList else []
        arcIds = list(arcIds) if arcIds is not None else list(range(len(arcList)))
        if len(arcIds) != len(arcList):
            raise InvalidGraphError("arc identifier count %d differs from arc count %d" % (len(arcIds), len(arcList)))
        self.__n = n
        self.__tailD = {}
        self.__headD = {}
        self.__outL = [[] for _ in range(n)]
        self.__inL = [[] for _ in range(n)]
        for aId, (tail, head) in zip(arcIds, arcList):
            if aId in self.__tailD:
                raise InvalidGraphError("duplicate arc identifier %r" % aId)
            if not (0 <= tail < n and 0 <= head < n):
                raise InvalidGraphError("arc %r endpoints (%r, %r) outside [0, %d)" % (aId, tail, head, n))
            if tail == head:
                raise InvalidGraphError("self-loop at vertex %r (arc %r)" % (tail, aId))
            self.__tailD[aId] = tail
            self.__headD[aId] = head
            self.__outL[tail].append(aId)
            self.__inL[head].append(aId)
        self.__outL = [tuple(sorted(aL)) for aL in self.__outL]
        self.__inL = [tuple(sorted(aL)) for aL in self.__inL]
        self.__arcIds = tuple(sorted(self.__tailD))

    @classmethod
    def fromArcTriples(cls, n, arcTriples):
        """Build a graph from (arcId, tail, head) triples."""
        arcTriples = list(arcTriples)
        return cls(n, [(tail, head) for _, tail, head in arcTriples], [aId for aId, _, _ in arcTriples])

    @property
    def n(self):
        return self.__n

    @property
    def arcIds(self):
        return self.__arcIds

    @property
    def arcCount(self):
        return len(self.__arcIds)

    @property
    def arcs(self):
        """Tuple of (arcId, tail, head) ordered by arc identifier."""
        return tuple((aId, self.__tailD[aId], self.__headD[aId]) for aId in self.__arcIds)

    def arcIdBound(self):
        """One more than the largest arc identifier (0 for an arcless graph)."""
        return self.__arcIds[-1] + 1 if self.__arcIds else 0

    def hasArc(self, aId):
        return aId in self.__tailD

    def tail(self, aId):
        return self.__tailD[aId]

    def head(self, aId):
        return self.__headD[aId]

    def endpoints(self, aId):
        return self.__tailD[aId], self.__headD[aId]

    def outArcs(self, v):
        return self.__outL[v]

    def inArcs(self, v):
        return self.__inL[v]

    def outNeighbors(self, v):
        return sorted({self.__headD[aId] for aId in self.__outL[v]})

    def inNeighbors(self, v):
        return sorted({self.__tailD[aId] for aId in self.__inL[v]})

    def arcsBetween(self, u, v):
        return tuple(aId for aId in self.__outL[u] if self.__headD[aId] == v)

    def __eq__(self, other):
        return isinstance(other, MultiDigraph) and self.__n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.__n, self.arcs))

    def __repr__(self):
        return "MultiDigraph(n=%d, m=%d)" % (self.__n, len(self.__arcIds))

    #
    # Ordering
    #
    def topologicalOrder(self):
        """Kahn's scheme with a min-ordered frontier (smallest vertex index first).

        Raises:
            CyclicGraphError: if the graph has a directed cycle
        """
        inDeg = [len(self.__inL[v]) for v in range(self.__n)]
        frontier = [v for v in range(self.__n) if inDeg[v] == 0]
        heapq.heapify(frontier)
        order = []
        while frontier:
            v = heapq.heappop(frontier)
            order.append(v)
            for aId in self.__outL[v]:
                w = self.__headD[aId]
                inDeg[w] -= 1
                if inDeg[w] == 0:
                    heapq.heappush(frontier, w)
        if len(order) != self.__n:
            raise CyclicGraphError("graph has a directed cycle through %d vertices" % (self.__n - len(order)))
        return order

    def isAcyclic(self):
        try:
            self.topologicalOrder()
            return True
        except CyclicGraphError:
            return False

    def checkOrder(self, order):
        """Raise InvalidOrderError unless order is a topological order of this graph."""
        if sorted(order) != list(range(self.__n)):
            raise InvalidOrderError("order is not a permutation of the %d vertices" % self.__n)
        posD = {v: i for i, v in enumerate(order)}
        for aId in self.__arcIds:
            if posD[self.__tailD[aId]] >= posD[self.__headD[aId]]:
                raise InvalidOrderError("arc %r runs backwards in the supplied order" % aId)
        return posD

    def arcSplitPrefix(self, order, i, crossToA1=True):
        """Split the arcs at prefix position i of a topological order.

        Args:
            order (list): topological order
            i (int): split position, V1 = order[:i] and V2 = order[i:]
            crossToA1 (bool, optional): assign V1 -> V2 arcs to a1 (True) or a2 (False). Defaults to True.

        Returns:
            ArcSplit: arcs inside V1 (plus cross arcs when crossToA1) versus the rest
        """
        posD = self.checkOrder(order)
        if not 0 <= i <= self.__n:
            raise InvalidOrderError("split position %r outside [0, %d]" % (i, self.__n))
        a1, a2 = [], []
        for aId in self.__arcIds:
            tailIn1 = posD[self.__tailD[aId]] < i
            headIn1 = posD[self.__headD[aId]] < i
            if tailIn1 and (headIn1 or crossToA1):
                a1.append(aId)
            else:
                a2.append(aId)
        return ArcSplit(a1, a2)

    #
    # Derived graphs
    #
    def contract(self, block, into):
        """Merge every vertex of block into vertex `into`; internal arcs vanish, identifiers survive."""
        block = set(block)
        if into not in block:
            raise ValueError("contraction target %r not in block" % into)
        arcL, idL = [], []
        for aId in self.__arcIds:
            tail, head = self.__tailD[aId], self.__headD[aId]
            tail = into if tail in block else tail
            head = into if head in block else head
            if tail != head:
                arcL.append((tail, head))
                idL.append(aId)
        return MultiDigraph(self.__n, arcL, idL)

    def reverse(self):
        return MultiDigraph(self.__n, [(self.__headD[aId], self.__tailD[aId]) for aId in self.__arcIds], self.__arcIds)

    def inducedSubgraph(self, vertexSet):
        """G[S]: arcs with both endpoints in S; vertices outside S stay as isolated vertices."""
        vertexSet = set(vertexSet)
        return self.arcSubgraph(aId for aId in self.__arcIds if self.__tailD[aId] in vertexSet and self.__headD[aId] in vertexSet)

    def arcSubgraph(self, arcIds):
        """The spanning subgraph keeping only the given arcs."""
        keep = sorted(set(arcIds))
        return MultiDigraph(self.__n, [(self.__tailD[aId], self.__headD[aId]) for aId in keep], keep)

    def removeArcs(self, arcIds):
        drop = set(arcIds)
        return self.arcSubgraph(aId for aId in self.__arcIds if aId not in drop)

    def padded(self, n):
        """Same arcs on n >= self.n vertices; the additional vertices are isolated."""
        if n < self.__n:
            raise ValueError("cannot pad %d vertices down to %d" % (self.__n, n))
        return MultiDigraph.fromArcTriples(n, self.arcs)

    @staticmethod
    def vIn(v):
        return 2 * v

    @staticmethod
    def vOut(v):
        return 2 * v + 1

    def splitVertices(self):
        """Replace every vertex v by v_in -> v_out and redirect (u, v) to (u_out, v_in).

        Original arcs keep their identifiers; the arc v_in -> v_out gets identifier arcIdBound() + v.
        """
        base = self.arcIdBound()
        arcL, idL = [], []
        for aId in self.__arcIds:
            arcL.append((self.vOut(self.__tailD[aId]), self.vIn(self.__headD[aId])))
            idL.append(aId)
        for v in range(self.__n):
            arcL.append((self.vIn(v), self.vOut(v)))
            idL.append(base + v)
        return MultiDigraph(2 * self.__n, arcL, idL)

    #
    # Reachability
    #
    def reachableFrom(self, s, blocked=None):
        """Vertices reachable from s without using arcs in blocked."""
        return self.__search(s, self.__outL, self.__headD, blocked)

    def reachingTo(self, t, blocked=None):
        """Vertices that reach t without using arcs in blocked."""
        return self.__search(t, self.__inL, self.__tailD, blocked)

    def reaches(self, s, t, blocked=None):
        return t in self.reachableFrom(s, blocked)

    def __search(self, root, adjL, otherD, blocked):
        blocked = blocked or ()
        seen = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for aId in adjL[v]:
                if aId in blocked:
                    continue
                w = otherD[aId]
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def reachBitsets(self, order=None):
        """Reachability of a DAG as integer bitsets, reach[v] has bit w set iff v reaches w (v included)."""
        order = order if order is not None else self.topologicalOrder()
        reach = [0] * self.__n
        for v in reversed(order):
            bits = 1 << v
            for aId in self.__outL[v]:
                bits |= reach[self.__headD[aId]]
            reach[v] = bits
        return reach
