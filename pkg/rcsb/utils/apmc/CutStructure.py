##
# File:    CutStructure.py
# Author:  Dennis Piehl
# Date:    13-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Extremal cut structure for a fixed graph: cut sides, minimality and extremality checks,
arc replacement, enumeration of latest/earliest <=k-cuts, and the split-covering and
late-covering characterizations.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging

from rcsb.utils.apmc.ApmcExceptions import NotACutError
from rcsb.utils.apmc.CutFamily import Cut, CutFamily
from rcsb.utils.apmc.FlowOracle import FlowOracle

logger = logging.getLogger(__name__)


class CutStructure(object):
    def __init__(self, g, **kwargs):
        self.__g = g
        self.__kwargs = kwargs
        self.__oracle = FlowOracle(g, **kwargs)

    @property
    def graph(self):
        return self.__g

    def sides(self, s, t, arcs):
        """Source side S_M and target side T_M of an s-t cut.

        Raises:
            NotACutError: if t is still reachable from s after removing arcs
        """
        blocked = frozenset(arcs)
        sourceSide = self.__g.reachableFrom(s, blocked)
        if t in sourceSide:
            raise NotACutError("arcs %r do not separate %r from %r" % (sorted(blocked), s, t))
        return frozenset(sourceSide), frozenset(self.__g.reachingTo(t, blocked))

    def makeCut(self, s, t, arcs):
        sourceSide, targetSide = self.sides(s, t, arcs)
        return Cut(arcs, sourceSide, targetSide)

    def isCut(self, s, t, arcs):
        return not self.__g.reaches(s, t, frozenset(arcs))

    def isMinimal(self, s, t, arcs):
        """True if arcs is an s-t cut and no proper subset is one."""
        blocked = frozenset(arcs)
        if not self.isCut(s, t, blocked):
            return False
        return all(self.__g.reaches(s, t, blocked - {aId}) for aId in blocked)

    def isLatest(self, s, t, arcs):
        """Brute-force check that no minimal cut of smaller or equal size is strictly later."""
        if not self.isMinimal(s, t, arcs):
            return False
        cut = self.makeCut(s, t, arcs)
        return not any(other.strictlyLaterThan(cut) for other in self.__oracle.minimalCutsBruteForce(s, t, cut.size))

    def isEarliest(self, s, t, arcs):
        if not self.isMinimal(s, t, arcs):
            return False
        cut = self.makeCut(s, t, arcs)
        return not any(other.strictlyEarlierThan(cut) for other in self.__oracle.minimalCutsBruteForce(s, t, cut.size))

    def arcReplacement(self, s, t, cut, aId):
        """Contract S_M plus the head of aId into s and take the latest min-cut of the contraction.

        Args:
            s (int): source
            t (int): target
            cut (Cut): an s-t cut containing aId
            aId (int): arc of the cut

        Returns:
            Cut or None: the replacement with sides in the original graph, None when the head of aId is t
        """
        g = self.__g
        if aId not in cut.arcs:
            raise ValueError("arc %r is not a member of %r" % (aId, cut))
        head = g.head(aId)
        if head == t:
            return None
        sourceSide = cut.sourceSide if cut.sourceSide is not None else self.sides(s, t, cut.arcs)[0]
        h = g.contract(set(sourceSide) | {head}, s)
        hCut = FlowOracle(h).latestMinCut(s, t)
        return self.makeCut(s, t, hCut.arcs)

    def latestCutsUpToK(self, s, t, k):
        """All s-t-latest cuts with at most k arcs, by arc-replacement closure from the latest min-cut.

        Returns:
            CutFamily: [empty cut] when t is unreachable, the empty family when the min-cut exceeds k
        """
        g = self.__g
        if not g.reaches(s, t):
            return CutFamily.unreachable(kind=CutFamily.LATEST, k=k)
        seed = self.__oracle.latestMinCut(s, t)
        if seed.size > k:
            return CutFamily([], kind=CutFamily.LATEST, k=k)
        seenD = {seed.arcs: seed}
        pending = [seed]
        while pending:
            cut = pending.pop()
            for aId in sorted(cut.arcs):
                nCut = self.arcReplacement(s, t, cut, aId)
                if nCut is None or nCut.size > k or nCut.arcs in seenD:
                    continue
                seenD[nCut.arcs] = nCut
                pending.append(nCut)
        cutL = [cut for cut in seenD.values() if self.isMinimal(s, t, cut.arcs)]
        latestL = [m1 for m1 in cutL if not any(m2.size <= m1.size and m2.strictlyLaterThan(m1) for m2 in cutL)]
        return CutFamily.fromSides(latestL, kind=CutFamily.LATEST, k=k)

    def earliestCutsUpToK(self, s, t, k):
        """All s-t-earliest cuts with at most k arcs, from the latest t-s cuts of the reversed graph."""
        rFamily = CutStructure(self.__g.reverse(), **self.__kwargs).latestCutsUpToK(t, s, k)
        if rFamily.isUnreachable():
            return CutFamily.unreachable(kind=CutFamily.EARLIEST, k=k)
        return CutFamily.fromSides([self.makeCut(s, t, cut.arcs) for cut in rFamily], kind=CutFamily.EARLIEST, k=k)

    def splitCoveringFamilies(self, s, t, split, k):
        """Per-vertex (earliest s-v <=k-cuts in a1, latest v-t <=k-cuts in a2); None where a side is undefined."""
        g1 = CutStructure(self.__g.arcSubgraph(split.a1), **self.__kwargs)
        g2 = CutStructure(self.__g.arcSubgraph(split.a2), **self.__kwargs)
        familyD = {}
        for v in range(self.__g.n):
            earliest = g1.earliestCutsUpToK(s, v, k) if v != s else None
            latest = g2.latestCutsUpToK(v, t, k) if v != t else None
            familyD[v] = (earliest, latest)
        return familyD

    def checkSplitCovering(self, s, t, split, arcs, familyD):
        """True if arcs covers, for every vertex, one member of its earliest-in-a1 or latest-in-a2 family.

        Vertices other than s and t that are unreachable from s in a1, or that do not reach t
        in a2, are exempt.
        """
        g = self.__g
        arcs = frozenset(arcs)
        reach1 = g.arcSubgraph(split.a1).reachableFrom(s)
        reach2 = g.arcSubgraph(split.a2).reachingTo(t)
        for v in range(g.n):
            if v not in (s, t) and (v not in reach1 or v not in reach2):
                continue
            earliest, latest = familyD[v]
            memberL = (earliest.arcSets() if earliest is not None else []) + (latest.arcSets() if latest is not None else [])
            if not any(member <= arcs for member in memberL):
                logger.debug("vertex %d is not covered by %r", v, sorted(arcs))
                return False
        return True

    def canonicalLateCut(self, s, t):
        """Arcs leaving s whose head is t or reaches t; every s-t-latest cut is at least as late."""
        g = self.__g
        towardT = g.reachingTo(t)
        return frozenset(aId for aId in g.outArcs(s) if g.head(aId) in towardT)

    def checkLateCovering(self, s, t, reference, arcs, k):
        """True if, for every arc (x, y) of the reference cut, either the arc or a y-t-latest <=k-cut lies in arcs."""
        g = self.__g
        arcs = frozenset(arcs)
        for aId in sorted(reference):
            if aId in arcs:
                continue
            y = g.head(aId)
            if y == t:
                return False
            if not any(member <= arcs for member in self.latestCutsUpToK(y, t, k).arcSets()):
                return False
        return True
