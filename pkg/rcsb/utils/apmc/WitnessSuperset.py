##
# File:    WitnessSuperset.py
# Author:  Dennis Piehl
# Date:    13-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Witness Superset instances and solvers.

Given families F_1..F_c of small sets, find every set W with |W| <= k that contains a
member of each family and has no proper subset doing the same. The pruning solver
branches on the members of the first uncovered family only; the brute-force solver
enumerates subsets of the universe and serves as a reference.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import itertools
import logging

from rcsb.utils.apmc.ApmcExceptions import EmptyFamilyError, LimitExceededError, OrderUndefinedError, TooLargeError
from rcsb.utils.apmc.CutFamily import Cut, CutFamily, cutKey
from rcsb.utils.apmc.CutStructure import CutStructure

logger = logging.getLogger(__name__)


class WsInstance(object):
    """A Witness Superset instance with size bound k and optional family-size bound K."""

    def __init__(self, families, k, K=None):
        self.k = k
        self.K = K
        famL = []
        for idx, family in enumerate(families):
            memberL = []
            for member in family:
                member = frozenset(member)
                if member not in memberL:
                    memberL.append(member)
            if not memberL:
                raise EmptyFamilyError("family %d has no members" % idx)
            if K is not None and len(memberL) > K:
                raise LimitExceededError("family %d has %d members, bound is %d" % (idx, len(memberL), K))
            famL.append(tuple(memberL))
        self.families = tuple(famL)

    def universe(self):
        uS = set()
        for family in self.families:
            for member in family:
                uS |= member
        return frozenset(uS)

    def covers(self, wS):
        return all(any(member <= wS for member in family) for family in self.families)

    def isSolution(self, wS):
        wS = frozenset(wS)
        if len(wS) > self.k or not self.covers(wS):
            return False
        return not any(self.covers(wS - {x}) for x in wS)

    def __repr__(self):
        return "WsInstance(c=%d, k=%d, K=%r)" % (len(self.families), self.k, self.K)


class OrderedFamily(object):
    """Members of one branch family with their later-or-equal relation.

    laterMatrix[i][j] is True when members[i] is later than or equal to members[j].
    """

    def __init__(self, members, laterMatrix):
        self.members = [frozenset(member) for member in members]
        self.laterMatrix = laterMatrix

    @classmethod
    def fromBranch(cls, aId, family=None):
        """The singleton {aId} followed by the members of a latest family; the singleton is earlier than all."""
        cutL = list(family.cuts) if family is not None else []
        size = len(cutL) + 1
        laterMatrix = [[False] * size for _ in range(size)]
        for i in range(size):
            laterMatrix[i][0] = True
        for i in range(1, size):
            for j in range(1, size):
                laterMatrix[i][j] = family.atLeast(i - 1, j - 1)
        return cls([frozenset([aId])] + [cut.arcs for cut in cutL], laterMatrix)

    def containedIn(self, arcs):
        return [i for i, member in enumerate(self.members) if member <= arcs]


class WitnessSupersetSolver(object):
    def __init__(self, **kwargs):
        self.__maxUniverse = kwargs.get("maxUniverse", 18)

    def solvePruning(self, inst):
        """All witness sets by recursion with pruning over the families in input order.

        Args:
            inst (WsInstance): instance

        Returns:
            list: witness sets (frozenset), canonically sorted
        """
        families = inst.families
        numFam = len(families)
        k = inst.k
        foundS = set()
        stack = [(0, frozenset())]
        while stack:
            idx, cur = stack.pop()
            while idx < numFam and any(member <= cur for member in families[idx]):
                idx += 1
            if idx == numFam:
                foundS.add(cur)
                continue
            for member in families[idx]:
                nxt = cur | member
                if len(nxt) <= k:
                    stack.append((idx + 1, nxt))
        return sorted((wS for wS in foundS if not any(inst.covers(wS - {x}) for x in wS)), key=cutKey)

    def solveBruteForce(self, inst):
        """All witness sets by enumerating subsets of the instance universe.

        Raises:
            TooLargeError: when the universe exceeds the configured guard
        """
        universe = sorted(inst.universe())
        if len(universe) > self.__maxUniverse:
            raise TooLargeError("universe of %d elements exceeds guard %d" % (len(universe), self.__maxUniverse))
        resultL = []
        for size in range(0, inst.k + 1):
            for subset in itertools.combinations(universe, size):
                if inst.isSolution(subset):
                    resultL.append(frozenset(subset))
        return sorted(resultL, key=cutKey)

    def filterLatest(self, g, s, t, candidates, branchFamilies=None, k=None):
        """Keep the candidates with no strictly later candidate of smaller or equal size.

        With branchFamilies the later-relation is derived from the per-branch orders: M2 >= M1
        iff for every branch, each member inside M2 is later than or equal to each member inside M1.
        Without branchFamilies it is read from the target sides in g.

        Args:
            g (MultiDigraph): graph the candidates cut
            s (int): source
            t (int): target
            candidates (list): minimal s-t cuts as arc-id sets
            branchFamilies (list, optional): OrderedFamily per branch
            k (int, optional): size bound recorded on the result

        Raises:
            OrderUndefinedError: a candidate contains no member of some branch family

        Returns:
            CutFamily: latest family with its later-order
        """
        candL = []
        for arcs in candidates:
            arcs = frozenset(arcs)
            if arcs not in candL:
                candL.append(arcs)
        num = len(candL)
        if branchFamilies is not None:
            idxL = []
            for arcs in candL:
                rowL = []
                for xIdx, family in enumerate(branchFamilies):
                    iL = family.containedIn(arcs)
                    if not iL:
                        raise OrderUndefinedError("candidate %r covers no member of branch %d" % (sorted(arcs), xIdx))
                    rowL.append(iL)
                idxL.append(rowL)
            geM = [[all(family.laterMatrix[j][i] for xIdx, family in enumerate(branchFamilies) for j in idxL[p][xIdx] for i in idxL[q][xIdx]) for q in range(num)] for p in range(num)]
            cutL = [Cut(arcs) for arcs in candL]
        else:
            cs = CutStructure(g)
            cutL = [cs.makeCut(s, t, arcs) for arcs in candL]
            geM = [[cutL[p].laterThan(cutL[q]) for q in range(num)] for p in range(num)]
        keepL = []
        for q in range(num):
            if not any(geM[p][q] and not geM[q][p] and len(candL[p]) <= len(candL[q]) for p in range(num) if p != q):
                keepL.append(q)
        return CutFamily([cutL[q] for q in keepL], [[geM[p][q] for q in keepL] for p in keepL], kind=CutFamily.LATEST, k=k)
