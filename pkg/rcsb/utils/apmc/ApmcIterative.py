##
# File:    ApmcIterative.py
# Author:  Dennis Piehl
# Date:    14-Oct-2026
#
# Updates:
#
# To Do:
##

"""
All-pairs latest <=k-cuts on a DAG by dynamic programming in reverse topological order.

For a source v and a later target t, each arc a = (v, y) contributes the branch family
{a} plus the latest y-t <=k-cuts; the latest v-t <=k-cuts are the Witness Superset
solutions of these branches, filtered by the later-order induced from the branch orders.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging
import time

from rcsb.utils.apmc.ApmcTable import ApmcTable
from rcsb.utils.apmc.CutFamily import Cut, CutFamily
from rcsb.utils.apmc.WitnessSuperset import OrderedFamily, WitnessSupersetSolver, WsInstance

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger(__name__)


class ApmcIterative(object):
    def __init__(self, **kwargs):
        """
        Args:
            k (int, optional): cut size bound. Defaults to 2.
            vertexCapacities (bool, optional): compute vertex cuts through the vertex-splitting transform. Defaults to False.
        """
        self.__k = kwargs.get("k", 2)
        self.__vertexCapacities = kwargs.get("vertexCapacities", False)
        self.__solver = WitnessSupersetSolver(**kwargs)

    def allPairsLatestCuts(self, g, k=None):
        """Latest <=k-cut families for every ordered pair of the DAG g.

        Raises:
            CyclicGraphError: if g has a directed cycle

        Returns:
            ApmcTable: latest families with their later-orders
        """
        k = k if k is not None else self.__k
        if self.__vertexCapacities:
            return self.__vertexTable(g, k, self.__latestD(g.splitVertices(), k), CutFamily.LATEST)
        return self.__toTable(g.n, k, self.__latestD(g, k), CutFamily.LATEST)

    def allPairsEarliestCuts(self, g, k=None):
        """Earliest <=k-cut families, from the latest families of the reversed graph."""
        k = k if k is not None else self.__k
        h = g.splitVertices() if self.__vertexCapacities else g
        rLatD = self.__latestD(h.reverse(), k)
        earD = {(s, t): CutFamily(family.cuts, family.orderMatrix, kind=CutFamily.EARLIEST, k=k) for (t, s), family in rLatD.items()}
        if self.__vertexCapacities:
            return self.__vertexTable(g, k, earD, CutFamily.EARLIEST)
        return self.__toTable(g.n, k, earD, CutFamily.EARLIEST)

    def latestFamilies(self, g, k=None):
        """The raw pair dictionary (s, t) -> CutFamily for arc cuts of g."""
        return self.__latestD(g, k if k is not None else self.__k)

    def __toTable(self, n, k, familyD, kind):
        table = ApmcTable(n, k, kind=kind)
        for (s, t), family in familyD.items():
            table.setFamily(s, t, family)
        return table

    def __vertexTable(self, g, k, familyD, kind):
        table = ApmcTable(g.n, k, kind=kind)
        for s in range(g.n):
            for t in range(g.n):
                if s != t:
                    table.setFamily(s, t, familyD[(g.vOut(s), g.vIn(t))])
        return table

    def __latestD(self, g, k):
        startTime = time.time()
        order = g.topologicalOrder()
        reach = g.reachBitsets(order)
        latD = {}
        numSolutions = 0
        for pos in range(len(order) - 1, -1, -1):
            v = order[pos]
            for t in order[:pos]:
                latD[(v, t)] = CutFamily.unreachable(kind=CutFamily.LATEST, k=k)
            for t in order[pos + 1 :]:
                if not (reach[v] >> t) & 1:
                    latD[(v, t)] = CutFamily.unreachable(kind=CutFamily.LATEST, k=k)
                    continue
                branchL = []
                for aId in g.outArcs(v):
                    y = g.head(aId)
                    if y == t:
                        branchL.append(OrderedFamily.fromBranch(aId))
                    elif (reach[y] >> t) & 1:
                        branchL.append(OrderedFamily.fromBranch(aId, latD[(y, t)]))
                solutionL = self.__solver.solvePruning(WsInstance([branch.members for branch in branchL], k))
                numSolutions += len(solutionL)
                latD[(v, t)] = self.__solver.filterLatest(g, v, t, solutionL, branchFamilies=branchL, k=k)
        logger.info("Completed latest <=%d-cuts for n=%d m=%d (%d candidate solutions) (%.4f seconds)", k, g.n, g.arcCount, numSolutions, time.time() - startTime)
        return latD

    @staticmethod
    def isValidWitness(g, s, t, cut):
        """A reported cut disconnects t from s and every arc of it is needed."""
        arcs = cut.arcs if isinstance(cut, Cut) else frozenset(cut)
        if g.reaches(s, t, arcs):
            return False
        return all(g.reaches(s, t, arcs - {aId}) for aId in arcs)
