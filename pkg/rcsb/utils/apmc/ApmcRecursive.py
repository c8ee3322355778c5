##
# File:    ApmcRecursive.py
# Author:  Dennis Piehl
# Date:    15-Oct-2026
#
# Updates:
#   17-Oct-2026  dwp Compute earliest cross families on the reversed graph with the halves swapped
#
# To Do:
##

"""
Divide-and-conquer all-pairs latest <=k-cuts on a DAG.

The topological order (padded to a power of two with isolated vertices) is halved
recursively. Families from the first half V1 into the second half V2 are assembled in two
matrix steps: the direct V1 -> V2 arcs are combined with the latest families inside V2,
then the earliest families inside V1 are combined with the result. Each step encodes the
families as tensor codewords, multiplies the two code matrices with the star product and
decodes every entry into the Witness Superset solutions whose smallest member is a
min-cut. The min-cut is then fixed to the full latest family through the late-covering
instance built on its arc heads.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging
import time

from rcsb.utils.apmc.ApmcExceptions import LimitExceededError
from rcsb.utils.apmc.ApmcTable import ApmcTable
from rcsb.utils.apmc.CodeMatrix import CodeMatrix
from rcsb.utils.apmc.CutFamily import CutFamily, cutKey
from rcsb.utils.apmc.CutStructure import CutStructure
from rcsb.utils.apmc.SuperimposedCode import FastCode
from rcsb.utils.apmc.TensorCodeword import TensorCodeword, WitnessDecoder
from rcsb.utils.apmc.WitnessSuperset import OrderedFamily, WitnessSupersetSolver, WsInstance

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger(__name__)


def catalan(j):
    num = 1
    for i in range(j):
        num = num * 2 * (2 * i + 1) // (i + 2)
    return num


def tensorDimension(k, maxK=None):
    """min(C_0 + ... + C_{k-1}, 4^k, maxK): the number of latest cuts of size at most k is bounded by the Catalan sum."""
    dim = min(sum(catalan(j - 1) for j in range(1, k + 1)), 4**k)
    return min(dim, maxK) if maxK is not None else dim


class ApmcRecursive(object):
    def __init__(self, **kwargs):
        """
        Args:
            k (int, optional): cut size bound. Defaults to 2.
            kLimit (int, optional): largest supported k. Defaults to 3.
            maxK (int, optional): cap on the tensor dimension K. Defaults to 4.
            vertexCapacities (bool, optional): vertex cuts through the vertex-splitting transform. Defaults to False.
        """
        self.__k = kwargs.get("k", 2)
        self.__kLimit = kwargs.get("kLimit", 3)
        self.__maxK = kwargs.get("maxK", 4)
        self.__vertexCapacities = kwargs.get("vertexCapacities", False)
        self.__solver = WitnessSupersetSolver(**kwargs)

    def allPairsLatestCuts(self, g, k=None):
        """Latest <=k-cut families for every ordered pair of the DAG g.

        The graph is padded with isolated vertices up to the next power of two rather than by a
        single vertex per odd level, so every block splits into equal halves. Isolated vertices
        change no family and are dropped from the returned table.

        Raises:
            CyclicGraphError: if g has a directed cycle
            LimitExceededError: if k exceeds kLimit or a family exceeds the tensor dimension

        Returns:
            ApmcTable: latest families
        """
        k = k if k is not None else self.__k
        if k > self.__kLimit:
            raise LimitExceededError("k=%d exceeds the configured limit %d" % (k, self.__kLimit))
        if self.__vertexCapacities:
            h = g.splitVertices()
            latD, _ = self.__run(h, k)
            table = ApmcTable(g.n, k)
            for s, t in table.pairs():
                table.setFamily(s, t, latD[(g.vOut(s), g.vIn(t))])
            return table
        latD, _ = self.__run(g, k)
        table = ApmcTable(g.n, k)
        for s, t in table.pairs():
            table.setFamily(s, t, latD[(s, t)])
        return table

    def allPairsEarliestCuts(self, g, k=None):
        k = k if k is not None else self.__k
        if k > self.__kLimit:
            raise LimitExceededError("k=%d exceeds the configured limit %d" % (k, self.__kLimit))
        h = g.splitVertices() if self.__vertexCapacities else g
        _, earD = self.__run(h, k)
        table = ApmcTable(g.n, k, kind=CutFamily.EARLIEST)
        for s, t in table.pairs():
            table.setFamily(s, t, earD[(g.vOut(s), g.vIn(t))] if self.__vertexCapacities else earD[(s, t)])
        return table

    def __run(self, g, k):
        startTime = time.time()
        order = g.topologicalOrder()
        size = 1
        while size < max(1, g.n):
            size *= 2
        h = g.padded(size)
        order = order + list(range(g.n, size))
        hRev = h.reverse()
        K = tensorDimension(k, self.__maxK)
        code = FastCode(k, max(2, h.arcIdBound()))
        logger.info("Recursive all-pairs n=%d (padded %d) m=%d k=%d K=%d code length q=%d", g.n, size, g.arcCount, k, K, code.q)
        latD, earD = {}, {}
        ctxD = {"h": h, "hRev": hRev, "k": k, "K": K, "code": code, "latD": latD, "earD": earD}
        ctxD["decoder"] = WitnessDecoder(code, 2 * K, k)
        self.__recurse(order, ctxD)
        for i, u in enumerate(order):
            for v in order[:i]:
                latD[(u, v)] = CutFamily.unreachable(kind=CutFamily.LATEST, k=k)
                earD[(u, v)] = CutFamily.unreachable(kind=CutFamily.EARLIEST, k=k)
        logger.info("Completed recursive all-pairs latest <=%d-cuts for n=%d (%.4f seconds)", k, g.n, time.time() - startTime)
        return latD, earD

    def __recurse(self, block, ctxD):
        if len(block) <= 1:
            return
        half = len(block) // 2
        first, second = block[:half], block[half:]
        self.__recurse(first, ctxD)
        self.__recurse(second, ctxD)
        latD, earD = ctxD["latD"], ctxD["earD"]

        def storeLatest(u, v, family):
            latD[(u, v)] = family

        def storeEarliest(u, v, family):
            earD[(v, u)] = CutFamily(family.cuts, family.orderMatrix, kind=CutFamily.EARLIEST, k=family.k)

        self.__combine(ctxD["h"], first, second, lambda u, v: latD[(u, v)], lambda u, v: earD[(u, v)], storeLatest, ctxD)
        self.__combine(ctxD["hRev"], list(reversed(second)), list(reversed(first)), lambda u, v: earD[(v, u)], lambda u, v: latD[(v, u)], storeEarliest, ctxD)
        logger.debug("Combined blocks of %d and %d vertices", len(first), len(second))

    def __encode(self, family, ctxD):
        """Absent (None) when unreachable, the full codeword when no <=k-cut exists."""
        if family.isUnreachable():
            return None
        if family.isEmpty():
            return TensorCodeword.full(ctxD["K"], ctxD["code"].q)
        return TensorCodeword.encodeFamily(ctxD["code"], ctxD["K"], family.arcSets())

    def __combine(self, h, first, second, latGet, earGet, store, ctxD):
        """Latest families from every vertex of first to every vertex of second in h.

        Args:
            h (MultiDigraph): graph whose order has first directly before second
            first (list): source block in topological order
            second (list): target block in topological order
            latGet (callable): (u, v) -> latest family for pairs inside second
            earGet (callable): (u, v) -> earliest family for pairs inside first
            store (callable): (u, v, family) receiving the cross families
        """
        k, K, code = ctxD["k"], ctxD["K"], ctxD["code"]
        q = code.q
        posD = {v: i for i, v in enumerate(first + second)}
        firstS = set(first)
        h1 = h.removeArcs(aId for aId, tail, head in h.arcs if tail in firstS and head in firstS)
        #
        # Step 1: direct arcs from first into second, then latest families inside second
        xM = CodeMatrix(first, second, K, q)
        for a in first:
            for w in second:
                arcs = h.arcsBetween(a, w)
                if len(arcs) > k:
                    xM.set(a, w, TensorCodeword.full(K, q))
                elif arcs:
                    xM.set(a, w, TensorCodeword.encodeFamily(code, K, [arcs]))
        yM = CodeMatrix(second, second, K, q)
        for w in second:
            for b in second:
                if w == b:
                    yM.set(w, b, TensorCodeword.full(K, q))
                elif posD[w] < posD[b]:
                    cw = self.__encode(latGet(w, b), ctxD)
                    if cw is not None:
                        yM.set(w, b, cw)
        zM = CodeMatrix.starProduct(xM, yM)
        cs1 = CutStructure(h1)
        lat1D = {}
        for a in first:
            for b in second:
                lat1D[(a, b)] = self.__decodeAndFix(h1, cs1, a, b, zM.entry(a, b), lambda y, t: latGet(y, t), ctxD)
        #
        # Step 2: earliest families inside first, then the step-1 families
        xM = CodeMatrix(first, first, K, q)
        for a in first:
            for v in first:
                if a == v:
                    xM.set(a, v, TensorCodeword.full(K, q))
                elif posD[a] < posD[v]:
                    cw = self.__encode(earGet(a, v), ctxD)
                    if cw is not None:
                        xM.set(a, v, cw)
        yM = CodeMatrix(first, second, K, q)
        for v in first:
            for b in second:
                cw = self.__encode(lat1D[(v, b)], ctxD)
                if cw is not None:
                    yM.set(v, b, cw)
        zM = CodeMatrix.starProduct(xM, yM)
        cs = CutStructure(h)
        crossD = {}

        def lookup(y, t):
            return crossD[(y, t)] if y in firstS else latGet(y, t)

        for a in reversed(first):
            for b in second:
                crossD[(a, b)] = self.__decodeAndFix(h, cs, a, b, zM.entry(a, b), lookup, ctxD)
                store(a, b, crossD[(a, b)])

    def __decodeAndFix(self, h, cs, s, t, cw, lookup, ctxD):
        k = ctxD["k"]
        if not h.reaches(s, t):
            return CutFamily.unreachable(kind=CutFamily.LATEST, k=k)
        solutionL = ctxD["decoder"].decodeWitness(cw)
        solutionL = [arcs for arcs in solutionL if cs.isCut(s, t, arcs)]
        if not solutionL:
            return CutFamily([], kind=CutFamily.LATEST, k=k)
        minCut = cs.makeCut(s, t, min(solutionL, key=cutKey))
        return self.fixToLatest(h, s, t, minCut, k, lookup, cutStructure=cs)

    def fixToLatest(self, h, s, t, minCut, k, lookup, cutStructure=None):
        """Latest s-t <=k-cuts from an s-t min-cut and the latest families of its arc heads.

        Every latest cut either keeps an arc of the min-cut or contains a latest cut from that
        arc's head; the Witness Superset solutions of these branches are the late-covering sets,
        from which the minimal cuts with no later cut of smaller or equal size are kept.

        Args:
            h (MultiDigraph): graph
            s (int): source
            t (int): target
            minCut (Cut): an s-t min-cut with at most k arcs
            k (int): size bound
            lookup (callable): (y, t) -> latest y-t <=k family
            cutStructure (CutStructure, optional): cached structure of h

        Returns:
            CutFamily: latest s-t <=k-cuts
        """
        cs = cutStructure if cutStructure is not None else CutStructure(h)
        branchL = []
        for aId in sorted(minCut.arcs):
            y = h.head(aId)
            branchL.append(OrderedFamily.fromBranch(aId, None if y == t else lookup(y, t)))
        solutionL = self.__solver.solvePruning(WsInstance([branch.members for branch in branchL], k))
        candidateL = [arcs for arcs in solutionL if cs.isMinimal(s, t, arcs)]
        return self.__solver.filterLatest(h, s, t, candidateL, branchFamilies=None, k=k)
