##
# File:    testFlowOracle.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#   19-Oct-2026  dwp Add relabelling, brute-force extremality and vertex-splitting checks
#
#
##
"""
Tests for bounded augmenting-path flows, extremal min-cuts and brute-force enumeration.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import itertools
import logging
import os
import platform
import resource
import time
import unittest

import networkx as nx
import numpy as np

from rcsb.utils.apmc.ApmcExceptions import TooLargeError
from rcsb.utils.apmc.FlowOracle import FlowOracle
from rcsb.utils.apmc.FourPartiteGraph import FourPartiteGraph
from rcsb.utils.apmc.GraphIo import GraphIo
from rcsb.utils.apmc.InstanceGenerator import InstanceGenerator
from rcsb.utils.apmc.MultiDigraph import MultiDigraph

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


def toNetworkx(g):
    """Capacitated DiGraph with one unit of capacity per parallel arc."""
    nxG = nx.DiGraph()
    nxG.add_nodes_from(range(g.n))
    for _, tail, head in g.arcs:
        if nxG.has_edge(tail, head):
            nxG[tail][head]["capacity"] += 1
        else:
            nxG.add_edge(tail, head, capacity=1)
    return nxG


def vertexConnectivityBruteForce(g, s, t):
    """Direct s-t arcs plus the smallest set of inner vertices whose removal separates s from t."""
    directS = set(g.arcsBetween(s, t))
    innerL = [v for v in range(g.n) if v not in (s, t)]
    for size in range(len(innerL) + 1):
        for removed in itertools.combinations(innerL, size):
            blocked = set(directS)
            for v in removed:
                blocked.update(g.inArcs(v))
                blocked.update(g.outArcs(v))
            if not g.reaches(s, t, blocked):
                return len(directS) + size
    return len(directS) + len(innerL)


class FlowOracleTests(unittest.TestCase):
    def setUp(self):
        self.__graphPath = os.path.join(HERE, "test-data", "diamond-path.graph")
        self.__g = GraphIo().readGraph(self.__graphPath)
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testBoundedFlow(self):
        fO = FlowOracle(self.__g)
        self.assertEqual(fO.maxFlowBounded(0, 3, 5).value, 2)
        self.assertEqual(fO.maxFlowBounded(0, 3, 1).value, 1)
        self.assertEqual(fO.minCutValue(0, 5), 1)
        self.assertEqual(fO.minCutValue(5, 0), 0)
        multi = FlowOracle(MultiDigraph(2, [(0, 1)] * 3))
        self.assertEqual(multi.maxFlowBounded(0, 1, 2).value, 2)
        self.assertEqual(multi.minCutValue(0, 1), 3)
        with self.assertRaises(ValueError):
            fO.maxFlowBounded(1, 1, 2)
        with self.assertRaises(ValueError):
            fO.maxFlowBounded(0, 1, 0)

    def testExtremalMinCuts(self):
        fO = FlowOracle(self.__g)
        latest = fO.latestMinCut(0, 5)
        self.assertEqual(latest.asList(), [5])
        self.assertEqual(latest.targetSide, frozenset([5]))
        self.assertEqual(fO.earliestMinCut(0, 5).asList(), [4])
        self.assertEqual(fO.latestMinCut(0, 3).asList(), [2, 3])
        self.assertEqual(fO.earliestMinCut(0, 3).asList(), [0, 1])
        self.assertEqual(fO.latestMinCut(5, 0).asList(), [])

    def testBruteForce(self):
        fO = FlowOracle(self.__g)
        cutL = fO.minimalCutsBruteForce(0, 3, 2)
        self.assertEqual(sorted(cut.asList() for cut in cutL), [[0, 1], [0, 3], [1, 2], [2, 3]])
        earliest, latest = fO.enumerateExtremalCutsBruteForce(0, 3, 2)
        self.assertEqual(earliest.asLists(), [[0, 1]])
        self.assertEqual(latest.asLists(), [[2, 3]])
        earliest, latest = fO.enumerateExtremalCutsBruteForce(0, 3, 1)
        self.assertTrue(earliest.isEmpty())
        self.assertTrue(latest.isEmpty())
        with self.assertRaises(TooLargeError):
            FlowOracle(self.__g, maxBruteForceArcs=3).minimalCutsBruteForce(0, 3, 2)

    def testVertexConnectivity(self):
        fO = FlowOracle(self.__g)
        self.assertEqual(fO.vertexConnectivityBounded(0, 3, 5), 2)
        self.assertEqual(fO.vertexConnectivityBounded(0, 5, 5), 1)
        self.assertEqual(fO.vertexConnectivityBounded(0, 3, 1), 1)
        self.assertEqual(fO.vertexConnectivityBounded(5, 0, 3), 0)

    def testAgainstNetworkx(self):
        iG = InstanceGenerator()
        for seed in range(10):
            g = iG.randomDag(8, 18, seed, maxMult=3)
            nxG = toNetworkx(g)
            fO = FlowOracle(g)
            for s in range(g.n):
                for t in range(g.n):
                    if s != t:
                        self.assertEqual(fO.minCutValue(s, t), nx.maximum_flow_value(nxG, s, t), "seed %d pair (%d, %d)" % (seed, s, t))

    def testLatestMinCutRelabelledArcs(self):
        iG = InstanceGenerator()
        rng = np.random.default_rng(29)
        for seed in range(10):
            g = iG.randomDigraph(6, 12, seed, maxMult=2) if seed % 2 else iG.randomDag(6, 12, seed, maxMult=2)
            arcL = list(g.arcs)
            permL = [int(idx) for idx in rng.permutation(len(arcL))]
            newIdL = [int(aId) for aId in rng.permutation(len(arcL)) + 100]
            # arc arcL[i] is renamed newIdL[i] and the arcs are listed in permuted order
            h = MultiDigraph(g.n, [arcL[i][1:] for i in permL], [newIdL[i] for i in permL])
            backD = {newIdL[i]: arcL[i][0] for i in range(len(arcL))}
            fG, fH = FlowOracle(g), FlowOracle(h)
            for s in range(g.n):
                for t in range(g.n):
                    if s == t:
                        continue
                    self.assertEqual(frozenset(backD[aId] for aId in fH.latestMinCut(s, t).arcs), fG.latestMinCut(s, t).arcs, "seed %d pair (%d, %d)" % (seed, s, t))
                    self.assertEqual(frozenset(backD[aId] for aId in fH.earliestMinCut(s, t).arcs), fG.earliestMinCut(s, t).arcs, "seed %d pair (%d, %d)" % (seed, s, t))

    def testExtremalMinCutsAgainstBruteForce(self):
        iG = InstanceGenerator()
        for seed in range(12):
            g = iG.randomDigraph(6, 11, seed, maxMult=2) if seed % 2 else iG.randomDag(6, 11, seed, maxMult=2)
            fO = FlowOracle(g)
            for s in range(g.n):
                for t in range(g.n):
                    if s == t or not g.reaches(s, t):
                        continue
                    value = fO.minCutValue(s, t)
                    if value > 3:
                        continue
                    latest, earliest = fO.latestMinCut(s, t), fO.earliestMinCut(s, t)
                    self.assertEqual((latest.size, earliest.size), (value, value))
                    minCutL = [cut for cut in fO.minimalCutsBruteForce(s, t, value) if cut.size == value]
                    self.assertIn(latest, minCutL)
                    for cut in minCutL:
                        self.assertTrue(latest.laterThan(cut), "seed %d pair (%d, %d) cut %r" % (seed, s, t, cut))
                        self.assertTrue(earliest.earlierThan(cut), "seed %d pair (%d, %d) cut %r" % (seed, s, t, cut))

    def testSplitVerticesAgainstSeparators(self):
        iG = InstanceGenerator()
        for seed in range(100):
            n = 4 + seed % 4
            g = iG.randomDigraph(n, min(n * (n - 1), 2 * n), seed, maxMult=1 + seed % 2)
            fO = FlowOracle(g)
            h = g.splitVertices()
            for s in range(g.n):
                for t in range(g.n):
                    if s == t:
                        continue
                    expected = vertexConnectivityBruteForce(g, s, t)
                    self.assertEqual(FlowOracle(h).minCutValue(g.vOut(s), g.vIn(t)), expected, "seed %d pair (%d, %d)" % (seed, s, t))
                    self.assertEqual(fO.vertexConnectivityBounded(s, t, 2), min(2, expected), "seed %d pair (%d, %d)" % (seed, s, t))

    def testFind4Clique(self):
        self.assertEqual(FlowOracle.find4CliqueBruteForce(FourPartiteGraph.complete(2)), (0, 0, 0, 0))
        self.assertIsNone(FlowOracle.find4CliqueBruteForce(FourPartiteGraph(2)))
        g4 = FourPartiteGraph.complete(1).withEdge("BD", 0, 0, False)
        self.assertIsNone(FlowOracle.find4CliqueBruteForce(g4))


def flowOracleSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(FlowOracleTests("testBoundedFlow"))
    suiteSelect.addTest(FlowOracleTests("testExtremalMinCuts"))
    suiteSelect.addTest(FlowOracleTests("testBruteForce"))
    suiteSelect.addTest(FlowOracleTests("testVertexConnectivity"))
    suiteSelect.addTest(FlowOracleTests("testAgainstNetworkx"))
    suiteSelect.addTest(FlowOracleTests("testLatestMinCutRelabelledArcs"))
    suiteSelect.addTest(FlowOracleTests("testExtremalMinCutsAgainstBruteForce"))
    suiteSelect.addTest(FlowOracleTests("testSplitVerticesAgainstSeparators"))
    suiteSelect.addTest(FlowOracleTests("testFind4Clique"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = flowOracleSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
