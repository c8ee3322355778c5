##
# File:    testApmcIterative.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#   19-Oct-2026  dwp Add vertex relabelling, repeat-run and gated n=200 timing checks
#
#
##
"""
Tests for the reverse-topological all-pairs latest <=k-cut computation and the result table.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging
import os
import platform
import resource
import time
import unittest

import networkx as nx
import numpy as np

from rcsb.utils.apmc.ApmcExceptions import CyclicGraphError, GraphFormatError
from rcsb.utils.apmc.ApmcIterative import ApmcIterative
from rcsb.utils.apmc.ApmcTable import ApmcTable
from rcsb.utils.apmc.CutFamily import CutFamily
from rcsb.utils.apmc.CutStructure import CutStructure
from rcsb.utils.apmc.GraphIo import GraphIo
from rcsb.utils.apmc.InstanceGenerator import InstanceGenerator
from rcsb.utils.apmc.MultiDigraph import MultiDigraph

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class ApmcIterativeTests(unittest.TestCase):
    runScaleTest = False

    def setUp(self):
        self.__path = MultiDigraph(3, [(0, 1), (1, 2)])
        self.__diamond = MultiDigraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        self.__graphPath = os.path.join(HERE, "test-data", "diamond-path.graph")
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testPathAndDiamond(self):
        table = ApmcIterative(k=2).allPairsLatestCuts(self.__path)
        self.assertEqual(table.valueMatrix(), [[None, 1, 1], [0, None, 1], [0, 0, None]])
        self.assertEqual(table.getFamily(0, 2).asLists(), [[1]])
        self.assertTrue(table.getFamily(2, 0).isUnreachable())
        #
        table = ApmcIterative(k=1).allPairsLatestCuts(self.__diamond)
        self.assertEqual(table.value(0, 3), ApmcTable.ABOVE_K)
        self.assertTrue(table.getFamily(0, 3).isEmpty())
        table = ApmcIterative(k=2).allPairsLatestCuts(self.__diamond)
        self.assertEqual(table.value(0, 3), 2)
        self.assertEqual(table.getFamily(0, 3).asLists(), [[2, 3]])
        self.assertIsNone(table.value(3, 3))
        earliest = ApmcIterative(k=2).allPairsEarliestCuts(self.__diamond)
        self.assertEqual(earliest.kind, CutFamily.EARLIEST)
        self.assertEqual(earliest.getFamily(0, 3).asLists(), [[0, 1]])
        self.assertEqual(earliest.getFamily(1, 3).asLists(), [[2]])

    def testTableFormatting(self):
        g = GraphIo().readGraph(self.__graphPath)
        table = ApmcIterative(k=1).allPairsLatestCuts(g)
        lineL = table.formatValueLines()
        self.assertEqual(lineL[0], "-\t1\t1\t>1\t1\t1")
        self.assertEqual(lineL[5], "0\t0\t0\t0\t0\t-")
        witnessD = table.witnessDict()
        self.assertEqual(witnessD["0->5"], [[5]])
        self.assertEqual(witnessD["0->3"], [])
        self.assertEqual(witnessD["5->0"], [[]])
        rebuilt = ApmcTable.fromWitnessDict(g.n, 1, witnessD)
        self.assertEqual(rebuilt, table)
        with self.assertRaises(GraphFormatError):
            ApmcTable.fromWitnessDict(g.n, 1, {"0-3": [[1]]})
        with self.assertRaises(ValueError):
            table.setFamily(1, 1, CutFamily([]))

    def testTreeGadget(self):
        g, s, t = InstanceGenerator().treeGadget(3, 5)
        table = ApmcIterative(k=4).allPairsLatestCuts(g)
        self.assertEqual(table.value(s, t), 2)
        self.assertEqual(table.getFamily(s, t).sizeCounts(), {2: 1, 3: 2, 4: 5})
        # five parallel leaf arcs exceed every bound up to 4
        self.assertEqual(table.value(7, t), ApmcTable.ABOVE_K)
        self.assertEqual(ApmcIterative(k=3).allPairsLatestCuts(g).getFamily(s, t).sizeCounts(), {2: 1, 3: 2})
        self.assertEqual(ApmcIterative(k=2).allPairsLatestCuts(g).getFamily(s, t).asLists(), [[0, 1]])

    def testAgainstFlowAndClosure(self):
        iG = InstanceGenerator()
        for seed in range(8):
            g = iG.randomDag(7, 14, seed, maxMult=3)
            nxG = nx.DiGraph()
            nxG.add_nodes_from(range(g.n))
            for _, tail, head in g.arcs:
                nxG.add_edge(tail, head, capacity=nxG[tail][head]["capacity"] + 1 if nxG.has_edge(tail, head) else 1)
            cs = CutStructure(g)
            for k in (1, 2, 3):
                table = ApmcIterative(k=k).allPairsLatestCuts(g)
                for s, t in table.pairs():
                    flowValue = nx.maximum_flow_value(nxG, s, t)
                    self.assertEqual(table.value(s, t), flowValue if flowValue <= k else ApmcTable.ABOVE_K, "seed %d k %d pair (%d, %d)" % (seed, k, s, t))
                    self.assertTrue(table.getFamily(s, t).sameCuts(cs.latestCutsUpToK(s, t, k)), "seed %d k %d pair (%d, %d)" % (seed, k, s, t))
                    for cut in table.getFamily(s, t):
                        self.assertTrue(ApmcIterative.isValidWitness(g, s, t, cut))

    def testMonotoneInK(self):
        iG = InstanceGenerator()
        for seed in range(5):
            g = iG.randomDag(8, 16, seed, maxMult=2)
            table3 = ApmcIterative(k=3).allPairsLatestCuts(g)
            table2 = ApmcIterative(k=2).allPairsLatestCuts(g)
            self.assertIsNone(table3.restrict(2).firstDifference(table2))

    def testVertexCapacities(self):
        table = ApmcIterative(k=2, vertexCapacities=True).allPairsLatestCuts(self.__diamond)
        self.assertEqual(table.value(0, 3), 2)
        self.assertEqual(table.value(0, 1), 1)
        self.assertEqual(table.value(3, 0), 0)
        table = ApmcIterative(k=2, vertexCapacities=True).allPairsLatestCuts(GraphIo().readGraph(self.__graphPath))
        self.assertEqual(table.value(0, 5), 1)
        earliest = ApmcIterative(k=2, vertexCapacities=True).allPairsEarliestCuts(self.__diamond)
        self.assertEqual(earliest.value(0, 3), 2)

    def testVertexRelabelling(self):
        iG = InstanceGenerator()
        rng = np.random.default_rng(31)
        for seed in range(6):
            g = iG.randomDag(8, 16, seed, maxMult=2)
            permL = [int(v) for v in rng.permutation(g.n)]
            h = MultiDigraph(g.n, [(permL[tail], permL[head]) for _, tail, head in g.arcs], [aId for aId, _, _ in g.arcs])
            for k in (1, 2):
                gTable = ApmcIterative(k=k).allPairsLatestCuts(g)
                hTable = ApmcIterative(k=k).allPairsLatestCuts(h)
                for s, t in gTable.pairs():
                    self.assertEqual(hTable.value(permL[s], permL[t]), gTable.value(s, t), "seed %d k %d pair (%d, %d)" % (seed, k, s, t))
                    self.assertTrue(hTable.getFamily(permL[s], permL[t]).sameCuts(gTable.getFamily(s, t)), "seed %d k %d pair (%d, %d)" % (seed, k, s, t))

    def testRepeatedRunsAgree(self):
        g = InstanceGenerator().randomDag(40, 120, 3)
        table = ApmcIterative(k=2).allPairsLatestCuts(g)
        self.assertEqual(ApmcIterative(k=2).allPairsLatestCuts(g), table)
        self.assertEqual(ApmcIterative(k=2).allPairsLatestCuts(InstanceGenerator().randomDag(40, 120, 3)), table)

    @unittest.skipUnless(runScaleTest, "Skip the n=200 timing run")
    def testScale(self):
        g = InstanceGenerator().randomDag(200, 800, 11)
        startTime = time.time()
        table = ApmcIterative(k=2).allPairsLatestCuts(g)
        elapsed = time.time() - startTime
        logger.info("Iterative k=2 on n=%d m=%d (%.4f seconds)", g.n, g.arcCount, elapsed)
        self.assertLess(elapsed, 10.0)
        self.assertEqual(ApmcIterative(k=2).allPairsLatestCuts(g), table)

    def testCyclicInput(self):
        with self.assertRaises(CyclicGraphError):
            ApmcIterative(k=2).allPairsLatestCuts(MultiDigraph(2, [(0, 1), (1, 0)]))


def apmcIterativeSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(ApmcIterativeTests("testPathAndDiamond"))
    suiteSelect.addTest(ApmcIterativeTests("testTableFormatting"))
    suiteSelect.addTest(ApmcIterativeTests("testTreeGadget"))
    suiteSelect.addTest(ApmcIterativeTests("testAgainstFlowAndClosure"))
    suiteSelect.addTest(ApmcIterativeTests("testMonotoneInK"))
    suiteSelect.addTest(ApmcIterativeTests("testVertexCapacities"))
    suiteSelect.addTest(ApmcIterativeTests("testVertexRelabelling"))
    suiteSelect.addTest(ApmcIterativeTests("testRepeatedRunsAgree"))
    suiteSelect.addTest(ApmcIterativeTests("testScale"))
    suiteSelect.addTest(ApmcIterativeTests("testCyclicInput"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = apmcIterativeSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
