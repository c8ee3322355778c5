##
# File:    testApmcRecursive.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#
#
##
"""
Tests for the divide-and-conquer all-pairs latest <=k-cut computation over tensor codewords.

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

from rcsb.utils.apmc.ApmcExceptions import CyclicGraphError, LimitExceededError
from rcsb.utils.apmc.ApmcIterative import ApmcIterative
from rcsb.utils.apmc.ApmcRecursive import ApmcRecursive, catalan, tensorDimension
from rcsb.utils.apmc.CutFamily import CutFamily
from rcsb.utils.apmc.CutStructure import CutStructure
from rcsb.utils.apmc.GraphIo import GraphIo
from rcsb.utils.apmc.InstanceGenerator import InstanceGenerator
from rcsb.utils.apmc.MultiDigraph import MultiDigraph

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class ApmcRecursiveTests(unittest.TestCase):
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

    def testTensorDimension(self):
        self.assertEqual([catalan(j) for j in range(6)], [1, 1, 2, 5, 14, 42])
        self.assertEqual(tensorDimension(1), 1)
        self.assertEqual(tensorDimension(2), 2)
        self.assertEqual(tensorDimension(3), 4)
        self.assertEqual(tensorDimension(4), 9)
        self.assertEqual(tensorDimension(4, maxK=4), 4)

    def testSmallGraphs(self):
        table = ApmcRecursive(k=2).allPairsLatestCuts(self.__path)
        self.assertEqual(table.valueMatrix(), [[None, 1, 1], [0, None, 1], [0, 0, None]])
        self.assertEqual(table.getFamily(0, 2).asLists(), [[1]])
        table = ApmcRecursive(k=2).allPairsLatestCuts(self.__diamond)
        self.assertEqual(table.getFamily(0, 3).asLists(), [[2, 3]])
        earliest = ApmcRecursive(k=2).allPairsEarliestCuts(self.__diamond)
        self.assertEqual(earliest.kind, CutFamily.EARLIEST)
        self.assertEqual(earliest.getFamily(0, 3).asLists(), [[0, 1]])
        g = GraphIo().readGraph(self.__graphPath)
        self.assertIsNone(ApmcRecursive(k=2).allPairsLatestCuts(g).firstDifference(ApmcIterative(k=2).allPairsLatestCuts(g)))
        self.assertEqual(ApmcRecursive(k=1).allPairsLatestCuts(MultiDigraph(1)).pairs(), [])

    def testFixToLatest(self):
        cs = CutStructure(self.__diamond)
        aR = ApmcRecursive(k=2)

        def lookup(y, t):
            return cs.latestCutsUpToK(y, t, 2)

        family = aR.fixToLatest(self.__diamond, 0, 3, cs.makeCut(0, 3, [0, 1]), 2, lookup, cutStructure=cs)
        self.assertEqual(family.asLists(), [[2, 3]])
        family = aR.fixToLatest(self.__path, 0, 2, CutStructure(self.__path).makeCut(0, 2, [0]), 2, lambda y, t: CutStructure(self.__path).latestCutsUpToK(y, t, 2))
        self.assertEqual(family.asLists(), [[1]])

    def testAgainstIterative(self):
        iG = InstanceGenerator()
        for seed in range(6):
            g = iG.randomDag(6, 10, seed, maxMult=2)
            for k in (1, 2):
                recTable = ApmcRecursive(k=k).allPairsLatestCuts(g)
                itTable = ApmcIterative(k=k).allPairsLatestCuts(g)
                self.assertIsNone(recTable.firstDifference(itTable), "seed %d k %d" % (seed, k))
                recEarliest = ApmcRecursive(k=k).allPairsEarliestCuts(g)
                itEarliest = ApmcIterative(k=k).allPairsEarliestCuts(g)
                self.assertIsNone(recEarliest.firstDifference(itEarliest), "seed %d k %d" % (seed, k))

    def testVertexCapacities(self):
        table = ApmcRecursive(k=2, vertexCapacities=True).allPairsLatestCuts(self.__diamond)
        self.assertEqual(table.valueMatrix(), ApmcIterative(k=2, vertexCapacities=True).allPairsLatestCuts(self.__diamond).valueMatrix())

    def testLimits(self):
        with self.assertRaises(LimitExceededError):
            ApmcRecursive(k=4, kLimit=3).allPairsLatestCuts(self.__diamond)
        with self.assertRaises(LimitExceededError):
            ApmcRecursive(kLimit=3).allPairsEarliestCuts(self.__diamond, k=5)
        with self.assertRaises(CyclicGraphError):
            ApmcRecursive(k=2).allPairsLatestCuts(MultiDigraph(2, [(0, 1), (1, 0)]))


def apmcRecursiveSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(ApmcRecursiveTests("testTensorDimension"))
    suiteSelect.addTest(ApmcRecursiveTests("testSmallGraphs"))
    suiteSelect.addTest(ApmcRecursiveTests("testFixToLatest"))
    suiteSelect.addTest(ApmcRecursiveTests("testAgainstIterative"))
    suiteSelect.addTest(ApmcRecursiveTests("testVertexCapacities"))
    suiteSelect.addTest(ApmcRecursiveTests("testLimits"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = apmcRecursiveSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
