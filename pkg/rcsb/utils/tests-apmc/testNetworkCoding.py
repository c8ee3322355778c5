##
# File:    testNetworkCoding.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#
#
##
"""
Tests for randomized k-bounded connectivity by network coding over GF(p).

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

from rcsb.utils.apmc.ApmcExceptions import SingularMatrixError
from rcsb.utils.apmc.FlowOracle import FlowOracle
from rcsb.utils.apmc.InstanceGenerator import InstanceGenerator
from rcsb.utils.apmc.MultiDigraph import MultiDigraph
from rcsb.utils.apmc.NetworkCoding import FieldMatrix, NetworkCoding

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class NetworkCodingTests(unittest.TestCase):
    def setUp(self):
        self.__path = MultiDigraph(3, [(0, 1), (1, 2)])
        self.__diamond = MultiDigraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testFieldMatrix(self):
        nC = NetworkCoding(prime=101)
        field = nC.field
        eye = FieldMatrix.identity(field, 3)
        self.assertEqual(eye.rank(), 3)
        self.assertEqual(eye.order, 101)
        self.assertEqual(FieldMatrix.zeros(field, 2, 3).rank(), 0)
        self.assertEqual(eye.submatrix([0, 2], [2]).toList(), [[0], [1]])
        self.assertEqual(eye.submatrix([], [1]).shape, (0, 1))
        m = FieldMatrix(field, [[1, 2], [2, 4]])
        self.assertEqual(m.rank(), 1)
        self.assertEqual((m @ eye.submatrix([0, 1], [0, 1])), m)
        self.assertEqual((m - m).toList(), [[0, 0], [0, 0]])
        self.assertEqual(FieldMatrix(field, [[100]]).entry(0, 0), 100)

    def testInversion(self):
        nC = NetworkCoding(prime=101)
        kM = nC.buildVertexCoefficients(self.__path, 3)
        self.assertEqual(kM.shape, (3, 3))
        self.assertEqual(kM.entry(1, 0), 0)
        self.assertEqual(kM.entry(0, 2), 0)
        fInv = nC.invertIMinusK(kM)
        self.assertEqual((FieldMatrix.identity(nC.field, 3) - kM) @ fInv, FieldMatrix.identity(nC.field, 3))
        self.assertEqual(nC.invertIMinusK(FieldMatrix.zeros(nC.field, 2, 2)), FieldMatrix.identity(nC.field, 2))
        with self.assertRaises(SingularMatrixError):
            nC.invertIMinusK(FieldMatrix.identity(nC.field, 2))
        self.assertEqual(nC.invertIMinusK(FieldMatrix.zeros(nC.field, 0, 0)).shape, (0, 0))

    def testPairRank(self):
        nC = NetworkCoding()
        fInv = nC.invertIMinusK(nC.buildVertexCoefficients(self.__diamond, 11))
        self.assertEqual(nC.pairRank(fInv, self.__diamond, 0, 3), 2)
        with self.assertRaises(ValueError):
            nC.pairRank(fInv, self.__diamond, 1, 1)

    def testSmallGraphs(self):
        nC = NetworkCoding()
        self.assertEqual(nC.kstmvc(self.__path, [0], [2], 3, seed=1).value(0, 2), 1)
        report = nC.kapmvc(self.__diamond, 1, seed=1)
        self.assertEqual(report.value(0, 3), 1)
        self.assertEqual(report.value(3, 0), 0)
        report = nC.kapmvc(self.__diamond, 3, seed=1)
        self.assertEqual(report.value(0, 3), 2)
        self.assertEqual(len(report.pairs()), 12)
        self.assertEqual(report.toDict()["values"]["0->3"], 2)
        self.assertEqual(report.retries, 0)
        # parallel arcs are separate paths
        self.assertEqual(nC.kapmvc(MultiDigraph(2, [(0, 1), (0, 1)]), 3, seed=2).value(0, 1), 2)
        self.assertEqual(nC.kapmvc(MultiDigraph(0), 2).pairs(), [])
        with self.assertRaises(ValueError):
            nC.kstmvc(self.__path, [], [2], 2)
        with self.assertRaises(ValueError):
            nC.kstmvc(self.__path, [0], [2], 0)

    def testAgainstFlowOracle(self):
        iG = InstanceGenerator()
        nC = NetworkCoding()
        numMismatch = 0
        for seed in range(30):
            g = iG.randomDigraph(6, 12, seed, maxMult=2)
            fO = FlowOracle(g)
            for k in (1, 2, 3):
                expectD = {(s, t): fO.vertexConnectivityBounded(s, t, k) for s in range(g.n) for t in range(g.n) if s != t}
                if nC.kapmvc(g, k, seed=seed).valueD != expectD:
                    numMismatch += 1
                    self.assertEqual(nC.kapmvc(g, k, seed=seed + 7919).valueD, expectD, "seed %d k %d" % (seed, k))
        self.assertLessEqual(numMismatch, 1)

    def testArcCapacities(self):
        iG = InstanceGenerator()
        nC = NetworkCoding(arcCapacities=True)
        for seed in range(10):
            g = iG.randomDigraph(5, 10, seed, maxMult=2)
            nxG = nx.DiGraph()
            nxG.add_nodes_from(range(g.n))
            for _, tail, head in g.arcs:
                if nxG.has_edge(tail, head):
                    nxG[tail][head]["capacity"] += 1
                else:
                    nxG.add_edge(tail, head, capacity=1)
            report = nC.kapmvc(g, 3, seed=seed)
            for s, t in report.pairs():
                self.assertEqual(report.value(s, t), min(3, nx.maximum_flow_value(nxG, s, t)), "seed %d pair (%d, %d)" % (seed, s, t))


def networkCodingSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(NetworkCodingTests("testFieldMatrix"))
    suiteSelect.addTest(NetworkCodingTests("testInversion"))
    suiteSelect.addTest(NetworkCodingTests("testPairRank"))
    suiteSelect.addTest(NetworkCodingTests("testSmallGraphs"))
    suiteSelect.addTest(NetworkCodingTests("testAgainstFlowOracle"))
    suiteSelect.addTest(NetworkCodingTests("testArcCapacities"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = networkCodingSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
