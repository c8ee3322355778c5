##
# File:    testCliqueReduction.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#
#
##
"""
Tests for the 4-Clique reductions to all-pairs vertex connectivity on layered DAGs.

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

from rcsb.utils.apmc.CliqueReduction import CliqueReduction, netcodingSolver, oracleSolver
from rcsb.utils.apmc.FlowOracle import FlowOracle
from rcsb.utils.apmc.FourPartiteGraph import FourPartiteGraph
from rcsb.utils.apmc.InstanceGenerator import InstanceGenerator

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class CliqueReductionTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testSingleVertexSides(self):
        cR = CliqueReduction()
        g4 = FourPartiteGraph.complete(1)
        h = cR.buildH(g4)
        self.assertEqual(h.n, 4)
        self.assertEqual(sorted((tail, head) for _, tail, head in h.arcs), [(0, 1), (1, 2), (2, 3)])
        self.assertEqual(cR.estimates(g4).value(0, 0), 0)
        self.assertEqual(cR.connectivities(g4), {(0, 0): 1})
        self.assertEqual(cR.cliqueEdges(g4), [(0, 0)])
        self.assertTrue(cR.decideUnbounded(g4))
        # without {b, d} the 2-hop path a-b-d replaces the clique path
        g4 = g4.withEdge("BD", 0, 0, False)
        self.assertEqual(cR.estimates(g4).value(0, 0), 1)
        self.assertEqual(cR.connectivities(g4), {(0, 0): 1})
        self.assertEqual(cR.cliqueEdges(g4), [])
        self.assertFalse(cR.decideUnbounded(g4))

    def testEstimates(self):
        g4 = FourPartiteGraph(2)
        est = CliqueReduction().estimates(g4)
        # no edges at all: every b misses d and every c misses a, but no a-b or c-d edge exists
        self.assertEqual(est.matrix().tolist(), [[0, 0], [0, 0]])
        g4 = FourPartiteGraph.complete(2).withEdge("AC", 0, 1, False)
        est = CliqueReduction().estimates(g4)
        self.assertEqual(est.value(0, 0), 1)
        self.assertEqual(est.value(1, 1), 0)
        self.assertEqual(est.toDict()["cCounts"], [[1, 1], [0, 0]])
        self.assertEqual(est.nPerSide, 2)

    def testDecisions(self):
        cR = CliqueReduction()
        self.assertTrue(cR.decideUnbounded(FourPartiteGraph.complete(2)))
        self.assertFalse(cR.decideUnbounded(FourPartiteGraph(2)))
        self.assertTrue(cR.decideBounded(FourPartiteGraph.complete(2), 1))
        self.assertTrue(cR.decideBounded(FourPartiteGraph.complete(3), 2))
        self.assertFalse(cR.decideBounded(FourPartiteGraph(3), 2))
        iG = InstanceGenerator()
        for seed in range(12):
            g4 = iG.randomFourPartite(3, 0.6, seed)
            expected = FlowOracle.find4CliqueBruteForce(g4) is not None
            self.assertEqual(cR.decideUnbounded(g4), expected, "seed %d" % seed)
            self.assertEqual(cR.decideBounded(g4, 2), expected, "seed %d" % seed)
            self.assertEqual(cR.decideBounded(g4, 3), expected, "seed %d" % seed)

    def testBoundedInstance(self):
        cR = CliqueReduction()
        g4 = FourPartiteGraph.complete(4)
        h = cR.buildHBounded(g4, 2, 1, 0)
        self.assertEqual(h.n, 16)
        # copy x=0 of the second vertex of A_1 reaches B only inside block B_0
        self.assertEqual(h.outNeighbors(1), [4, 5])
        pairL = [(1, 12), (1, 14), (3, 12), (3, 14)]
        valueD = oracleSolver(h, pairL, 5)
        self.assertTrue(all(val <= 4 for val in valueD.values()))
        with self.assertRaises(ValueError):
            cR.buildHBounded(g4, 3, 0, 0)
        with self.assertRaises(ValueError):
            cR.buildHBounded(g4, 2, 2, 0)
        with self.assertRaises(ValueError):
            cR.decideBounded(g4, 0)

    def testNetcodingSolver(self):
        def solver(h, pairL, bound):
            return netcodingSolver(h, pairL, bound, seed=5)

        cR = CliqueReduction(solver=solver)
        self.assertTrue(cR.decideUnbounded(FourPartiteGraph.complete(2)))
        g4 = FourPartiteGraph.complete(1).withEdge("BD", 0, 0, False)
        self.assertFalse(cR.decideUnbounded(g4))
        self.assertEqual(netcodingSolver(cR.buildH(g4), [], 3), {})
        h = CliqueReduction().buildH(FourPartiteGraph.complete(2))
        pairL = [(0, 6), (1, 7)]
        self.assertEqual(netcodingSolver(h, pairL, 5, seed=3), oracleSolver(h, pairL, 5))


def cliqueReductionSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(CliqueReductionTests("testSingleVertexSides"))
    suiteSelect.addTest(CliqueReductionTests("testEstimates"))
    suiteSelect.addTest(CliqueReductionTests("testDecisions"))
    suiteSelect.addTest(CliqueReductionTests("testBoundedInstance"))
    suiteSelect.addTest(CliqueReductionTests("testNetcodingSolver"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = cliqueReductionSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
