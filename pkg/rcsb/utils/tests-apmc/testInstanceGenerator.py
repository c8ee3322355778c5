##
# File:    testInstanceGenerator.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#
#
##
"""
Tests for the seeded instance generators and the 4-partite instance container.

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
from collections import Counter

from rcsb.utils.apmc.ApmcExceptions import GraphFormatError
from rcsb.utils.apmc.FourPartiteGraph import FourPartiteGraph
from rcsb.utils.apmc.InstanceGenerator import InstanceGenerator

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class InstanceGeneratorTests(unittest.TestCase):
    def setUp(self):
        self.__iG = InstanceGenerator()
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testTreeGadget(self):
        g, s, t = self.__iG.treeGadget(3, 5)
        self.assertEqual((g.n, g.arcCount, s, t), (16, 54, 0, 15))
        self.assertEqual(g.endpoints(0), (0, 1))
        self.assertEqual(g.endpoints(13), (6, 14))
        self.assertEqual(len(g.arcsBetween(7, 15)), 5)
        self.assertTrue(g.isAcyclic())
        g, s, t = self.__iG.treeGadget(0, 2)
        self.assertEqual((g.n, g.arcCount, t), (2, 2, 1))
        with self.assertRaises(ValueError):
            self.__iG.treeGadget(-1, 2)
        with self.assertRaises(ValueError):
            self.__iG.treeGadget(2, 0)

    def testRandomDag(self):
        for seed in range(10):
            g = self.__iG.randomDag(9, 20, seed, maxMult=3)
            self.assertEqual(g.arcCount, 20)
            self.assertTrue(g.isAcyclic())
            self.assertLessEqual(max(Counter((tail, head) for _, tail, head in g.arcs).values()), 3)
        self.assertEqual(self.__iG.randomDag(9, 20, 4), self.__iG.randomDag(9, 20, 4))
        self.assertEqual(self.__iG.randomDag(4, 18, 1, maxMult=3).arcCount, 18)
        self.assertEqual(self.__iG.randomDag(0, 0, 1).n, 0)
        with self.assertRaises(ValueError):
            self.__iG.randomDag(4, 19, 1, maxMult=3)

    def testRandomDigraph(self):
        g = self.__iG.randomDigraph(5, 20, 1)
        self.assertEqual(sorted((tail, head) for _, tail, head in g.arcs), [(u, v) for u in range(5) for v in range(5) if u != v])
        self.assertFalse(g.isAcyclic())
        self.assertEqual(self.__iG.randomDigraph(6, 12, 3, maxMult=2), self.__iG.randomDigraph(6, 12, 3, maxMult=2))
        with self.assertRaises(ValueError):
            self.__iG.randomDigraph(5, 21, 1)
        with self.assertRaises(ValueError):
            self.__iG.randomDigraph(5, 3, 1, maxMult=0)

    def testFourPartite(self):
        g4 = self.__iG.randomFourPartite(3, 0.5, 4)
        self.assertEqual(g4.nPerSide, 3)
        self.assertEqual(g4.toDict(), self.__iG.randomFourPartite(3, 0.5, 4).toDict())
        self.assertEqual(FourPartiteGraph.fromDict(g4.toDict()).toDict(), g4.toDict())
        self.assertEqual(FourPartiteGraph.complete(2).edgeCount("AD"), 4)
        padded = FourPartiteGraph.complete(2).padded(3)
        self.assertEqual(padded.nPerSide, 3)
        self.assertEqual(padded.edgeCount("BC"), 4)
        self.assertFalse(padded.hasEdge("AB", 2, 0))
        with self.assertRaises(GraphFormatError):
            FourPartiteGraph.fromDict({"nPerSide": 2})
        with self.assertRaises(GraphFormatError):
            FourPartiteGraph(2, {"AB": [[1]]})


def instanceGeneratorSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(InstanceGeneratorTests("testTreeGadget"))
    suiteSelect.addTest(InstanceGeneratorTests("testRandomDag"))
    suiteSelect.addTest(InstanceGeneratorTests("testRandomDigraph"))
    suiteSelect.addTest(InstanceGeneratorTests("testFourPartite"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = instanceGeneratorSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
