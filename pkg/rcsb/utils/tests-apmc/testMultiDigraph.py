##
# File:    testMultiDigraph.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#
#
##
"""
Tests for the multigraph container and the graph file reader/writer.

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

from rcsb.utils.apmc.ApmcExceptions import CyclicGraphError, GraphFormatError, InvalidGraphError, InvalidOrderError
from rcsb.utils.apmc.GraphIo import GraphIo
from rcsb.utils.apmc.InstanceGenerator import InstanceGenerator
from rcsb.utils.apmc.MultiDigraph import MultiDigraph

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class MultiDigraphTests(unittest.TestCase):
    def setUp(self):
        self.__dataPath = os.path.join(HERE, "test-data")
        self.__workPath = os.path.join(HERE, "test-output")
        self.__graphPath = os.path.join(self.__dataPath, "diamond-path.graph")
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testConstruction(self):
        g = MultiDigraph(3, [(0, 1), (0, 1), (1, 2)])
        self.assertEqual(g.n, 3)
        self.assertEqual(g.arcCount, 3)
        self.assertEqual(g.arcsBetween(0, 1), (0, 1))
        self.assertEqual(g.outNeighbors(0), [1])
        self.assertEqual(g.inArcs(2), (2,))
        self.assertEqual(g.arcIdBound(), 3)
        h = MultiDigraph.fromArcTriples(3, [(7, 0, 1), (4, 1, 2)])
        self.assertEqual(h.arcIds, (4, 7))
        self.assertEqual(h.endpoints(7), (0, 1))
        self.assertEqual(h.arcIdBound(), 8)
        with self.assertRaises(InvalidGraphError):
            MultiDigraph(2, [(0, 0)])
        with self.assertRaises(InvalidGraphError):
            MultiDigraph(2, [(0, 2)])
        with self.assertRaises(InvalidGraphError):
            MultiDigraph(2, [(0, 1), (0, 1)], arcIds=[5, 5])
        with self.assertRaises(InvalidGraphError):
            MultiDigraph(-1)

    def testOrderAndReachability(self):
        g = GraphIo().readGraph(self.__graphPath)
        self.assertEqual(g.topologicalOrder(), [0, 1, 2, 3, 4, 5])
        self.assertTrue(g.isAcyclic())
        self.assertTrue(g.reaches(0, 5))
        self.assertFalse(g.reaches(5, 0))
        self.assertFalse(g.reaches(0, 5, blocked={4}))
        self.assertEqual(g.reachableFrom(1), {1, 3, 4, 5})
        self.assertEqual(g.reachingTo(3), {0, 1, 2, 3})
        reach = g.reachBitsets()
        self.assertEqual(reach[3], (1 << 3) | (1 << 4) | (1 << 5))
        self.assertEqual(reach[5], 1 << 5)
        #
        cyc = MultiDigraph(3, [(0, 1), (1, 2), (2, 0)])
        self.assertFalse(cyc.isAcyclic())
        with self.assertRaises(CyclicGraphError):
            cyc.topologicalOrder()
        with self.assertRaises(InvalidOrderError):
            g.checkOrder([1, 0, 2, 3, 4, 5])

    def testAgainstNetworkx(self):
        iG = InstanceGenerator()
        for seed in range(20):
            g = iG.randomDigraph(7, 9, seed, maxMult=2) if seed % 2 else iG.randomDag(7, 12, seed, maxMult=2)
            nxG = nx.MultiDiGraph()
            nxG.add_nodes_from(range(g.n))
            nxG.add_edges_from((tail, head) for _, tail, head in g.arcs)
            self.assertEqual(g.isAcyclic(), nx.is_directed_acyclic_graph(nxG), "seed %d" % seed)
            for v in range(g.n):
                self.assertEqual(g.reachableFrom(v), nx.descendants(nxG, v) | {v}, "seed %d vertex %d" % (seed, v))
                self.assertEqual(g.reachingTo(v), nx.ancestors(nxG, v) | {v}, "seed %d vertex %d" % (seed, v))

    def testDerivedGraphs(self):
        g = GraphIo().readGraph(self.__graphPath)
        split = g.arcSplitPrefix(g.topologicalOrder(), 3)
        self.assertEqual(split.a1, frozenset([0, 1, 2, 3]))
        self.assertEqual(split.a2, frozenset([4, 5]))
        self.assertTrue(split.isValid(g))
        split = g.arcSplitPrefix(g.topologicalOrder(), 3, crossToA1=False)
        self.assertEqual(split.a1, frozenset([0, 1]))
        self.assertTrue(split.isValid(g))
        #
        r = g.reverse()
        self.assertEqual(r.endpoints(4), (4, 3))
        self.assertEqual(r.reverse(), g)
        c = g.contract({0, 1}, 0)
        self.assertFalse(c.hasArc(0))
        self.assertEqual(c.endpoints(2), (0, 3))
        sub = g.inducedSubgraph({0, 1, 3})
        self.assertEqual(sub.arcIds, (0, 2))
        self.assertEqual(sub.n, 6)
        self.assertEqual(g.removeArcs([0, 1]).arcCount, 4)
        self.assertEqual(g.padded(8).n, 8)
        with self.assertRaises(ValueError):
            g.padded(2)
        #
        h = g.splitVertices()
        self.assertEqual(h.n, 12)
        self.assertEqual(h.arcCount, 12)
        self.assertEqual(h.endpoints(0), (g.vOut(0), g.vIn(1)))
        self.assertEqual(h.endpoints(g.arcIdBound() + 3), (g.vIn(3), g.vOut(3)))

    def testGraphIo(self):
        gIo = GraphIo(workPath=self.__workPath)
        g = gIo.readGraph(self.__graphPath)
        self.assertEqual((g.n, g.arcCount), (6, 6))
        outPath = os.path.join(self.__workPath, "diamond-path-copy.graph")
        ok = gIo.writeGraph(outPath, g, commentList=["copy"])
        self.assertTrue(ok)
        self.assertEqual(gIo.readGraph(outPath), g)
        #
        with self.assertRaises(GraphFormatError):
            gIo.readGraph(os.path.join(self.__dataPath, "no-such-file.graph"))
        with self.assertRaises(GraphFormatError):
            gIo.parseLines(["a 0 1"])
        with self.assertRaises(GraphFormatError):
            gIo.parseLines(["p 2 2", "a 0 1"])
        with self.assertRaises(GraphFormatError):
            gIo.parseLines(["p 2 1", "x 0 1"])
        with self.assertRaises(GraphFormatError):
            gIo.parseLines(["p 2 1", "a 0 zero"])
        with self.assertRaises(GraphFormatError):
            gIo.parseLines(["p 2 1", "a 1 1"])
        self.assertEqual(gIo.parseLines(["c empty", "p 0 0"]).n, 0)


def graphSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(MultiDigraphTests("testConstruction"))
    suiteSelect.addTest(MultiDigraphTests("testOrderAndReachability"))
    suiteSelect.addTest(MultiDigraphTests("testAgainstNetworkx"))
    suiteSelect.addTest(MultiDigraphTests("testDerivedGraphs"))
    suiteSelect.addTest(MultiDigraphTests("testGraphIo"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = graphSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
