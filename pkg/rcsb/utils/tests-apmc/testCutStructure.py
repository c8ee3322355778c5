##
# File:    testCutStructure.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#   19-Oct-2026  dwp Add covering, arc-replacement and cut-order checks on seeded random DAGs
#
#
##
"""
Tests for cut sides, arc replacement, the latest/earliest <=k-cut closures and the covering checks.

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

import numpy as np

from rcsb.utils.apmc.ApmcExceptions import NotACutError
from rcsb.utils.apmc.ApmcRecursive import catalan
from rcsb.utils.apmc.CutFamily import Cut, CutFamily
from rcsb.utils.apmc.CutStructure import CutStructure
from rcsb.utils.apmc.FlowOracle import FlowOracle
from rcsb.utils.apmc.InstanceGenerator import InstanceGenerator
from rcsb.utils.apmc.MultiDigraph import MultiDigraph

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class CutStructureTests(unittest.TestCase):
    def setUp(self):
        # s=0 -> v=1 -> t=2
        self.__path = MultiDigraph(3, [(0, 1), (1, 2)])
        # s=0, a=1, b=2, t=3
        self.__diamond = MultiDigraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testSidesAndPredicates(self):
        cs = CutStructure(self.__diamond)
        sourceSide, targetSide = cs.sides(0, 3, [0, 3])
        self.assertEqual(sourceSide, frozenset([0, 2]))
        self.assertEqual(targetSide, frozenset([1, 3]))
        with self.assertRaises(NotACutError):
            cs.makeCut(0, 3, [0])
        self.assertTrue(cs.isMinimal(0, 3, [0, 1]))
        self.assertFalse(cs.isMinimal(0, 3, [0, 1, 2]))
        self.assertTrue(cs.isLatest(0, 3, [2, 3]))
        self.assertFalse(cs.isLatest(0, 3, [0, 1]))
        self.assertTrue(cs.isEarliest(0, 3, [0, 1]))
        self.assertFalse(cs.isEarliest(0, 3, [0, 3]))

    def testCutOrder(self):
        cs = CutStructure(self.__diamond)
        early = cs.makeCut(0, 3, [0, 1])
        late = cs.makeCut(0, 3, [2, 3])
        self.assertTrue(late.laterThan(early))
        self.assertTrue(late.strictlyLaterThan(early))
        self.assertTrue(early.strictlyEarlierThan(late))
        self.assertFalse(early.laterThan(late))
        family = CutFamily.fromSides([late, early])
        self.assertEqual(family.asLists(), [[0, 1], [2, 3]])
        self.assertTrue(family.atLeast(1, 0))
        self.assertFalse(family.atLeast(0, 1))
        self.assertEqual(Cut([3, 2]), late)

    def testArcReplacement(self):
        cs = CutStructure(self.__path)
        first = cs.makeCut(0, 2, [0])
        self.assertEqual(cs.arcReplacement(0, 2, first, 0).asList(), [1])
        self.assertIsNone(cs.arcReplacement(0, 2, cs.makeCut(0, 2, [1]), 1))
        with self.assertRaises(ValueError):
            cs.arcReplacement(0, 2, first, 1)
        # depth-2 tree: replacing (s, u) moves that side of the min-cut down to the leaves below u
        tree, s, t = InstanceGenerator().treeGadget(2, 2)
        cs = CutStructure(tree)
        minCut = FlowOracle(tree).latestMinCut(s, t)
        self.assertEqual(minCut.asList(), [0, 1])
        self.assertEqual(cs.arcReplacement(s, t, minCut, 0).asList(), [1, 2, 3])
        self.assertEqual(cs.arcReplacement(s, t, minCut, 1).asList(), [0, 4, 5])

    def testClosureSmall(self):
        cs = CutStructure(self.__path)
        self.assertEqual(cs.latestCutsUpToK(0, 2, 2).asLists(), [[1]])
        self.assertEqual(cs.earliestCutsUpToK(0, 2, 2).asLists(), [[0]])
        self.assertTrue(cs.latestCutsUpToK(2, 0, 2).isUnreachable())
        self.assertTrue(cs.earliestCutsUpToK(2, 0, 2).isUnreachable())
        cs = CutStructure(self.__diamond)
        self.assertEqual(cs.latestCutsUpToK(0, 3, 2).asLists(), [[2, 3]])
        self.assertEqual(cs.earliestCutsUpToK(0, 3, 2).asLists(), [[0, 1]])
        self.assertTrue(cs.latestCutsUpToK(0, 3, 1).isEmpty())
        self.assertEqual(cs.latestCutsUpToK(0, 3, 2).minSize(), 2)

    def testTreeGadget(self):
        g, s, t = InstanceGenerator().treeGadget(3, 5)
        cs = CutStructure(g)
        family = cs.latestCutsUpToK(s, t, 4)
        self.assertEqual(family.sizeCounts(), {2: 1, 3: 2, 4: 5})
        for j in range(2, 5):
            self.assertEqual(family.sizeCounts()[j], catalan(j - 1))
        self.assertEqual(cs.latestCutsUpToK(s, t, 3).sizeCounts(), {2: 1, 3: 2})
        self.assertEqual(cs.latestCutsUpToK(s, t, 2).asLists(), [[0, 1]])
        self.assertTrue(cs.latestCutsUpToK(s, t, 1).isEmpty())
        self.assertEqual(family.restrict(3).sizeCounts(), {2: 1, 3: 2})

    def testClosureAgainstBruteForce(self):
        iG = InstanceGenerator()
        for seed in range(12):
            g = iG.randomDag(6, 11, seed, maxMult=2)
            cs = CutStructure(g)
            fO = FlowOracle(g)
            for s in range(g.n):
                for t in range(g.n):
                    if s == t or not g.reaches(s, t):
                        continue
                    bruteEarliest, bruteLatest = fO.enumerateExtremalCutsBruteForce(s, t, 3)
                    self.assertTrue(cs.latestCutsUpToK(s, t, 3).sameCuts(bruteLatest), "seed %d pair (%d, %d)" % (seed, s, t))
                    self.assertTrue(cs.earliestCutsUpToK(s, t, 3).sameCuts(bruteEarliest), "seed %d pair (%d, %d)" % (seed, s, t))

    def testOrderOnNonMinimalCuts(self):
        # s=0, v=1, t=2 with arcs (s, v), (v, t), (s, t)
        g = MultiDigraph(3, [(0, 1), (1, 2), (0, 2)])
        cs = CutStructure(g)
        m1 = cs.makeCut(0, 2, [0, 2])
        m2 = cs.makeCut(0, 2, [1, 2])
        m3 = cs.makeCut(0, 2, [0, 1, 2])
        self.assertTrue(cs.isMinimal(0, 2, m1.arcs))
        self.assertTrue(cs.isMinimal(0, 2, m2.arcs))
        self.assertFalse(cs.isMinimal(0, 2, m3.arcs))
        self.assertEqual((m3.sourceSide, m3.targetSide), (frozenset([0]), frozenset([2])))
        # the earlier and later orders disagree on the non-minimal cut
        self.assertTrue(m3.strictlyEarlierThan(m2))
        self.assertFalse(m2.strictlyLaterThan(m3))
        self.assertTrue(m3.strictlyLaterThan(m1))
        self.assertFalse(m1.strictlyEarlierThan(m3))
        self.assertTrue(m1.earlierThan(m3))
        self.assertTrue(m3.laterThan(m1))

    def testSixVertexClassification(self):
        # s=0, a=1, b=2, c=3, d=4, t=5; a->c and b->d carry three parallel arcs each
        g = MultiDigraph(6, [(0, 1), (0, 2)] + [(1, 3)] * 3 + [(2, 4)] * 3 + [(3, 5), (4, 5)])
        cs = CutStructure(g)
        fO = FlowOracle(g)
        m1 = cs.makeCut(0, 5, [0, 1])
        m2 = cs.makeCut(0, 5, [0, 9])
        m3 = cs.makeCut(0, 5, [8, 9])
        self.assertEqual(fO.minCutValue(0, 5), 2)
        self.assertEqual(fO.earliestMinCut(0, 5), m1)
        self.assertEqual(fO.latestMinCut(0, 5), m3)
        self.assertTrue(cs.isEarliest(0, 5, m1.arcs))
        self.assertFalse(cs.isLatest(0, 5, m1.arcs))
        self.assertTrue(cs.isLatest(0, 5, m3.arcs))
        self.assertFalse(cs.isEarliest(0, 5, m3.arcs))
        self.assertTrue(m2.strictlyLaterThan(m1))
        self.assertTrue(cs.isMinimal(0, 5, m2.arcs))
        self.assertFalse(cs.isLatest(0, 5, m2.arcs))
        self.assertFalse(cs.isEarliest(0, 5, m2.arcs))
        self.assertTrue(m3.strictlyLaterThan(m2) and m3.size <= m2.size)
        self.assertEqual(cs.latestCutsUpToK(0, 5, 2).asLists(), [[8, 9]])
        self.assertEqual(cs.earliestCutsUpToK(0, 5, 2).asLists(), [[0, 1]])

    def testImmediatelyLaterIsArcReplacement(self):
        iG = InstanceGenerator()
        numPairs = 0
        for seed in range(10):
            g = iG.randomDag(6, 11, seed, maxMult=2)
            cs = CutStructure(g)
            fO = FlowOracle(g)
            for s in range(g.n):
                for t in range(g.n):
                    if s == t or not g.reaches(s, t):
                        continue
                    cutL = list(fO.enumerateExtremalCutsBruteForce(s, t, 3)[1])
                    for m1 in cutL:
                        for m2 in cutL:
                            if not m2.strictlyLaterThan(m1):
                                continue
                            if any(m2.strictlyLaterThan(m3) and m3.strictlyLaterThan(m1) for m3 in cutL):
                                continue
                            numPairs += 1
                            for aId in sorted(m1.arcs - m2.arcs):
                                self.assertEqual(cs.arcReplacement(s, t, m1, aId), m2, "seed %d pair (%d, %d) arc %d" % (seed, s, t, aId))
        logger.info("Checked %d immediately-later pairs", numPairs)
        self.assertGreater(numPairs, 0)

    def testSplitCoveringRandom(self):
        iG = InstanceGenerator()
        rng = np.random.default_rng(17)
        k = 3
        for seed in range(8):
            g = iG.randomDag(6, 10, seed, maxMult=2)
            cs = CutStructure(g)
            fO = FlowOracle(g)
            order = g.topologicalOrder()
            split = g.arcSplitPrefix(order, int(rng.integers(1, g.n)), crossToA1=bool(seed % 2))
            for s in range(g.n):
                for t in range(g.n):
                    if s == t or not g.reaches(s, t):
                        continue
                    familyD = cs.splitCoveringFamilies(s, t, split, k)
                    value = fO.minCutValue(s, t)
                    if value <= k:
                        minCutL = [cut for cut in fO.minimalCutsBruteForce(s, t, value) if cut.size == value]
                        self.assertTrue(any(cs.checkSplitCovering(s, t, split, cut.arcs, familyD) for cut in minCutL), "seed %d pair (%d, %d)" % (seed, s, t))
                    # a union of one family member per vertex, padded with random arcs
                    for _ in range(5):
                        arcS = set(int(aId) for aId in rng.choice(list(g.arcIds), size=int(rng.integers(0, 3)), replace=False))
                        for v in range(g.n):
                            memberL = [member for family in familyD[v] if family is not None for member in family.arcSets()]
                            if memberL:
                                arcS |= memberL[int(rng.integers(0, len(memberL)))]
                        if cs.checkSplitCovering(s, t, split, arcS, familyD):
                            self.assertTrue(cs.isCut(s, t, arcS), "seed %d pair (%d, %d) arcs %r" % (seed, s, t, sorted(arcS)))

    def testLateCoveringRandom(self):
        iG = InstanceGenerator()
        rng = np.random.default_rng(23)
        k = 3
        for seed in range(8):
            g = iG.randomDag(6, 11, seed, maxMult=2)
            cs = CutStructure(g)
            fO = FlowOracle(g)
            for s in range(g.n):
                for t in range(g.n):
                    if s == t or not g.reaches(s, t):
                        continue
                    reference = cs.canonicalLateCut(s, t)
                    self.assertTrue(cs.isCut(s, t, reference))
                    for cut in fO.enumerateExtremalCutsBruteForce(s, t, k)[1]:
                        self.assertTrue(cs.checkLateCovering(s, t, reference, cut.arcs, k), "seed %d pair (%d, %d) cut %r" % (seed, s, t, cut))
                    for _ in range(10):
                        arcS = set(int(aId) for aId in rng.choice(list(g.arcIds), size=int(rng.integers(1, 6)), replace=False))
                        if cs.checkLateCovering(s, t, reference, arcS, k):
                            self.assertTrue(cs.isCut(s, t, arcS), "seed %d pair (%d, %d) arcs %r" % (seed, s, t, sorted(arcS)))

    def testCoveringChecks(self):
        g = self.__diamond
        cs = CutStructure(g)
        split = g.arcSplitPrefix(g.topologicalOrder(), 2)
        self.assertEqual(split.a1, frozenset([0, 1, 2]))
        familyD = cs.splitCoveringFamilies(0, 3, split, 2)
        self.assertIsNone(familyD[0][0])
        self.assertIsNone(familyD[3][1])
        self.assertTrue(cs.checkSplitCovering(0, 3, split, [0, 1], familyD))
        self.assertFalse(cs.checkSplitCovering(0, 3, split, [3], familyD))
        #
        reference = cs.canonicalLateCut(0, 3)
        self.assertEqual(reference, frozenset([0, 1]))
        self.assertTrue(cs.checkLateCovering(0, 3, reference, [2, 3], 2))
        self.assertTrue(cs.checkLateCovering(0, 3, reference, [0, 1], 2))
        self.assertFalse(cs.checkLateCovering(0, 3, reference, [2], 2))


def cutStructureSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(CutStructureTests("testSidesAndPredicates"))
    suiteSelect.addTest(CutStructureTests("testCutOrder"))
    suiteSelect.addTest(CutStructureTests("testArcReplacement"))
    suiteSelect.addTest(CutStructureTests("testClosureSmall"))
    suiteSelect.addTest(CutStructureTests("testTreeGadget"))
    suiteSelect.addTest(CutStructureTests("testClosureAgainstBruteForce"))
    suiteSelect.addTest(CutStructureTests("testCoveringChecks"))
    suiteSelect.addTest(CutStructureTests("testOrderOnNonMinimalCuts"))
    suiteSelect.addTest(CutStructureTests("testSixVertexClassification"))
    suiteSelect.addTest(CutStructureTests("testImmediatelyLaterIsArcReplacement"))
    suiteSelect.addTest(CutStructureTests("testSplitCoveringRandom"))
    suiteSelect.addTest(CutStructureTests("testLateCoveringRandom"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = cutStructureSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
