##
# File:    testWitnessSuperset.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#
#
##
"""
Tests for Witness Superset instances, the pruning and brute-force solvers and latest filtering.

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

from rcsb.utils.apmc.ApmcExceptions import EmptyFamilyError, LimitExceededError, OrderUndefinedError, TooLargeError
from rcsb.utils.apmc.CutFamily import Cut, CutFamily
from rcsb.utils.apmc.MultiDigraph import MultiDigraph
from rcsb.utils.apmc.WitnessSuperset import OrderedFamily, WitnessSupersetSolver, WsInstance

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class WitnessSupersetTests(unittest.TestCase):
    def setUp(self):
        self.__families = [[{2}, {1, 5}], [{1, 3}, {4}], [{4}, {2, 4}]]
        self.__diamond = MultiDigraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testInstance(self):
        inst = WsInstance(self.__families, 2, K=2)
        self.assertEqual(inst.universe(), frozenset([1, 2, 3, 4, 5]))
        self.assertTrue(inst.isSolution({2, 4}))
        self.assertFalse(inst.isSolution({4}))
        self.assertFalse(inst.isSolution({2, 4, 5}))
        self.assertTrue(inst.covers(frozenset([1, 5, 4])))
        self.assertEqual(len(WsInstance([[{1}, {1}]], 1).families[0]), 1)
        with self.assertRaises(EmptyFamilyError):
            WsInstance([[{1}], []], 2)
        with self.assertRaises(LimitExceededError):
            WsInstance(self.__families, 2, K=1)

    def testSolvers(self):
        solver = WitnessSupersetSolver()
        inst = WsInstance(self.__families, 2)
        self.assertEqual(solver.solvePruning(inst), [frozenset([2, 4])])
        self.assertEqual(solver.solveBruteForce(inst), [frozenset([2, 4])])
        inst = WsInstance(self.__families, 3)
        self.assertEqual(solver.solvePruning(inst), solver.solveBruteForce(inst))
        self.assertIn(frozenset([1, 4, 5]), solver.solvePruning(inst))
        self.assertEqual(solver.solvePruning(WsInstance(self.__families, 1)), [])
        self.assertEqual(solver.solvePruning(WsInstance([], 2)), [frozenset()])
        with self.assertRaises(TooLargeError):
            WitnessSupersetSolver(maxUniverse=3).solveBruteForce(inst)

    def testRandomInstances(self):
        solver = WitnessSupersetSolver()
        rng = np.random.default_rng(2026)
        for _ in range(60):
            familyL = []
            for _ in range(int(rng.integers(1, 5))):
                familyL.append([set(int(x) for x in rng.choice(7, size=int(rng.integers(1, 4)), replace=False)) for _ in range(int(rng.integers(1, 4)))])
            inst = WsInstance(familyL, int(rng.integers(1, 4)))
            self.assertEqual(solver.solvePruning(inst), solver.solveBruteForce(inst), repr(familyL))

    def testOrderedFamily(self):
        single = OrderedFamily.fromBranch(7)
        self.assertEqual(single.members, [frozenset([7])])
        self.assertEqual(single.laterMatrix, [[True]])
        family = CutFamily([Cut([1]), Cut([2, 3])], [[True, True], [False, True]])
        branch = OrderedFamily.fromBranch(0, family)
        self.assertEqual(branch.members, [frozenset([0]), frozenset([1]), frozenset([2, 3])])
        self.assertTrue(branch.laterMatrix[1][0])
        self.assertFalse(branch.laterMatrix[0][1])
        self.assertTrue(branch.laterMatrix[1][2])
        self.assertEqual(branch.containedIn(frozenset([0, 2, 3])), [0, 2])

    def testFilterLatest(self):
        solver = WitnessSupersetSolver()
        family = solver.filterLatest(self.__diamond, 0, 3, [{0, 1}, {2, 3}, {0, 3}, {1, 2}], k=2)
        self.assertEqual(family.asLists(), [[2, 3]])
        self.assertEqual(family.kind, CutFamily.LATEST)
        # branches of s: arc 0 then the 1-3 family {2}, arc 1 then the 2-3 family {3}
        branchL = [OrderedFamily.fromBranch(0, CutFamily([Cut([2])])), OrderedFamily.fromBranch(1, CutFamily([Cut([3])]))]
        family = solver.filterLatest(self.__diamond, 0, 3, [{0, 1}, {2, 3}, {0, 3}, {1, 2}], branchFamilies=branchL, k=2)
        self.assertEqual(family.asLists(), [[2, 3]])
        with self.assertRaises(OrderUndefinedError):
            solver.filterLatest(self.__diamond, 0, 3, [{2}], branchFamilies=branchL, k=2)


def witnessSupersetSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(WitnessSupersetTests("testInstance"))
    suiteSelect.addTest(WitnessSupersetTests("testSolvers"))
    suiteSelect.addTest(WitnessSupersetTests("testRandomInstances"))
    suiteSelect.addTest(WitnessSupersetTests("testOrderedFamily"))
    suiteSelect.addTest(WitnessSupersetTests("testFilterLatest"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = witnessSupersetSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
