##
# File:    testApmcVerifier.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#
#
##
"""
Tests for the seeded cross-check suites and divergence reporting.

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

from rcsb.utils.apmc.ApmcTable import ApmcTable
from rcsb.utils.apmc.ApmcVerifier import ApmcVerifier, VerifyWorker, firstMatrixDifference, oracleMatrix
from rcsb.utils.apmc.MultiDigraph import MultiDigraph

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class ApmcVerifierTests(unittest.TestCase):
    def setUp(self):
        self.__workPath = os.path.join(HERE, "test-output")
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testHelpers(self):
        g = MultiDigraph(3, [(0, 1), (0, 1), (1, 2)])
        self.assertEqual(oracleMatrix(g, 1), [[None, ApmcTable.ABOVE_K, 1], [0, None, 1], [0, 0, None]])
        self.assertIsNone(firstMatrixDifference(oracleMatrix(g, 2), oracleMatrix(g, 2)))
        self.assertEqual(firstMatrixDifference([[None, 1]], [[None, 2]]), (0, 1, 1, 2))

    def testBuildCases(self):
        aV = ApmcVerifier(numCases=2)
        self.assertEqual(aV.buildCases(["witness"], [0, 3]), [("witness", 0), ("witness", 1), ("witness", 3000), ("witness", 3001)])
        self.assertEqual(len(aV.buildCases()), 2 * 3 * len(ApmcVerifier.SUITES))
        self.assertEqual(aV.buildCases(["clique"], []), [])
        with self.assertRaises(ValueError):
            aV.buildCases(["nonsense"])

    def testWorker(self):
        successList, retList, diagList = VerifyWorker().runCases([("witness", 4), ("clique", 3), ("families", 2)], "test-worker", {"faultK": 0}, self.__workPath)
        self.assertEqual(successList, [("witness", 4), ("clique", 3), ("families", 2)])
        self.assertTrue(all(rD["ok"] for rD in retList), retList)
        self.assertEqual(diagList, [])

    def testCleanRun(self):
        report = ApmcVerifier(numCases=2, workPath=self.__workPath).run(suites=["witness", "families", "clique", "netcoding"], seeds=[0])
        self.assertTrue(report["ok"], report["firstDivergence"])
        self.assertEqual(report["cases"], 8)
        self.assertEqual(report["failures"], 0)
        self.assertEqual(report["suites"]["clique"], {"cases": 2, "failures": 0})
        self.assertIsNone(report["firstDivergence"])
        self.assertTrue(ApmcVerifier(numCases=0).run(seeds=[0])["ok"])

    def testValuesRun(self):
        report = ApmcVerifier(numCases=2, workPath=self.__workPath).run(suites=["values"], seeds=[1])
        self.assertTrue(report["ok"], report["firstDivergence"])

    def testInjectedFault(self):
        report = ApmcVerifier(numCases=10, faultK=1, workPath=self.__workPath).run(suites=["values"], seeds=[0, 1])
        self.assertFalse(report["ok"])
        self.assertGreater(report["failures"], 0)
        self.assertEqual(report["firstDivergence"]["suite"], "values")
        self.assertIn("oracle vs iterative", report["firstDivergence"]["detail"])


def apmcVerifierSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(ApmcVerifierTests("testHelpers"))
    suiteSelect.addTest(ApmcVerifierTests("testBuildCases"))
    suiteSelect.addTest(ApmcVerifierTests("testWorker"))
    suiteSelect.addTest(ApmcVerifierTests("testCleanRun"))
    suiteSelect.addTest(ApmcVerifierTests("testValuesRun"))
    suiteSelect.addTest(ApmcVerifierTests("testInjectedFault"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = apmcVerifierSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
