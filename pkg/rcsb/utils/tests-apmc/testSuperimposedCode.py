##
# File:    testSuperimposedCode.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#
#
##
"""
Tests for the Kautz-Singleton, parity and combined superimposed codes.

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

from rcsb.utils.apmc.ApmcExceptions import NotACodewordError, NotDecodableError, ParameterOverflowError
from rcsb.utils.apmc.SuperimposedCode import FastCode, KautzSingletonCode, ParityCode

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class SuperimposedCodeTests(unittest.TestCase):
    def setUp(self):
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testKautzSingleton(self):
        code = KautzSingletonCode(2, 10)
        self.assertEqual((code.fieldSize, code.numDigits, code.q), (5, 2, 25))
        self.assertTrue(code.isSuperimposed())
        # every codeword has exactly one bit per field element
        self.assertTrue(all(bin(code.encode(x)).count("1") == 5 for x in range(10)))
        self.assertEqual(code.decode(code.encodeSet({1, 4})), frozenset([1, 4]))
        self.assertEqual(code.decode(0), frozenset())
        with self.assertRaises(NotDecodableError):
            code.decode(code.encodeSet({1, 4, 7}))
        with self.assertRaises(ParameterOverflowError):
            KautzSingletonCode(50, 1000, maxPrime=7)
        with self.assertRaises(ValueError):
            KautzSingletonCode(0, 10)

    def testParity(self):
        code = ParityCode(8)
        self.assertEqual(code.numBits, 3)
        self.assertEqual(code.q, 6)
        self.assertEqual(code.encode(5), 0b011001)
        self.assertEqual(code.decode(0b011001), 5)
        self.assertTrue(all(code.decode(code.encode(x)) == x for x in range(8)))
        with self.assertRaises(NotACodewordError):
            code.decode(0b000011)
        with self.assertRaises(NotACodewordError):
            code.decode(0)
        with self.assertRaises(NotACodewordError):
            ParityCode(6).decode(ParityCode(8).encode(7))

    def testFastCode(self):
        code = FastCode(2, 12)
        self.assertEqual(code.q, 25 * 8)
        self.assertTrue(code.isSuperimposed())
        self.assertEqual(code.decode(code.encodeSet({3, 9})), frozenset([3, 9]))
        self.assertEqual(code.decode(code.encode(11)), frozenset([11]))
        self.assertEqual(code.decode(0), frozenset())
        with self.assertRaises(NotDecodableError):
            code.decode(code.encodeSet({1, 2, 3}))
        with self.assertRaises(NotDecodableError):
            code.decode(code.encode(1) | 1)


def superimposedCodeSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(SuperimposedCodeTests("testKautzSingleton"))
    suiteSelect.addTest(SuperimposedCodeTests("testParity"))
    suiteSelect.addTest(SuperimposedCodeTests("testFastCode"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = superimposedCodeSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
