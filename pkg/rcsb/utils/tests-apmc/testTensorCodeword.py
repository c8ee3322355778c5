##
# File:    testTensorCodeword.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#   19-Oct-2026  dwp Add collapse, cover and slice checks on seeded random instances
#
#
##
"""
Tests for box-union tensor codewords, witness decoding and the codeword matrix product.

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

from rcsb.utils.apmc.ApmcExceptions import DimensionMismatchError, EmptyFamilyError, LimitExceededError
from rcsb.utils.apmc.CodeMatrix import CodeMatrix
from rcsb.utils.apmc.SuperimposedCode import FastCode
from rcsb.utils.apmc.TensorCodeword import TensorCodeword, WitnessDecoder
from rcsb.utils.apmc.WitnessSuperset import WitnessSupersetSolver, WsInstance

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class TensorCodewordTests(unittest.TestCase):
    def setUp(self):
        self.__cw = TensorCodeword.fromProduct([0b011, 0b110], 3)
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def testCanonicalForm(self):
        self.assertEqual(TensorCodeword(2, 3, [(0b011, 0b001), (0b001, 0b001)]).boxes, ((0b011, 0b001),))
        self.assertTrue(TensorCodeword(2, 3, [(0, 0b001)]).isZero())
        self.assertTrue(TensorCodeword.zero(2, 3).isZero())
        self.assertTrue(TensorCodeword.full(2, 3).isFull())
        self.assertFalse(self.__cw.isFull())
        self.assertEqual(TensorCodeword(2, 3, [(1, 2), (1, 2)]), TensorCodeword.fromProduct([1, 2], 3))
        with self.assertRaises(DimensionMismatchError):
            TensorCodeword(2, 3, [(1,)])

    def testSetOperations(self):
        cw = self.__cw
        self.assertTrue(cw.contains((0, 1)))
        self.assertFalse(cw.contains((2, 0)))
        self.assertEqual((cw & TensorCodeword.fromProduct([0b001, 0b111], 3)).boxes, ((0b001, 0b110),))
        union = cw | TensorCodeword.fromProduct([0b100, 0b001], 3)
        self.assertEqual(len(union.boxes), 2)
        self.assertTrue(union.contains((2, 0)))
        self.assertEqual(TensorCodeword.fromProduct([1], 3).product(TensorCodeword.fromProduct([2], 3)).boxes, ((1, 2),))
        self.assertEqual(TensorCodeword.fromProduct([1], 3).liftRight(1).boxes, ((1, 7),))
        self.assertEqual(TensorCodeword.fromProduct([1], 3).liftLeft(1).boxes, ((7, 1),))
        with self.assertRaises(DimensionMismatchError):
            _ = cw | TensorCodeword.full(3, 3)
        with self.assertRaises(DimensionMismatchError):
            cw.product(TensorCodeword.full(1, 4))

    def testProjections(self):
        cw = self.__cw
        self.assertEqual(cw.slice(0, 1).boxes, ((0b110,),))
        self.assertTrue(cw.slice(0, 2).isZero())
        self.assertEqual(cw.diagonal(), 0b010)
        self.assertEqual(cw.axisSupport(1), [1, 2])
        self.assertEqual(cw.components(), 0b111)
        self.assertTrue(cw.missesComplementPower(0b011))
        self.assertFalse(cw.missesComplementPower(0b100))
        self.assertEqual(cw.toBitset(), 0b110110)
        self.assertTrue(TensorCodeword.fromBitset(2, 3, 0b110110).sameSet(cw))
        with self.assertRaises(ValueError):
            cw.slice(2, 0)

    def testEncodeFamily(self):
        code = FastCode(2, 6)
        cw = TensorCodeword.encodeFamily(code, 3, [{1}, {2}])
        self.assertEqual(cw.dim, 3)
        self.assertEqual(cw.boxes, ((code.encode(1), code.encode(2), code.encode(1)),))
        with self.assertRaises(LimitExceededError):
            TensorCodeword.encodeFamily(code, 1, [{1}, {2}])
        with self.assertRaises(EmptyFamilyError):
            TensorCodeword.encodeFamily(code, 2, [])

    def __randomInstance(self, rng, universe=6):
        familyL = []
        for _ in range(int(rng.integers(1, 4))):
            familyL.append([set(int(x) for x in rng.choice(universe, size=int(rng.integers(1, 3)), replace=False)) for _ in range(int(rng.integers(1, 3)))])
        return WsInstance(familyL, 2, 2)

    def __randomCodeword(self, rng, dim, baseLen):
        boxL = [tuple(int(rng.integers(1, 2**baseLen)) for _ in range(dim)) for _ in range(int(rng.integers(0, 4)))]
        return TensorCodeword(dim, baseLen, boxL)

    def testWitnessDecoding(self):
        code = FastCode(2, 6)
        decoder = WitnessDecoder(code, 2, 2)
        familyL = [[{2}, {1, 5}], [{1, 3}, {4}], [{4}, {2, 4}]]
        self.assertEqual(decoder.decodeWitness(decoder.encodeInstance(familyL)), [frozenset([2, 4])])
        self.assertEqual(decoder.decodeWitness(TensorCodeword.full(2, code.q)), [])
        self.assertEqual(decoder.decodeWitness(TensorCodeword.zero(2, code.q)), [frozenset()])
        with self.assertRaises(LimitExceededError):
            WitnessDecoder(code, 2, 3)
        #
        solver = WitnessSupersetSolver()
        rng = np.random.default_rng(7)
        for _ in range(60):
            inst = self.__randomInstance(rng)
            cw = decoder.encodeInstance(inst.families)
            solutionL = decoder.decodeWitness(cw)
            self.assertEqual(solutionL, solver.solveBruteForce(inst), repr(inst.families))
            for wS in solutionL:
                # the diagonal lies inside the codeword of every solution
                self.assertEqual(cw.diagonal() & ~code.encodeSet(wS), 0, repr(inst.families))

    def testCollapse(self):
        code = FastCode(2, 6)
        decoder = WitnessDecoder(code, 2, 2)
        weightBound = 2 * max(bin(code.encode(x)).count("1") for x in range(code.u))
        self.assertEqual(decoder.collapse(TensorCodeword.fromProduct([code.encode(3)], code.q)), {code.encode(3)})
        self.assertEqual(decoder.collapse(TensorCodeword.zero(2, code.q)), {0})
        # the full codeword has a diagonal no small witness can hold
        self.assertEqual(decoder.collapse(TensorCodeword.full(2, code.q)), set())
        cw = decoder.encodeInstance([[{2}, {1, 5}], [{1, 3}, {4}], [{4}, {2, 4}]])
        collapsedS = decoder.collapse(cw)
        self.assertIn(code.encodeSet({2, 4}), collapsedS)
        self.assertTrue(all(bin(bits).count("1") <= weightBound for bits in collapsedS))
        #
        solver = WitnessSupersetSolver()
        rng = np.random.default_rng(11)
        for _ in range(40):
            inst = self.__randomInstance(rng)
            collapsedS = decoder.collapse(decoder.encodeInstance(inst.families))
            for wS in solver.solveBruteForce(inst):
                self.assertIn(code.encodeSet(wS), collapsedS, repr(inst.families))

    def testCoverCharacterization(self):
        code = FastCode(2, 6)
        decoder = WitnessDecoder(code, 2, 2)
        rng = np.random.default_rng(3)
        for _ in range(100):
            inst = self.__randomInstance(rng)
            cw = decoder.encodeInstance(inst.families)
            wS = frozenset(int(x) for x in rng.choice(6, size=int(rng.integers(0, 3)), replace=False))
            self.assertEqual(inst.covers(wS), cw.missesComplementPower(code.encodeSet(wS)), "%r %r" % (inst.families, wS))

    def testSliceCommutesWithUnion(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            cw1 = self.__randomCodeword(rng, 3, 4)
            cw2 = self.__randomCodeword(rng, 3, 4)
            union = cw1 | cw2
            self.assertEqual(union.toBitset(), cw1.toBitset() | cw2.toBitset())
            for axis in range(3):
                for value in range(4):
                    self.assertTrue(union.slice(axis, value).sameSet(cw1.slice(axis, value) | cw2.slice(axis, value)))
                    point = [1, 2]
                    point.insert(axis, value)
                    self.assertEqual(union.slice(axis, value).contains((1, 2)), union.contains(tuple(point)))

    def testCodeMatrix(self):
        xM = CodeMatrix([0], [1, 2], 1, 3)
        xM.set(0, 1, TensorCodeword.fromProduct([0b001], 3))
        xM.set(0, 2, TensorCodeword.fromProduct([0b010], 3))
        yM = CodeMatrix([1, 2], [3], 1, 3)
        yM.set(1, 3, TensorCodeword.fromProduct([0b100], 3))
        yM.set(2, 3, TensorCodeword.zero(1, 3))
        self.assertIsNone(yM.get(2, 3))
        self.assertTrue(yM.entry(2, 3).isZero())
        self.assertEqual(yM.nonZeroCount(), 1)
        zM = CodeMatrix.starProduct(xM, yM)
        self.assertEqual(zM.dim, 2)
        self.assertEqual(zM.get(0, 3), TensorCodeword(2, 3, [(0b001, 0b100)]))
        yM.set(2, 3, TensorCodeword.fromProduct([0b001], 3))
        zM = CodeMatrix.starProduct(xM, yM)
        self.assertEqual(zM.get(0, 3), TensorCodeword(2, 3, [(0b001, 0b100), (0b010, 0b001)]))
        with self.assertRaises(DimensionMismatchError):
            CodeMatrix.starProduct(xM, xM)
        with self.assertRaises(DimensionMismatchError):
            xM.set(0, 1, TensorCodeword.full(2, 3))


def tensorCodewordSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(TensorCodewordTests("testCanonicalForm"))
    suiteSelect.addTest(TensorCodewordTests("testSetOperations"))
    suiteSelect.addTest(TensorCodewordTests("testProjections"))
    suiteSelect.addTest(TensorCodewordTests("testEncodeFamily"))
    suiteSelect.addTest(TensorCodewordTests("testWitnessDecoding"))
    suiteSelect.addTest(TensorCodewordTests("testCollapse"))
    suiteSelect.addTest(TensorCodewordTests("testCoverCharacterization"))
    suiteSelect.addTest(TensorCodewordTests("testSliceCommutesWithUnion"))
    suiteSelect.addTest(TensorCodewordTests("testCodeMatrix"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = tensorCodewordSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
