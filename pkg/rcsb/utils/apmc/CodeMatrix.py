##
# File:    CodeMatrix.py
# Author:  Dennis Piehl
# Date:    15-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Sparse matrices of tensor codewords indexed by vertices, and the star product that lifts
both operands to a common space and multiplies them over the (OR, AND) semiring.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging

from rcsb.utils.apmc.ApmcExceptions import DimensionMismatchError
from rcsb.utils.apmc.TensorCodeword import TensorCodeword

logger = logging.getLogger(__name__)


class CodeMatrix(object):
    """Rows and columns are vertex lists; entries missing from the map are Absent (all-zero)."""

    def __init__(self, rowL, colL, dim, baseLen):
        self.rowL = list(rowL)
        self.colL = list(colL)
        self.dim = dim
        self.baseLen = baseLen
        self.__entryD = {}

    def set(self, row, col, cw):
        if cw.dim != self.dim or cw.baseLen != self.baseLen:
            raise DimensionMismatchError("entry (%d, %d) has shape (%d, %d), matrix expects (%d, %d)" % (row, col, cw.dim, cw.baseLen, self.dim, self.baseLen))
        if cw.isZero():
            self.__entryD.pop((row, col), None)
        else:
            self.__entryD[(row, col)] = cw

    def get(self, row, col):
        """The entry, or None when Absent."""
        return self.__entryD.get((row, col))

    def entry(self, row, col):
        cw = self.__entryD.get((row, col))
        return cw if cw is not None else TensorCodeword.zero(self.dim, self.baseLen)

    def rowEntries(self, row):
        return [(col, self.__entryD[(row, col)]) for col in self.colL if (row, col) in self.__entryD]

    def nonZeroCount(self):
        return len(self.__entryD)

    @staticmethod
    def starProduct(xM, yM):
        """Z[i, j] = OR over a of (X[i, a] x [q]^K2) AND ([q]^K1 x Y[a, j]).

        Raises:
            DimensionMismatchError: inner index lists or axis lengths differ
        """
        if xM.colL != yM.rowL:
            raise DimensionMismatchError("inner dimensions differ (%d versus %d indices)" % (len(xM.colL), len(yM.rowL)))
        if xM.baseLen != yM.baseLen:
            raise DimensionMismatchError("axis lengths %d and %d differ" % (xM.baseLen, yM.baseLen))
        zM = CodeMatrix(xM.rowL, yM.colL, xM.dim + yM.dim, xM.baseLen)
        yLiftD = {}
        for i in xM.rowL:
            accD = {}
            for a, xCw in xM.rowEntries(i):
                xLift = xCw.liftRight(yM.dim)
                for j, yCw in yM.rowEntries(a):
                    if (a, j) not in yLiftD:
                        yLiftD[(a, j)] = yCw.liftLeft(xM.dim)
                    accD.setdefault(j, []).append(xLift & yLiftD[(a, j)])
            for j, cwL in accD.items():
                boxL = [box for cw in cwL for box in cw.boxes]
                zM.set(i, j, TensorCodeword(zM.dim, zM.baseLen, boxL))
        return zM
