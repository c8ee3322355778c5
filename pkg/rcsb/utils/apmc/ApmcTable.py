##
# File:    ApmcTable.py
# Author:  Dennis Piehl
# Date:    13-Oct-2026
#
# Updates:
#
# To Do:
##

"""
All-pairs table of extremal <=k-cut families with derived k-capped min-cut values.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging

from rcsb.utils.apmc.ApmcExceptions import GraphFormatError
from rcsb.utils.apmc.CutFamily import Cut, CutFamily

logger = logging.getLogger(__name__)


class ApmcTable(object):
    """Families for every ordered pair (s, t), s != t, of an n-vertex graph."""

    ABOVE_K = -1

    def __init__(self, n, k, kind=CutFamily.LATEST):
        self.n = n
        self.k = k
        self.kind = kind
        self.__familyD = {}

    def setFamily(self, s, t, family):
        if s == t:
            raise ValueError("diagonal pair (%d, %d) has no family" % (s, t))
        self.__familyD[(s, t)] = family

    def getFamily(self, s, t):
        return self.__familyD.get((s, t))

    def pairs(self):
        return [(s, t) for s in range(self.n) for t in range(self.n) if s != t]

    def value(self, s, t):
        """0 for unreachable, the smallest cut size up to k, ABOVE_K when no <=k-cut exists; None on the diagonal."""
        if s == t:
            return None
        family = self.__familyD[(s, t)]
        if family.isEmpty():
            return self.ABOVE_K
        return family.minSize()

    def valueMatrix(self):
        return [[self.value(s, t) for t in range(self.n)] for s in range(self.n)]

    def formatValueLines(self):
        return self.formatMatrixLines(self.valueMatrix(), self.k)

    @classmethod
    def formatMatrixLines(cls, valueMatrix, k):
        """Tab-separated rows with '-' on the diagonal and '>k' above the bound."""
        lineL = []
        for rowL in valueMatrix:
            fieldL = []
            for val in rowL:
                if val is None:
                    fieldL.append("-")
                elif val == cls.ABOVE_K:
                    fieldL.append(">%d" % k)
                else:
                    fieldL.append(str(val))
            lineL.append("\t".join(fieldL))
        return lineL

    def witnessDict(self):
        return {"%d->%d" % (s, t): self.__familyD[(s, t)].asLists() for s, t in self.pairs()}

    @classmethod
    def fromWitnessDict(cls, n, k, witnessD, kind=CutFamily.LATEST):
        """Rebuild a table from witnessDict() output; pair orders are not recoverable and default to identity."""
        table = cls(n, k, kind=kind)
        try:
            for key, cutLL in witnessD.items():
                sStr, tStr = key.split("->")
                table.setFamily(int(sStr), int(tStr), CutFamily([Cut(arcL) for arcL in cutLL], kind=kind, k=k))
        except (ValueError, AttributeError, TypeError) as e:
            raise GraphFormatError("malformed witness dictionary: %s" % str(e)) from e
        return table

    def restrict(self, k):
        table = ApmcTable(self.n, k, kind=self.kind)
        for (s, t), family in self.__familyD.items():
            table.setFamily(s, t, family.restrict(k))
        return table

    def firstDifference(self, other, compareFamilies=True):
        """The first pair (row-major) whose value or cut set differs, or None."""
        for s, t in self.pairs():
            if self.value(s, t) != other.value(s, t):
                return (s, t)
            if compareFamilies and not self.__familyD[(s, t)].sameCuts(other.getFamily(s, t)):
                return (s, t)
        return None

    def __eq__(self, other):
        return isinstance(other, ApmcTable) and self.n == other.n and self.firstDifference(other) is None

    def __hash__(self):
        return hash((self.n, self.k, self.kind))
