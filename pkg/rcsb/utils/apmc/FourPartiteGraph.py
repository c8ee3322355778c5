##
# File:    FourPartiteGraph.py
# Author:  Dennis Piehl
# Date:    15-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Undirected 4-partite graph with sides A, B, C, D of equal size, stored as six
boolean adjacency matrices.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import numpy as np

from rcsb.utils.apmc.ApmcExceptions import GraphFormatError


class FourPartiteGraph(object):
    SIDE_PAIRS = ("AB", "BC", "CD", "AC", "BD", "AD")

    def __init__(self, nPerSide, edgeD=None):
        """
        Args:
            nPerSide (int): vertices per side
            edgeD (dict, optional): side pair (e.g. "AB") -> nPerSide x nPerSide 0/1 matrix, row index on the first side
        """
        self.nPerSide = nPerSide
        self.__edgeD = {}
        edgeD = edgeD or {}
        for pair in self.SIDE_PAIRS:
            mat = np.zeros((nPerSide, nPerSide), dtype=bool) if pair not in edgeD else np.array(edgeD[pair], dtype=bool)
            if mat.shape != (nPerSide, nPerSide):
                raise GraphFormatError("edge matrix %s has shape %r, expected %r" % (pair, mat.shape, (nPerSide, nPerSide)))
            self.__edgeD[pair] = mat

    @classmethod
    def random(cls, nPerSide, prob, seed):
        rng = np.random.default_rng(seed)
        return cls(nPerSide, {pair: rng.random((nPerSide, nPerSide)) < prob for pair in cls.SIDE_PAIRS})

    @classmethod
    def complete(cls, nPerSide):
        return cls(nPerSide, {pair: np.ones((nPerSide, nPerSide), dtype=bool) for pair in cls.SIDE_PAIRS})

    @classmethod
    def fromDict(cls, dD):
        try:
            return cls(int(dD["nPerSide"]), {pair: dD["edges"][pair] for pair in cls.SIDE_PAIRS})
        except (KeyError, TypeError, ValueError) as e:
            raise GraphFormatError("malformed 4-partite instance: %s" % str(e)) from e

    def toDict(self):
        return {"nPerSide": self.nPerSide, "edges": {pair: self.__edgeD[pair].astype(int).tolist() for pair in self.SIDE_PAIRS}}

    def matrix(self, pair):
        return self.__edgeD[pair]

    def hasEdge(self, pair, i, j):
        return bool(self.__edgeD[pair][i, j])

    def withEdge(self, pair, i, j, present):
        edgeD = {p: self.__edgeD[p].copy() for p in self.SIDE_PAIRS}
        edgeD[pair][i, j] = present
        return FourPartiteGraph(self.nPerSide, edgeD)

    def padded(self, nPerSide):
        """Add isolated vertices to every side up to nPerSide."""
        edgeD = {}
        for pair in self.SIDE_PAIRS:
            mat = np.zeros((nPerSide, nPerSide), dtype=bool)
            mat[: self.nPerSide, : self.nPerSide] = self.__edgeD[pair]
            edgeD[pair] = mat
        return FourPartiteGraph(nPerSide, edgeD)

    def edgeCount(self, pair):
        return int(self.__edgeD[pair].sum())
