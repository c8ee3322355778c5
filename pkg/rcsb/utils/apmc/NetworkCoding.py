##
# File:    NetworkCoding.py
# Author:  Dennis Piehl
# Date:    16-Oct-2026
#
# Updates:
#   18-Oct-2026  dwp Subdivide arcs so that parallel arcs count with multiplicity; add the line-graph (arc capacity) mode
#
# To Do:
##

"""
Randomized k-bounded vertex connectivity by linear network coding over a prime field.

Random coefficients are placed on the arcs of a gadget graph and (I - K) is inverted
once; the vertex connectivity between two vertex sets equals (with high probability)
the rank of the corresponding submatrix of the inverse. Each source s gets a layer of k
fresh vertices feeding its out-neighbours and each sink t a layer of k vertices fed by
its in-neighbours, which caps every reported value at k.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging
import time

import galois
import numpy as np

from rcsb.utils.apmc.ApmcExceptions import SingularMatrixError
from rcsb.utils.apmc.MultiDigraph import MultiDigraph

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger(__name__)


class FieldMatrix(object):
    """Square or rectangular matrix over GF(p) backed by a galois FieldArray."""

    def __init__(self, field, array):
        self.field = field
        self.array = field(array) if not isinstance(array, field) else array

    @classmethod
    def zeros(cls, field, numRows, numCols):
        return cls(field, field.Zeros((numRows, numCols)))

    @classmethod
    def identity(cls, field, size):
        return cls(field, field.Identity(size))

    @property
    def shape(self):
        return self.array.shape

    @property
    def order(self):
        return self.field.order

    def entry(self, i, j):
        return int(self.array[i, j])

    def submatrix(self, rowL, colL):
        if not rowL or not colL:
            return FieldMatrix.zeros(self.field, len(rowL), len(colL))
        return FieldMatrix(self.field, self.array[np.ix_(rowL, colL)])

    def rank(self):
        if 0 in self.shape:
            return 0
        return int(np.linalg.matrix_rank(self.array))

    def __matmul__(self, other):
        return FieldMatrix(self.field, self.array @ other.array)

    def __sub__(self, other):
        return FieldMatrix(self.field, self.array - other.array)

    def __eq__(self, other):
        return isinstance(other, FieldMatrix) and self.order == other.order and self.shape == other.shape and bool(np.array_equal(self.array, other.array))

    def toList(self):
        return [[int(x) for x in row] for row in self.array]


class ConnectivityReport(object):
    """Capped connectivities per (s, t); a value of k means at least k."""

    def __init__(self, k, valueD, seed, retries):
        self.k = k
        self.valueD = dict(valueD)
        self.seed = seed
        self.retries = retries

    def value(self, s, t):
        return self.valueD[(s, t)]

    def pairs(self):
        return sorted(self.valueD)

    def toDict(self):
        return {"k": self.k, "seed": self.seed, "retries": self.retries, "values": {"%d->%d" % (s, t): v for (s, t), v in sorted(self.valueD.items())}}

    def __repr__(self):
        return "ConnectivityReport(k=%d, pairs=%d, seed=%r, retries=%d)" % (self.k, len(self.valueD), self.seed, self.retries)


class NetworkCoding(object):
    def __init__(self, **kwargs):
        """
        Args:
            prime (int, optional): field order. Defaults to 2**31 - 1.
            maxRetries (int, optional): reseeding attempts after a singular (I - K). Defaults to 3.
            arcCapacities (bool, optional): count arc-disjoint rather than vertex-disjoint paths. Defaults to False.
        """
        self.__prime = kwargs.get("prime", 2**31 - 1)
        self.__maxRetries = kwargs.get("maxRetries", 3)
        self.__arcCapacities = kwargs.get("arcCapacities", False)
        self.__field = galois.GF(self.__prime)

    @property
    def field(self):
        return self.__field

    def buildVertexCoefficients(self, g, seed):
        """n x n matrix with a uniform coefficient at (u, v) for every arc u -> v, zero elsewhere.

        Args:
            g (MultiDigraph): graph
            seed (int): random seed

        Returns:
            FieldMatrix: coefficient matrix K
        """
        rng = np.random.default_rng(seed)
        coeffs = np.zeros((g.n, g.n), dtype=np.int64)
        for _, tail, head in g.arcs:
            if coeffs[tail, head] == 0:
                coeffs[tail, head] = rng.integers(0, self.__prime, dtype=np.int64)
        return FieldMatrix(self.__field, coeffs)

    def invertIMinusK(self, kM):
        """(I - K)^-1 over GF(p).

        Raises:
            SingularMatrixError: when I - K is singular
        """
        size = kM.shape[0]
        if size == 0:
            return FieldMatrix.zeros(self.__field, 0, 0)
        aM = FieldMatrix.identity(self.__field, size) - kM
        try:
            return FieldMatrix(self.__field, np.linalg.inv(aM.array))
        except np.linalg.LinAlgError as e:
            raise SingularMatrixError("I - K of size %d is singular: %s" % (size, str(e)))

    def pairRank(self, fInv, g, s, t):
        """Rank of the inverse restricted to rows N_out(s) and columns N_in(t)."""
        if s == t:
            raise ValueError("source and target coincide (%r)" % s)
        return fInv.submatrix(sorted(g.outNeighbors(s)), sorted(g.inNeighbors(t))).rank()

    def __buildGadget(self, g, sourceL, sinkL, k):
        """The coded graph with source and sink layers.

        Vertex mode subdivides every arc, arc mode uses the line graph (one vertex per arc).

        Returns:
            (MultiDigraph, dict, dict): gadget graph, source -> layer vertices, sink -> layer vertices
        """
        arcL = []
        if self.__arcCapacities:
            midD = {aId: idx for idx, aId in enumerate(g.arcIds)}
            numBase = len(midD)
            for aId, _, head in g.arcs:
                for bId in g.outArcs(head):
                    arcL.append((midD[aId], midD[bId]))
        else:
            numBase = g.n + g.arcCount
            midD = {aId: g.n + idx for idx, aId in enumerate(g.arcIds)}
            for aId, tail, head in g.arcs:
                arcL.append((tail, midD[aId]))
                arcL.append((midD[aId], head))

        def outStart(v):
            return [midD[aId] for aId in g.outArcs(v)]

        def inEnd(v):
            return [midD[aId] for aId in g.inArcs(v)]

        nextId = numBase
        srcLayerD, snkLayerD = {}, {}
        for s in sourceL:
            layer = list(range(nextId, nextId + k))
            nextId += k
            srcLayerD[s] = layer
            for x in layer:
                if not self.__arcCapacities:
                    arcL.append((s, x))
                for y in outStart(s):
                    arcL.append((x, y))
        for t in sinkL:
            layer = list(range(nextId, nextId + k))
            nextId += k
            snkLayerD[t] = layer
            for x in layer:
                if not self.__arcCapacities:
                    arcL.append((x, t))
                for y in inEnd(t):
                    arcL.append((y, x))
        return MultiDigraph(nextId, arcL), srcLayerD, snkLayerD

    def kstmvc(self, g, sources, sinks, k, seed=0):
        """min(k, connectivity) for every s in sources and t in sinks with s != t.

        Args:
            g (MultiDigraph): digraph (cycles allowed)
            sources (iterable): source vertices
            sinks (iterable): sink vertices
            k (int): cap
            seed (int, optional): base seed; attempt r uses seed + r. Defaults to 0.

        Raises:
            SingularMatrixError: when (I - K) stays singular for maxRetries attempts

        Returns:
            ConnectivityReport: capped values
        """
        startTime = time.time()
        sourceL = sorted(set(sources))
        sinkL = sorted(set(sinks))
        if not sourceL or not sinkL:
            raise ValueError("source and sink sets must be non-empty")
        if k < 1:
            raise ValueError("cap k must be positive, got %r" % k)
        gadget, srcLayerD, snkLayerD = self.__buildGadget(g, sourceL, sinkL, k)
        fInv = None
        retries = 0
        for attempt in range(self.__maxRetries):
            try:
                fInv = self.invertIMinusK(self.buildVertexCoefficients(gadget, seed + attempt))
                break
            except SingularMatrixError as e:
                retries += 1
                logger.warning("Attempt %d with seed %d singular: %s", attempt, seed + attempt, str(e))
        if fInv is None:
            raise SingularMatrixError("I - K singular in %d attempts from seed %d" % (self.__maxRetries, seed))
        valueD = {}
        for s in sourceL:
            for t in sinkL:
                if s == t:
                    continue
                valueD[(s, t)] = min(k, fInv.submatrix(srcLayerD[s], snkLayerD[t]).rank())
        logger.info("Completed %d-bounded connectivity for %d pairs on a gadget of %d vertices (%.4f seconds)", k, len(valueD), gadget.n, time.time() - startTime)
        return ConnectivityReport(k, valueD, seed + retries, retries)

    def kapmvc(self, g, k, seed=0):
        """kstmvc with every vertex as source and sink."""
        if g.n == 0:
            return ConnectivityReport(k, {}, seed, 0)
        return self.kstmvc(g, range(g.n), range(g.n), k, seed=seed)
