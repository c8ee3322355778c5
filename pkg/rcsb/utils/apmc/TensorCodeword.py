##
# File:    TensorCodeword.py
# Author:  Dennis Piehl
# Date:    14-Oct-2026
#
# Updates:
#   19-Oct-2026  dwp Collapse over slice unions of the codeword alone with a codeword weight bound
#
# To Do:
##

"""
Tensor-power codewords over [q]^K and the slice-collapse decoder for Witness Superset
instances given as the union of encoded set families.

A TensorCodeword is a union of product boxes C_1 x ... x C_K, each C_i an integer bitset
over [0, q). Encoded families are single boxes, so unions, intersections of lifted
operands and slices all stay in this form without materializing q^K bits.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import itertools
import logging

from rcsb.utils.apmc.ApmcExceptions import DimensionMismatchError, EmptyFamilyError, LimitExceededError, NotACodewordError, NotDecodableError, TooLargeError
from rcsb.utils.apmc.CutFamily import cutKey

logger = logging.getLogger(__name__)


class TensorCodeword(object):
    MAX_FLAT_BITS = 2**26

    def __init__(self, dim, baseLen, boxes=(), canonical=True):
        """
        Args:
            dim (int): number of axes K
            baseLen (int): axis length q
            boxes (iterable, optional): tuples of dim integer bitsets
            canonical (bool, optional): drop empty, duplicate and subsumed boxes. Defaults to True.
        """
        if dim < 0:
            raise ValueError("negative dimension %r" % dim)
        self.dim = dim
        self.baseLen = baseLen
        boxL = [tuple(box) for box in boxes]
        for box in boxL:
            if len(box) != dim:
                raise DimensionMismatchError("box of dimension %d in a %d-dimensional codeword" % (len(box), dim))
        self.boxes = self.__canonical(boxL) if canonical else tuple(boxL)

    @staticmethod
    def __canonical(boxL):
        boxL = sorted({box for box in boxL if all(box)})
        # larger boxes first so that subsumed ones are found against survivors
        boxL.sort(key=lambda box: -sum(bin(comp).count("1") for comp in box))
        keepL = []
        for box in boxL:
            if not any(all(comp & ~other[i] == 0 for i, comp in enumerate(box)) for other in keepL):
                keepL.append(box)
        return tuple(sorted(keepL))

    @classmethod
    def zero(cls, dim, baseLen):
        return cls(dim, baseLen)

    @classmethod
    def full(cls, dim, baseLen):
        return cls(dim, baseLen, [tuple([(1 << baseLen) - 1] * dim)])

    @classmethod
    def fromProduct(cls, components, baseLen):
        return cls(len(components), baseLen, [tuple(components)])

    @classmethod
    def encodeFamily(cls, code, K, family):
        """Encode a set family with one axis per member, padding with the first member up to K.

        Raises:
            EmptyFamilyError: family has no members
            LimitExceededError: family has more than K members
        """
        memberL = [frozenset(member) for member in family]
        if not memberL:
            raise EmptyFamilyError("cannot encode an empty family")
        if len(memberL) > K:
            raise LimitExceededError("family of %d members exceeds tensor dimension %d" % (len(memberL), K))
        memberL += [memberL[0]] * (K - len(memberL))
        return cls.fromProduct([code.encodeSet(member) for member in memberL], code.q)

    def __check(self, other):
        if self.dim != other.dim or self.baseLen != other.baseLen:
            raise DimensionMismatchError("(%d, %d) versus (%d, %d)" % (self.dim, self.baseLen, other.dim, other.baseLen))

    def isZero(self):
        return not self.boxes

    def isFull(self):
        fullBits = (1 << self.baseLen) - 1
        return any(all(comp == fullBits for comp in box) for box in self.boxes)

    def __or__(self, other):
        self.__check(other)
        return TensorCodeword(self.dim, self.baseLen, self.boxes + other.boxes)

    def __and__(self, other):
        self.__check(other)
        return TensorCodeword(self.dim, self.baseLen, [tuple(c1 & c2 for c1, c2 in zip(b1, b2)) for b1 in self.boxes for b2 in other.boxes])

    def product(self, other):
        """The Cartesian product self x other on dim + other.dim axes."""
        if self.baseLen != other.baseLen:
            raise DimensionMismatchError("axis lengths %d and %d differ" % (self.baseLen, other.baseLen))
        return TensorCodeword(self.dim + other.dim, self.baseLen, [b1 + b2 for b1 in self.boxes for b2 in other.boxes])

    def liftRight(self, extra):
        """self x [q]^extra."""
        return self.product(TensorCodeword.full(extra, self.baseLen))

    def liftLeft(self, extra):
        """[q]^extra x self."""
        return TensorCodeword.full(extra, self.baseLen).product(self)

    def slice(self, axis, value):
        """Points whose coordinate on axis equals value, with that coordinate removed."""
        if not 0 <= axis < self.dim or not 0 <= value < self.baseLen:
            raise ValueError("slice (%r, %r) outside dim %d / length %d" % (axis, value, self.dim, self.baseLen))
        bit = 1 << value
        return TensorCodeword(self.dim - 1, self.baseLen, [box[:axis] + box[axis + 1 :] for box in self.boxes if box[axis] & bit])

    def diagonal(self):
        """Bitset of all r with (r, ..., r) in the codeword."""
        bits = 0
        for box in self.boxes:
            common = (1 << self.baseLen) - 1
            for comp in box:
                common &= comp
            bits |= common
        return bits

    def axisSupport(self, axis):
        """Values that occur on the given axis, in increasing order."""
        bits = 0
        for box in self.boxes:
            bits |= box[axis]
        return [c for c in range(self.baseLen) if (bits >> c) & 1]

    def components(self):
        """Union over all axes of the box components (the one-dimensional collapse)."""
        bits = 0
        for box in self.boxes:
            for comp in box:
                bits |= comp
        return bits

    def missesComplementPower(self, bits):
        """True when the codeword does not meet ([q] minus bits)^K, i.e. every box has a component inside bits."""
        return all(any(comp & ~bits == 0 for comp in box) for box in self.boxes)

    def contains(self, point):
        return any(all((comp >> c) & 1 for comp, c in zip(box, point)) for box in self.boxes)

    def toBitset(self):
        """Row-major flat bitset over [q]^K (first axis most significant).

        Raises:
            TooLargeError: when q^K exceeds MAX_FLAT_BITS
        """
        if self.baseLen**self.dim > self.MAX_FLAT_BITS:
            raise TooLargeError("flat codeword of %d^%d bits exceeds %d" % (self.baseLen, self.dim, self.MAX_FLAT_BITS))
        bits = 0
        for box in self.boxes:
            axisL = [[c for c in range(self.baseLen) if (comp >> c) & 1] for comp in box]
            for point in itertools.product(*axisL):
                idx = 0
                for c in point:
                    idx = idx * self.baseLen + c
                bits |= 1 << idx
        return bits

    @classmethod
    def fromBitset(cls, dim, baseLen, bits):
        """One single-point box per set bit of a row-major flat bitset."""
        if baseLen**dim > cls.MAX_FLAT_BITS:
            raise TooLargeError("flat codeword of %d^%d bits exceeds %d" % (baseLen, dim, cls.MAX_FLAT_BITS))
        boxL = []
        idx = 0
        while bits:
            if bits & 1:
                point, rem = [], idx
                for _ in range(dim):
                    point.append(rem % baseLen)
                    rem //= baseLen
                boxL.append(tuple(1 << c for c in reversed(point)))
            bits >>= 1
            idx += 1
        return cls(dim, baseLen, boxL)

    def sameSet(self, other):
        return self.dim == other.dim and self.baseLen == other.baseLen and self.toBitset() == other.toBitset()

    def key(self):
        return (self.dim, self.boxes)

    def __eq__(self, other):
        return isinstance(other, TensorCodeword) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "TensorCodeword(dim=%d, q=%d, boxes=%d)" % (self.dim, self.baseLen, len(self.boxes))


class WitnessDecoder(object):
    """All minimal <=k witness sets of the instance whose encoded families were OR-ed into a codeword."""

    def __init__(self, code, K, k):
        if k > code.d:
            raise LimitExceededError("witness size %d exceeds the code's superimposition order %d" % (k, code.d))
        self.__code = code
        self.__K = K
        self.__k = k
        # a decodable union of at most k codewords never has more set bits than this
        self.__maxWeight = k * max((bin(code.encode(x)).count("1") for x in range(code.u)), default=0)

    def encodeInstance(self, families):
        """OR of the encodings of every family."""
        cw = TensorCodeword.zero(self.__K, self.__code.q)
        for family in families:
            cw = cw | TensorCodeword.encodeFamily(self.__code, self.__K, family)
        return cw

    def decodeWitness(self, cw):
        """Collapse the codeword slice by slice, then decode and check every collapsed bitset.

        Args:
            cw (TensorCodeword): union of encoded families

        Returns:
            list: witness sets (frozenset), canonically sorted
        """
        code = self.__code
        k = self.__k
        memoD = {}
        collapsedS = self.collapse(cw, memoD=memoD)
        solutionS = set()
        for bits in collapsedS:
            try:
                wS = code.decode(bits)
            except (NotACodewordError, NotDecodableError):
                continue
            if len(wS) > k or not cw.missesComplementPower(bits):
                continue
            if any(cw.missesComplementPower(code.encodeSet(wS - {x})) for x in wS):
                continue
            solutionS.add(wS)
        logger.debug("collapsed %d bitsets (%d memo entries) into %d witnesses", len(collapsedS), len(memoD), len(solutionS))
        return sorted(solutionS, key=cutKey)

    def collapse(self, cw, memoD=None):
        """One-dimensional bitsets reached by OR-ing at most k slices per level down to a single axis.

        Each level adds the diagonal of its input to every bitset returned from below. Bitsets
        heavier than k codewords can hold are dropped, since they only grow on the way up.

        Args:
            cw (TensorCodeword): codeword to collapse
            memoD (dict, optional): results keyed by codeword, shared across calls

        Returns:
            set: integer bitsets over [0, q)
        """
        memoD = memoD if memoD is not None else {}
        key = cw.key()
        if key in memoD:
            return memoD[key]
        resultS = set()
        if cw.dim <= 1:
            bits = cw.components()
            if self.__light(bits):
                resultS.add(bits)
            memoD[key] = resultS
            return resultS
        diag = cw.diagonal()
        if not self.__light(diag):
            memoD[key] = resultS
            return resultS
        sliceD = {}
        for axis in range(cw.dim):
            for value in cw.axisSupport(axis):
                sl = cw.slice(axis, value)
                if not sl.isZero():
                    sliceD.setdefault(sl.key(), sl)
        sliceL = [sliceD[sKey] for sKey in sorted(sliceD)]
        unionD = {}
        zero = TensorCodeword.zero(cw.dim - 1, cw.baseLen)
        unionD[zero.key()] = zero
        for size in range(1, self.__k + 1):
            for combo in itertools.combinations(range(len(sliceL)), size):
                union = TensorCodeword(cw.dim - 1, cw.baseLen, [box for idx in combo for box in sliceL[idx].boxes])
                unionD.setdefault(union.key(), union)
        for uKey in sorted(unionD):
            for bits in self.collapse(unionD[uKey], memoD=memoD):
                bits |= diag
                if self.__light(bits):
                    resultS.add(bits)
        memoD[key] = resultS
        return resultS

    def __light(self, bits):
        return bin(bits).count("1") <= self.__maxWeight
