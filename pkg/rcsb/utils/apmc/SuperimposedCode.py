##
# File:    SuperimposedCode.py
# Author:  Dennis Piehl
# Date:    14-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Superimposed binary codes over the universe [0, u) with codewords held as integer bitsets
over [0, q):

    KautzSingletonCode  Reed-Solomon based d-superimposed code over a prime field (galois)
    ParityCode          1-superimposed code, every bit followed by its complement
    FastCode            the tensor product of the two, decodable column by column

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import itertools
import logging

import galois
import numpy as np

from rcsb.utils.apmc.ApmcExceptions import NotACodewordError, NotDecodableError, ParameterOverflowError

logger = logging.getLogger(__name__)


class SuperimposedCode(object):
    """Common interface: encode, encodeSet and decode over integer bitsets."""

    def __init__(self, u, q, d):
        self.u = u
        self.q = q
        self.d = d

    def encode(self, x):
        raise NotImplementedError

    def encodeSet(self, elements):
        bits = 0
        for x in elements:
            bits |= self.encode(x)
        return bits

    def decode(self, bits):
        raise NotImplementedError

    def isSuperimposed(self, d=None):
        """Exhaustive check that no codeword is covered by the union of d others (small u only)."""
        d = d if d is not None else self.d
        wordL = [self.encode(x) for x in range(self.u)]
        for size in range(0, d + 1):
            for subset in itertools.combinations(range(self.u), size):
                union = self.encodeSet(subset)
                for y in range(self.u):
                    if y not in subset and wordL[y] & ~union == 0:
                        return False
        return True

    def __repr__(self):
        return "%s(u=%d, q=%d, d=%d)" % (self.__class__.__name__, self.u, self.q, self.d)


class KautzSingletonCode(SuperimposedCode):
    """Element x, written in base Q with l digits, is the polynomial f_x of degree < l over GF(Q);
    its codeword sets bit i*Q + f_x(i) for every i in GF(Q).

    Two distinct polynomials agree on at most l - 1 points, so Q > d(l - 1) makes the code
    d-superimposed.
    """

    def __init__(self, d, u, maxPrime=2**16):
        if d < 1 or u < 2:
            raise ValueError("need d >= 1 and u >= 2, got d=%r u=%r" % (d, u))
        fieldSize, numDigits = self.__chooseParameters(d, u, maxPrime)
        super(KautzSingletonCode, self).__init__(u, fieldSize * fieldSize, d)
        self.fieldSize = fieldSize
        self.numDigits = numDigits
        GF = galois.GF(fieldSize)
        digits = np.zeros((u, numDigits), dtype=int)
        for x in range(u):
            rem = x
            for j in range(numDigits):
                digits[x, j] = rem % fieldSize
                rem //= fieldSize
        points = GF(np.arange(fieldSize))
        vandermonde = GF(np.stack([np.array(points**j, dtype=int) for j in range(numDigits)]))
        evals = np.array(GF(digits) @ vandermonde, dtype=int)
        self.__wordL = []
        for x in range(u):
            bits = 0
            for i in range(fieldSize):
                bits |= 1 << (i * fieldSize + int(evals[x, i]))
            self.__wordL.append(bits)
        logger.debug("Kautz-Singleton code u=%d d=%d Q=%d l=%d", u, d, fieldSize, numDigits)

    @staticmethod
    def __chooseParameters(d, u, maxPrime):
        fieldSize = 2
        while fieldSize <= maxPrime:
            numDigits = 1
            while fieldSize**numDigits < u:
                numDigits += 1
            if fieldSize >= d * (numDigits - 1) + 1:
                return fieldSize, numDigits
            fieldSize = int(galois.next_prime(fieldSize))
        raise ParameterOverflowError("no prime field up to %d supports d=%d u=%d" % (maxPrime, d, u))

    def encode(self, x):
        return self.__wordL[x]

    def decode(self, bits):
        """The set X with |X| <= d whose codeword union is exactly bits.

        Raises:
            NotDecodableError: bits is not such a union
        """
        found = [x for x in range(self.u) if self.__wordL[x] & ~bits == 0]
        if len(found) > self.d or self.encodeSet(found) != bits:
            raise NotDecodableError("bitset is not the union of at most %d codewords" % self.d)
        return frozenset(found)


class ParityCode(SuperimposedCode):
    """b two-bit blocks, most significant bit first; block i is (bit_i, 1 - bit_i)."""

    def __init__(self, u):
        if u < 2:
            raise ValueError("need u >= 2, got %r" % u)
        self.numBits = max(1, (u - 1).bit_length())
        super(ParityCode, self).__init__(u, 2 * self.numBits, 1)

    def encode(self, x):
        bits = 0
        for i in range(self.numBits):
            bit = (x >> (self.numBits - 1 - i)) & 1
            bits |= 1 << (2 * i + (0 if bit else 1))
        return bits

    def decode(self, bits):
        """Element whose codeword is exactly bits.

        Raises:
            NotACodewordError: a block is (0,0) or (1,1), or the value lies outside [0, u)
        """
        x = 0
        for i in range(self.numBits):
            block = (bits >> (2 * i)) & 3
            if block == 1:
                x = (x << 1) | 1
            elif block == 2:
                x <<= 1
            else:
                raise NotACodewordError("block %d reads %s" % (i, "(1,1)" if block == 3 else "(0,0)"))
        if bits >> (2 * self.numBits) or x >= self.u:
            raise NotACodewordError("bitset does not encode an element of [0, %d)" % self.u)
        return x


class FastCode(SuperimposedCode):
    """Kautz-Singleton code tensored with the parity code; bit (i, j) sits at i * qInner + j."""

    def __init__(self, d, u, maxPrime=2**16):
        self.outer = KautzSingletonCode(d, u, maxPrime=maxPrime)
        self.inner = ParityCode(u)
        super(FastCode, self).__init__(u, self.outer.q * self.inner.q, d)
        self.__columnMask = (1 << self.inner.q) - 1
        self.__wordL = []
        for x in range(u):
            column = self.inner.encode(x)
            bits = 0
            outerBits = self.outer.encode(x)
            i = 0
            while outerBits:
                if outerBits & 1:
                    bits |= column << (i * self.inner.q)
                outerBits >>= 1
                i += 1
            self.__wordL.append(bits)

    def encode(self, x):
        return self.__wordL[x]

    def decode(self, bits):
        """Decode every column that is a proper parity codeword, then verify the reconstruction.

        Raises:
            NotDecodableError: the reconstruction differs from bits or has more than d elements
        """
        if bits == 0:
            return frozenset()
        found = set()
        for i in range(self.outer.q):
            column = (bits >> (i * self.inner.q)) & self.__columnMask
            if not column:
                continue
            try:
                found.add(self.inner.decode(column))
            except NotACodewordError:
                continue
        if len(found) > self.d or self.encodeSet(found) != bits:
            raise NotDecodableError("bitset is not the union of at most %d codewords" % self.d)
        return frozenset(found)
