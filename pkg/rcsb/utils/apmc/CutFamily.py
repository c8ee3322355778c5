##
# File:    CutFamily.py
# Author:  Dennis Piehl
# Date:    12-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Cut and CutFamily value types shared by the oracles and the all-pairs algorithms.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"


def cutKey(arcs):
    """Canonical sort key for arc-id sets: size first, then sorted identifiers."""
    return (len(arcs), tuple(sorted(arcs)))


class Cut(object):
    """A set of arc identifiers, optionally with its source side S_M and target side T_M."""

    def __init__(self, arcs, sourceSide=None, targetSide=None):
        self.arcs = frozenset(arcs)
        self.sourceSide = frozenset(sourceSide) if sourceSide is not None else None
        self.targetSide = frozenset(targetSide) if targetSide is not None else None

    @property
    def size(self):
        return len(self.arcs)

    def key(self):
        return cutKey(self.arcs)

    def asList(self):
        return sorted(self.arcs)

    def laterThan(self, other):
        """T_self is contained in T_other."""
        return self.targetSide <= other.targetSide

    def strictlyLaterThan(self, other):
        return self.targetSide < other.targetSide

    def earlierThan(self, other):
        """S_self is contained in S_other."""
        return self.sourceSide <= other.sourceSide

    def strictlyEarlierThan(self, other):
        return self.sourceSide < other.sourceSide

    def __eq__(self, other):
        return isinstance(other, Cut) and self.arcs == other.arcs

    def __hash__(self):
        return hash(self.arcs)

    def __repr__(self):
        return "Cut(%r)" % self.asList()


class CutFamily(object):
    """Extremal cuts of one (s, t) pair with the pairwise order materialized.

    Cuts are kept in canonical order (size, sorted identifiers). For a family of kind
    "latest", orderMatrix[i][j] is True when cuts[i] is later than or equal to cuts[j];
    for kind "earliest" it is the earlier-than relation.

    The family [empty cut] stands for an unreachable target; the empty family means that
    no extremal cut of size <= k exists although the target is reachable.
    """

    LATEST = "latest"
    EARLIEST = "earliest"

    def __init__(self, cuts, orderMatrix=None, kind=LATEST, k=None):
        pairL = sorted(enumerate(cuts), key=lambda tup: tup[1].key())
        self.cuts = [cut for _, cut in pairL]
        self.kind = kind
        self.k = k
        if orderMatrix is None:
            self.orderMatrix = [[i == j for j in range(len(self.cuts))] for i in range(len(self.cuts))]
        else:
            idxL = [i for i, _ in pairL]
            self.orderMatrix = [[bool(orderMatrix[i][j]) for j in idxL] for i in idxL]

    @classmethod
    def unreachable(cls, kind=LATEST, k=None):
        return cls([Cut(())], kind=kind, k=k)

    @classmethod
    def fromSides(cls, cuts, kind=LATEST, k=None):
        """Build the order from the cut sides (target sides for latest, source sides for earliest)."""
        if kind == cls.LATEST:
            orderMatrix = [[c1.laterThan(c2) for c2 in cuts] for c1 in cuts]
        else:
            orderMatrix = [[c1.earlierThan(c2) for c2 in cuts] for c1 in cuts]
        return cls(cuts, orderMatrix, kind=kind, k=k)

    def __len__(self):
        return len(self.cuts)

    def __iter__(self):
        return iter(self.cuts)

    def isUnreachable(self):
        return len(self.cuts) == 1 and not self.cuts[0].arcs

    def isEmpty(self):
        return not self.cuts

    def minSize(self):
        return self.cuts[0].size if self.cuts else None

    def arcSets(self):
        return [cut.arcs for cut in self.cuts]

    def asLists(self):
        return [cut.asList() for cut in self.cuts]

    def sizeCounts(self):
        countD = {}
        for cut in self.cuts:
            countD[cut.size] = countD.get(cut.size, 0) + 1
        return countD

    def indexOf(self, arcs):
        arcs = frozenset(arcs)
        for i, cut in enumerate(self.cuts):
            if cut.arcs == arcs:
                return i
        return -1

    def atLeast(self, i, j):
        """cuts[i] is at least as extremal as cuts[j] (later or equal for latest families)."""
        return self.orderMatrix[i][j]

    def restrict(self, k):
        """The sub-family of cuts with at most k arcs (an extremal <=k cut stays extremal for smaller k)."""
        idxL = [i for i, cut in enumerate(self.cuts) if cut.size <= k]
        return CutFamily([self.cuts[i] for i in idxL], [[self.orderMatrix[i][j] for j in idxL] for i in idxL], kind=self.kind, k=k)

    def sameCuts(self, other):
        return sorted(cut.key() for cut in self.cuts) == sorted(cut.key() for cut in other.cuts)

    def __repr__(self):
        return "CutFamily(%s, k=%r, %r)" % (self.kind, self.k, self.asLists())
