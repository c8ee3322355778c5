##
# File:    GraphIo.py
# Author:  Dennis Piehl
# Date:    12-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Reader and writer for the line-oriented graph file format:

    c <comment>
    p <n> <m>
    a <tail> <head>      (m lines, arc identifiers 0..m-1 in file order)

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging
import os

from rcsb.utils.io.FileUtil import FileUtil
from rcsb.utils.io.MarshalUtil import MarshalUtil

from rcsb.utils.apmc.ApmcExceptions import GraphFormatError, InvalidGraphError
from rcsb.utils.apmc.MultiDigraph import MultiDigraph

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger(__name__)


class GraphIo(object):
    def __init__(self, **kwargs):
        self.__workPath = kwargs.get("workPath", None)
        self.__mU = MarshalUtil(workPath=self.__workPath)
        self.__fU = FileUtil(workPath=self.__workPath)

    def readGraph(self, filePath):
        """Read a graph file.

        Raises:
            GraphFormatError: missing file or malformed content
        """
        if not filePath or not self.__mU.exists(filePath):
            raise GraphFormatError("graph file %r does not exist" % filePath)
        lineList = self.__mU.doImport(filePath, fmt="list")
        if lineList is None:
            raise GraphFormatError("graph file %r could not be read" % filePath)
        return self.parseLines(lineList)

    def parseLines(self, lineList):
        n, m = None, None
        arcL = []
        for lineNo, line in enumerate(lineList, start=1):
            fields = line.strip().split()
            if not fields or fields[0] == "c":
                continue
            try:
                if fields[0] == "p":
                    if n is not None or len(fields) != 3:
                        raise GraphFormatError("line %d: bad or repeated header" % lineNo)
                    n, m = int(fields[1]), int(fields[2])
                elif fields[0] == "a":
                    if n is None or len(fields) != 3:
                        raise GraphFormatError("line %d: arc before header or wrong field count" % lineNo)
                    arcL.append((int(fields[1]), int(fields[2])))
                else:
                    raise GraphFormatError("line %d: unknown record type %r" % (lineNo, fields[0]))
            except ValueError as e:
                raise GraphFormatError("line %d: %s" % (lineNo, str(e))) from e
        if n is None:
            raise GraphFormatError("missing 'p <n> <m>' header")
        if len(arcL) != m:
            raise GraphFormatError("header declares %d arcs but %d were read" % (m, len(arcL)))
        try:
            return MultiDigraph(n, arcL)
        except InvalidGraphError as e:
            raise GraphFormatError(str(e)) from e

    def formatLines(self, g, commentList=None):
        """Serialize g; arc identifiers are re-assigned 0..m-1 in identifier order."""
        lineList = ["c %s" % comment for comment in (commentList or [])]
        lineList.append("p %d %d" % (g.n, g.arcCount))
        lineList.extend("a %d %d" % (tail, head) for _, tail, head in g.arcs)
        return lineList

    def writeGraph(self, filePath, g, commentList=None):
        dirPath = os.path.dirname(filePath)
        if dirPath and not self.__fU.exists(dirPath):
            self.__fU.mkdir(dirPath)
        ok = self.__mU.doExport(filePath, self.formatLines(g, commentList), fmt="list")
        logger.debug("Exported graph n=%d m=%d to %s status %r", g.n, g.arcCount, filePath, ok)
        return ok
