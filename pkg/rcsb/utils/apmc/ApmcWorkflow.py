##
# File:    ApmcWorkflow.py
# Author:  Dennis Piehl
# Date:    17-Oct-2026
#
# Updates:
#   18-Oct-2026  dwp Map failures to command exit codes in run()
#
# To Do:
##

"""
Workflow wrapper behind the command-line interface: run configuration, algorithm
selection, value matrices and witness output, instance generation, network-coding
reports and the 4-clique reductions.

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import json
import logging
import os
import sys
import time

from rcsb.utils.config.ConfigUtil import ConfigUtil
from rcsb.utils.io.FileUtil import FileUtil
from rcsb.utils.io.MarshalUtil import MarshalUtil
from rcsb.utils.multiproc.MultiProcUtil import MultiProcUtil

from rcsb.utils.apmc.ApmcExceptions import CyclicGraphError, GraphFormatError, LimitExceededError, SingularMatrixError, TooLargeError
from rcsb.utils.apmc.ApmcIterative import ApmcIterative
from rcsb.utils.apmc.ApmcRecursive import ApmcRecursive
from rcsb.utils.apmc.ApmcTable import ApmcTable
from rcsb.utils.apmc.ApmcVerifier import ApmcVerifier
from rcsb.utils.apmc.CliqueReduction import CliqueReduction, netcodingSolver, oracleSolver
from rcsb.utils.apmc.CutStructure import CutStructure
from rcsb.utils.apmc.FlowOracle import FlowOracle
from rcsb.utils.apmc.FourPartiteGraph import FourPartiteGraph
from rcsb.utils.apmc.GraphIo import GraphIo
from rcsb.utils.apmc.InstanceGenerator import InstanceGenerator
from rcsb.utils.apmc.MultiDigraph import MultiDigraph
from rcsb.utils.apmc.NetworkCoding import NetworkCoding

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_STRUCTURAL = 3
EXIT_DIVERGENCE = 4


class RunConfig(object):
    """Settings of one command; explicit keyword values override the configuration file, which overrides defaults."""

    ALGORITHMS = ("oracle", "iterative", "recursive", "netcoding")
    FORMATS = ("tsv", "json")
    # configuration key -> (attribute, default)
    CONFIG_KEYS = {
        "K_BOUND": ("k", 2),
        "MAX_TENSOR_DIM": ("maxK", 4),
        "FIELD_PRIME": ("prime", 2**31 - 1),
        "MAX_RETRIES": ("maxRetries", 3),
        "NUM_PROC": ("numProc", 1),
        "CHUNK_SIZE": ("chunkSize", 10),
    }

    def __init__(self, command, configPath=None, sectionName="apmc_configuration", **kwargs):
        self.command = command
        settingD = {attr: default for attr, default in self.CONFIG_KEYS.values()}
        if configPath:
            cfgOb = ConfigUtil(configPath=configPath, defaultSectionName=sectionName)
            for key, (attr, default) in self.CONFIG_KEYS.items():
                settingD[attr] = int(cfgOb.get(key, default=default, sectionName=sectionName))
        for attr in settingD:
            if kwargs.get(attr) is not None:
                settingD[attr] = kwargs[attr]
        self.k = settingD["k"]
        self.maxK = settingD["maxK"]
        self.prime = settingD["prime"]
        self.maxRetries = settingD["maxRetries"]
        self.numProc = settingD["numProc"]
        self.chunkSize = settingD["chunkSize"]
        self.inputPath = kwargs.get("inputPath")
        self.outputPath = kwargs.get("outputPath")
        self.seed = kwargs.get("seed") if kwargs.get("seed") is not None else 0
        self.algorithm = kwargs.get("algorithm") or "iterative"
        self.vertexCapacities = bool(kwargs.get("vertexCapacities", False))
        self.outputFormat = kwargs.get("outputFormat") or "tsv"
        self.optionD = {key: val for key, val in kwargs.items() if not hasattr(self, key)}

    def get(self, name, default=None):
        val = self.optionD.get(name)
        return default if val is None else val

    def validate(self):
        """Raises ValueError or GraphFormatError for settings a command cannot run with."""
        if self.k < 1:
            raise ValueError("k must be at least 1, got %r" % self.k)
        if self.algorithm not in self.ALGORITHMS:
            raise ValueError("unknown algorithm %r" % self.algorithm)
        if self.outputFormat not in self.FORMATS:
            raise ValueError("unknown output format %r" % self.outputFormat)
        if self.inputPath and not os.path.exists(self.inputPath):
            raise GraphFormatError("input path %r does not exist" % self.inputPath)
        return True

    def __repr__(self):
        return "RunConfig(command=%r, k=%r, algorithm=%r, numProc=%r)" % (self.command, self.k, self.algorithm, self.numProc)


class OracleWorker(object):
    """Worker computing one row of the k-capped flow-oracle value matrix per source vertex."""

    def __init__(self, **kwargs):
        _ = kwargs

    def valueRows(self, dataList, procName, optionsD, workingDir):
        """Rows of the capped oracle matrix for the given sources.

        Args:
            dataList (list): source vertices
            procName (str): worker process name
            optionsD (dict): "n", "arcTriples", "k", "vertexCapacities"
            workingDir (str): path to working directory

        Returns:
            successList (list): sources processed
            retList (list): (source, row) pairs
            diagList (list): unique diagnostics
        """
        _ = workingDir
        successList = []
        retList = []
        diagList = []
        try:
            g = MultiDigraph.fromArcTriples(optionsD["n"], optionsD["arcTriples"])
            k = optionsD["k"]
            fO = FlowOracle(g)
            for s in dataList:
                rowL = []
                for t in range(g.n):
                    if s == t:
                        rowL.append(None)
                        continue
                    val = fO.vertexConnectivityBounded(s, t, k + 1) if optionsD.get("vertexCapacities") else fO.maxFlowBounded(s, t, k + 1).value
                    rowL.append(ApmcTable.ABOVE_K if val > k else val)
                retList.append((s, rowL))
                successList.append(s)
        except Exception as e:
            logger.exception("%s failing with %s", procName, str(e))
            diagList.append(str(e))
        return successList, retList, diagList


class ApmcWorkflow(object):
    """Runs the commands of the command-line interface."""

    def __init__(self, **kwargs):
        self.__workPath = kwargs.get("workPath", None)
        self.__mU = MarshalUtil(workPath=self.__workPath)
        self.__fU = FileUtil(workPath=self.__workPath)
        self.__gIo = GraphIo(workPath=self.__workPath)

    #
    # Computation
    #
    def oracleValueMatrix(self, g, k, vertexCapacities=False, numProc=1, chunkSize=10):
        """k-capped min-cut values for all pairs by bounded augmenting paths, fanned out over sources."""
        startTime = time.time()
        if g.n == 0:
            return []
        mpu = MultiProcUtil(verbose=True)
        mpu.setOptions({"n": g.n, "arcTriples": list(g.arcs), "k": k, "vertexCapacities": vertexCapacities})
        mpu.set(workerObj=OracleWorker(), workerMethod="valueRows")
        mpu.setWorkingDir(workingDir=self.__workPath)
        ok, failList, resultList, _ = mpu.runMulti(dataList=list(range(g.n)), numProc=numProc, numResults=1, chunkSize=chunkSize)
        if not ok or failList:
            raise RuntimeError("oracle workers failed for sources %r" % sorted(failList))
        rowD = dict(resultList[0])
        logger.info("Completed oracle value matrix n=%d k=%d (%.4f seconds)", g.n, k, time.time() - startTime)
        return [rowD[s] for s in range(g.n)]

    def latestTable(self, g, k, algorithm, vertexCapacities=False, maxK=4):
        if algorithm == "iterative":
            return ApmcIterative(k=k, vertexCapacities=vertexCapacities).allPairsLatestCuts(g)
        if algorithm == "recursive":
            return ApmcRecursive(k=k, maxK=maxK, kLimit=max(k, 3), vertexCapacities=vertexCapacities).allPairsLatestCuts(g)
        if algorithm == "oracle":
            table = ApmcTable(g.n, k)
            if vertexCapacities:
                h = g.splitVertices()
                cs = CutStructure(h)
                for s, t in table.pairs():
                    table.setFamily(s, t, cs.latestCutsUpToK(g.vOut(s), g.vIn(t), k))
            else:
                cs = CutStructure(g)
                for s, t in table.pairs():
                    table.setFamily(s, t, cs.latestCutsUpToK(s, t, k))
            return table
        raise ValueError("algorithm %r reports no witnesses" % algorithm)

    def netcodingValueMatrix(self, g, k, seed=0, vertexCapacities=True, prime=2**31 - 1, maxRetries=3):
        """Values from one network-coding report with cap k + 1, so that a capped entry means above k."""
        nC = NetworkCoding(prime=prime, maxRetries=maxRetries, arcCapacities=not vertexCapacities)
        report = nC.kapmvc(g, k + 1, seed=seed)
        return [[None if s == t else (ApmcTable.ABOVE_K if report.value(s, t) > k else report.value(s, t)) for t in range(g.n)] for s in range(g.n)]

    def valueMatrix(self, g, k, algorithm, vertexCapacities=False, **kwargs):
        if algorithm == "oracle":
            return self.oracleValueMatrix(g, k, vertexCapacities=vertexCapacities, numProc=kwargs.get("numProc", 1), chunkSize=kwargs.get("chunkSize", 10))
        if algorithm == "netcoding":
            return self.netcodingValueMatrix(g, k, seed=kwargs.get("seed", 0), vertexCapacities=vertexCapacities, prime=kwargs.get("prime", 2**31 - 1), maxRetries=kwargs.get("maxRetries", 3))
        return self.latestTable(g, k, algorithm, vertexCapacities=vertexCapacities, maxK=kwargs.get("maxK", 4)).valueMatrix()

    #
    # Commands
    #
    def run(self, config):
        """Run one command and map the outcome to an exit code.

        Returns:
            int: 0 ok, 2 usage or parse error, 3 structural precondition, 4 verification divergence
        """
        startTime = time.time()
        dispatchD = {
            "values": self.values,
            "witnesses": self.witnesses,
            "gen": self.generate,
            "verify": self.verify,
            "netcoding": self.netcoding,
            "reduce-clique": self.reduceClique,
            "decide-clique": self.decideClique,
        }
        try:
            config.validate()
            if config.command not in dispatchD:
                raise ValueError("unknown command %r" % config.command)
            ret = dispatchD[config.command](config)
        except (GraphFormatError, ValueError) as e:
            logger.error("Usage or input error: %s", str(e))
            ret = EXIT_USAGE
        except (CyclicGraphError, LimitExceededError, TooLargeError, SingularMatrixError) as e:
            logger.error("Structural precondition failed: %s", str(e))
            ret = EXIT_STRUCTURAL
        except Exception as e:
            logger.exception("Failing with %s", str(e))
            ret = EXIT_FAILURE
        logger.info("Completed %s with exit code %d (%.4f seconds)", config.command, ret, time.time() - startTime)
        return ret

    def values(self, config):
        g = self.__gIo.readGraph(config.inputPath)
        optD = {"numProc": config.numProc, "chunkSize": config.chunkSize, "seed": config.seed, "prime": config.prime, "maxRetries": config.maxRetries, "maxK": config.maxK}
        matrix = self.valueMatrix(g, config.k, config.algorithm, vertexCapacities=config.vertexCapacities, **optD)
        lineL = ApmcTable.formatMatrixLines(matrix, config.k)
        if config.outputFormat == "json":
            self.__emit(config, {"n": g.n, "k": config.k, "algorithm": config.algorithm, "values": [line.split("\t") for line in lineL]}, fmt="json")
        else:
            self.__emit(config, lineL, fmt="list")
        return EXIT_OK

    def witnesses(self, config):
        g = self.__gIo.readGraph(config.inputPath)
        table = self.latestTable(g, config.k, config.algorithm, vertexCapacities=config.vertexCapacities, maxK=config.maxK)
        self.__emit(config, table.witnessDict(), fmt="json")
        return EXIT_OK

    def generate(self, config):
        family = config.get("family", "random-dag")
        iG = InstanceGenerator()
        if family == "clique4":
            g4 = iG.randomFourPartite(config.get("n", 4), config.get("p", 0.5), config.seed)
            self.__emit(config, g4.toDict(), fmt="json")
            return EXIT_OK
        if family == "tree":
            g, s, t = iG.treeGadget(config.get("depth", 3), config.get("mult", 5))
            commentL = ["binary tree gadget depth=%d mult=%d source=%d sink=%d" % (config.get("depth", 3), config.get("mult", 5), s, t)]
        elif family == "random-dag":
            g = iG.randomDag(config.get("n", 10), config.get("m", 20), config.seed, maxMult=config.get("mult", 3))
            commentL = ["random DAG seed=%d" % config.seed]
        elif family == "random-digraph":
            g = iG.randomDigraph(config.get("n", 8), config.get("m", 16), config.seed, maxMult=config.get("mult", 1))
            commentL = ["random digraph seed=%d" % config.seed]
        else:
            raise ValueError("unknown instance family %r" % family)
        self.__emit(config, self.__gIo.formatLines(g, commentL), fmt="list")
        return EXIT_OK

    def netcoding(self, config):
        g = self.__gIo.readGraph(config.inputPath)
        sourceL = config.get("sources") or list(range(g.n))
        sinkL = config.get("sinks") or list(range(g.n))
        nC = NetworkCoding(prime=config.prime, maxRetries=config.maxRetries, arcCapacities=not config.vertexCapacities)
        report = nC.kstmvc(g, sourceL, sinkL, config.k, seed=config.seed)
        self.__emit(config, report.toDict(), fmt="json")
        return EXIT_OK

    def __readFourPartite(self, config):
        if not config.inputPath:
            raise ValueError("a 4-partite instance file is required")
        dD = self.__mU.doImport(config.inputPath, fmt="json")
        if not isinstance(dD, dict):
            raise GraphFormatError("4-partite instance %r could not be read" % config.inputPath)
        return FourPartiteGraph.fromDict(dD)

    def reduceClique(self, config):
        g4 = self.__readFourPartite(config)
        cR = CliqueReduction()
        mode = config.get("mode", "unbounded")
        if mode == "unbounded":
            h = cR.buildH(g4)
            commentL = ["4-clique reduction (unbounded) nPerSide=%d" % g4.nPerSide]
        elif mode == "bounded":
            blockSize = config.k
            if g4.nPerSide % blockSize:
                g4 = g4.padded(g4.nPerSide + blockSize - g4.nPerSide % blockSize)
            i, j = config.get("block", (0, 0))
            h = cR.buildHBounded(g4, blockSize, i, j)
            commentL = ["4-clique reduction (bounded) nPerSide=%d k=%d block=(%d,%d)" % (g4.nPerSide, blockSize, i, j)]
        else:
            raise ValueError("unknown reduction mode %r" % mode)
        self.__emit(config, self.__gIo.formatLines(h, commentL), fmt="list")
        return EXIT_OK

    def decideClique(self, config):
        g4 = self.__readFourPartite(config)
        if config.algorithm == "netcoding":

            def solver(h, pairL, bound):
                return netcodingSolver(h, pairL, bound, seed=config.seed)

        else:
            solver = oracleSolver
        cR = CliqueReduction(solver=solver)
        mode = config.get("mode", "unbounded")
        found = cR.decideBounded(g4, config.k) if mode == "bounded" else cR.decideUnbounded(g4)
        self.__emit(config, {"mode": mode, "nPerSide": g4.nPerSide, "clique": found, "bruteForce": FlowOracle.find4CliqueBruteForce(g4)}, fmt="json")
        return EXIT_OK

    def verify(self, config):
        aV = ApmcVerifier(numProc=config.numProc, chunkSize=config.chunkSize, faultK=config.get("faultK", 0), numCases=config.get("numCases", 5), prime=config.prime)
        report = aV.run(suites=config.get("suites"), seeds=config.get("seeds") or [0, 1, 2])
        self.__emit(config, report, fmt="json")
        return EXIT_OK if report["ok"] else EXIT_DIVERGENCE

    def __emit(self, config, obj, fmt):
        """Export to config.outputPath, or write to standard output when no path is given."""
        if config.outputPath:
            dirPath = os.path.dirname(config.outputPath)
            if dirPath and not self.__fU.exists(dirPath):
                self.__fU.mkdir(dirPath)
            kwargsExport = {"indent": 2} if fmt == "json" else {}
            ok = self.__mU.doExport(config.outputPath, obj, fmt=fmt, **kwargsExport)
            logger.info("Exported %s output to %s status %r", config.command, config.outputPath, ok)
            return ok
        if fmt == "json":
            sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
        else:
            sys.stdout.write("\n".join(obj) + "\n")
        return True
