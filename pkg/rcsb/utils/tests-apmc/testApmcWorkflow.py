##
# File:    testApmcWorkflow.py
# Author:  Dennis Piehl
# Date:    18-Oct-2026
#
# Updates:
#
#
##
"""
Tests for the run configuration, the command workflow and the command-line exit codes.

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

from rcsb.utils.config.ConfigUtil import ConfigUtil
from rcsb.utils.io.MarshalUtil import MarshalUtil

from rcsb.utils.apmc.ApmcCli import main
from rcsb.utils.apmc.ApmcTable import ApmcTable
from rcsb.utils.apmc.ApmcWorkflow import EXIT_DIVERGENCE, EXIT_OK, EXIT_STRUCTURAL, EXIT_USAGE, ApmcWorkflow, RunConfig
from rcsb.utils.apmc.FourPartiteGraph import FourPartiteGraph
from rcsb.utils.apmc.GraphIo import GraphIo
from rcsb.utils.apmc.MultiDigraph import MultiDigraph

HERE = os.path.abspath(os.path.dirname(__file__))
TOPDIR = os.path.dirname(os.path.dirname(os.path.dirname(HERE)))

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger()


class ApmcWorkflowTests(unittest.TestCase):
    def setUp(self):
        self.__dataPath = os.path.join(HERE, "test-data")
        self.__workPath = os.path.join(HERE, "test-output")
        self.__configPath = os.path.join(self.__dataPath, "config", "apmc-setup-example.yml")
        self.__graphPath = os.path.join(self.__dataPath, "diamond-path.graph")
        self.__mU = MarshalUtil(workPath=self.__workPath)
        self.__gIo = GraphIo(workPath=self.__workPath)
        self.__startTime = time.time()
        logger.info("Starting %s at %s", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()))

    def tearDown(self):
        unitS = "MB" if platform.system() == "Darwin" else "GB"
        rusageMax = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
        logger.info("Maximum resident memory size %.4f %s", rusageMax / 10**6, unitS)
        endTime = time.time()
        logger.info("Completed %s at %s (%.4f seconds)", self.id(), time.strftime("%Y %m %d %H:%M:%S", time.localtime()), endTime - self.__startTime)

    def __outPath(self, fileName):
        return os.path.join(self.__workPath, fileName)

    def __readLines(self, filePath):
        return [line.rstrip("\n") for line in self.__mU.doImport(filePath, fmt="list")]

    def testRunConfig(self):
        cfgOb = ConfigUtil(configPath=self.__configPath, defaultSectionName="apmc_configuration")
        self.assertEqual(int(cfgOb.get("K_BOUND", sectionName="apmc_configuration")), 2)
        config = RunConfig("values", configPath=self.__configPath, inputPath=self.__graphPath)
        self.assertEqual((config.k, config.maxK, config.numProc, config.chunkSize), (2, 4, 2, 4))
        self.assertEqual(config.prime, 2147483647)
        self.assertEqual(config.algorithm, "iterative")
        self.assertTrue(config.validate())
        config = RunConfig("values", configPath=self.__configPath, k=3, numProc=None, family="tree", depth=None)
        self.assertEqual((config.k, config.numProc), (3, 2))
        self.assertEqual(config.get("family"), "tree")
        self.assertEqual(config.get("depth", 4), 4)
        self.assertEqual(RunConfig("values").k, 2)
        with self.assertRaises(ValueError):
            RunConfig("values", algorithm="magic").validate()
        with self.assertRaises(ValueError):
            RunConfig("values", k=0).validate()

    def testValueMatrices(self):
        aW = ApmcWorkflow(workPath=self.__workPath)
        g = self.__gIo.readGraph(self.__graphPath)
        expected = ApmcTable.formatMatrixLines(aW.valueMatrix(g, 1, "iterative"), 1)
        self.assertEqual(expected[0], "-\t1\t1\t>1\t1\t1")
        for algorithm in ("oracle", "recursive", "netcoding"):
            matrix = aW.valueMatrix(g, 1, algorithm, numProc=2, chunkSize=2, seed=3)
            self.assertEqual(ApmcTable.formatMatrixLines(matrix, 1), expected, algorithm)
        self.assertEqual(aW.oracleValueMatrix(MultiDigraph(0), 2), [])
        table = aW.latestTable(g, 2, "oracle")
        self.assertEqual(table.getFamily(0, 3).asLists(), [[2, 3]])
        with self.assertRaises(ValueError):
            aW.latestTable(g, 2, "netcoding")

    def testValuesCommand(self):
        outPath = self.__outPath("diamond-path-values.tsv")
        self.assertEqual(main(["values", "--input", self.__graphPath, "--k", "2", "--output", outPath]), EXIT_OK)
        lineL = self.__readLines(outPath)
        self.assertEqual(lineL[0], "-\t1\t1\t2\t1\t1")
        self.assertEqual(lineL[5], "0\t0\t0\t0\t0\t-")
        outPath = self.__outPath("diamond-path-values-oracle.tsv")
        self.assertEqual(main(["values", "--input", self.__graphPath, "--k", "1", "--algorithm", "oracle", "--jobs", "2", "--output", outPath]), EXIT_OK)
        self.assertEqual(self.__readLines(outPath)[0], "-\t1\t1\t>1\t1\t1")
        outPath = self.__outPath("diamond-path-values.json")
        self.assertEqual(main(["values", "--input", self.__graphPath, "--config", self.__configPath, "--format", "json", "--output", outPath]), EXIT_OK)
        rD = self.__mU.doImport(outPath, fmt="json")
        self.assertEqual(rD["k"], 2)
        self.assertEqual(rD["values"][0][3], "2")

    def testWitnessAndGenerateCommands(self):
        outPath = self.__outPath("diamond-path-witnesses.json")
        self.assertEqual(main(["witnesses", "--input", self.__graphPath, "--k", "2", "--algorithm", "recursive", "--output", outPath]), EXIT_OK)
        witnessD = self.__mU.doImport(outPath, fmt="json")
        self.assertEqual(witnessD["0->3"], [[2, 3]])
        self.assertEqual(witnessD["5->0"], [[]])
        #
        outPath = self.__outPath("tree-gadget.graph")
        self.assertEqual(main(["gen", "--family", "tree", "--depth", "2", "--mult", "3", "--output", outPath]), EXIT_OK)
        g = self.__gIo.readGraph(outPath)
        self.assertEqual((g.n, g.arcCount), (8, 18))
        outPath = self.__outPath("random-dag.graph")
        self.assertEqual(main(["gen", "--family", "random-dag", "--n", "7", "--m", "12", "--seed", "5", "--output", outPath]), EXIT_OK)
        self.assertTrue(self.__gIo.readGraph(outPath).isAcyclic())
        outPath = self.__outPath("clique4.json")
        self.assertEqual(main(["gen", "--family", "clique4", "--n", "3", "--p", "0.7", "--seed", "1", "--output", outPath]), EXIT_OK)
        self.assertEqual(FourPartiteGraph.fromDict(self.__mU.doImport(outPath, fmt="json")).nPerSide, 3)

    def testNetcodingAndCliqueCommands(self):
        cyclicPath = self.__outPath("cycle.graph")
        self.__gIo.writeGraph(cyclicPath, MultiDigraph(3, [(0, 1), (1, 2), (2, 0), (0, 2)]))
        outPath = self.__outPath("cycle-netcoding.json")
        self.assertEqual(main(["netcoding", "--input", cyclicPath, "--k", "3", "--seed", "7", "--sources", "0", "--output", outPath]), EXIT_OK)
        rD = self.__mU.doImport(outPath, fmt="json")
        self.assertEqual(rD["values"], {"0->1": 1, "0->2": 2})
        #
        g4Path = self.__outPath("complete-4partite.json")
        self.__mU.doExport(g4Path, FourPartiteGraph.complete(2).toDict(), fmt="json")
        outPath = self.__outPath("complete-4partite-decision.json")
        self.assertEqual(main(["decide-clique", "--input", g4Path, "--mode", "bounded", "--k", "1", "--output", outPath]), EXIT_OK)
        rD = self.__mU.doImport(outPath, fmt="json")
        self.assertTrue(rD["clique"])
        self.assertEqual(rD["bruteForce"], [0, 0, 0, 0])
        outPath = self.__outPath("complete-4partite-h.graph")
        self.assertEqual(main(["reduce-clique", "--input", g4Path, "--mode", "unbounded", "--output", outPath]), EXIT_OK)
        self.assertEqual(self.__gIo.readGraph(outPath).n, 8)
        outPath = self.__outPath("complete-4partite-block.graph")
        self.assertEqual(main(["reduce-clique", "--input", g4Path, "--mode", "bounded", "--k", "1", "--block", "1", "0", "--output", outPath]), EXIT_OK)
        self.assertEqual(self.__gIo.readGraph(outPath).n, 8)

    def testExitCodes(self):
        with self.assertRaises(SystemExit) as cm:
            main(["values"])
        self.assertEqual(cm.exception.code, EXIT_USAGE)
        with self.assertRaises(SystemExit) as cm:
            main(["values", "--input", self.__graphPath, "--algorithm", "magic"])
        self.assertEqual(cm.exception.code, EXIT_USAGE)
        self.assertEqual(main(["values", "--input", os.path.join(self.__dataPath, "no-such-file.graph")]), EXIT_USAGE)
        badPath = self.__outPath("bad-header.graph")
        self.__mU.doExport(badPath, ["p 3 2", "a 0 1"], fmt="list")
        self.assertEqual(main(["values", "--input", badPath]), EXIT_USAGE)
        cyclicPath = self.__outPath("two-cycle.graph")
        self.__gIo.writeGraph(cyclicPath, MultiDigraph(2, [(0, 1), (1, 0)]))
        self.assertEqual(main(["values", "--input", cyclicPath, "--k", "2"]), EXIT_STRUCTURAL)
        # the 4-6 family {(4,5)}, {(5,6), (5,6)} inside the upper half does not fit a one-axis codeword
        twoMemberPath = self.__outPath("two-member-family.graph")
        self.__gIo.writeGraph(twoMemberPath, MultiDigraph(7, [(4, 5), (5, 6), (5, 6)]))
        self.assertEqual(main(["witnesses", "--input", twoMemberPath, "--k", "2", "--algorithm", "recursive", "--max-K", "1"]), EXIT_STRUCTURAL)
        self.assertEqual(main(["witnesses", "--input", twoMemberPath, "--k", "2", "--algorithm", "recursive", "--max-K", "2", "--output", self.__outPath("two-member.json")]), EXIT_OK)
        self.assertEqual(main(["values", "--input", self.__graphPath, "--k", "0"]), EXIT_USAGE)
        self.assertEqual(main(["verify", "--suites", "nonsense"]), EXIT_USAGE)
        self.assertEqual(ApmcWorkflow().run(RunConfig("unknown-command")), EXIT_USAGE)

    def testVerifyCommand(self):
        outPath = self.__outPath("verify-clean.json")
        self.assertEqual(main(["verify", "--suites", "witness", "clique", "--seeds", "0", "--cases", "2", "--output", outPath]), EXIT_OK)
        rD = self.__mU.doImport(outPath, fmt="json")
        self.assertTrue(rD["ok"])
        self.assertEqual(rD["cases"], 4)
        outPath = self.__outPath("verify-fault.json")
        self.assertEqual(main(["verify", "--suites", "values", "--seeds", "0", "1", "--cases", "10", "--fault-k", "1", "--output", outPath]), EXIT_DIVERGENCE)
        rD = self.__mU.doImport(outPath, fmt="json")
        self.assertFalse(rD["ok"])
        self.assertEqual(rD["firstDivergence"]["suite"], "values")


def apmcWorkflowSuite():
    suiteSelect = unittest.TestSuite()
    suiteSelect.addTest(ApmcWorkflowTests("testRunConfig"))
    suiteSelect.addTest(ApmcWorkflowTests("testValueMatrices"))
    suiteSelect.addTest(ApmcWorkflowTests("testValuesCommand"))
    suiteSelect.addTest(ApmcWorkflowTests("testWitnessAndGenerateCommands"))
    suiteSelect.addTest(ApmcWorkflowTests("testNetcodingAndCliqueCommands"))
    suiteSelect.addTest(ApmcWorkflowTests("testExitCodes"))
    suiteSelect.addTest(ApmcWorkflowTests("testVerifyCommand"))
    return suiteSelect


if __name__ == "__main__":
    mySuite = apmcWorkflowSuite()
    unittest.TextTestRunner(verbosity=2).run(mySuite)
