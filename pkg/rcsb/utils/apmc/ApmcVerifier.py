##
# File:    ApmcVerifier.py
# Author:  Dennis Piehl
# Date:    17-Oct-2026
#
# Updates:
#   18-Oct-2026  dwp Add the faultK option to check that divergences are reported
#
# To Do:
##

"""
Cross-check harness over seeded random instances.

Suites:
    values     flow oracle vs iterative vs recursive value matrices, witness validity,
               reachability for k = 1
    families   closure vs brute force vs iterative latest families
    witness    pruning vs brute force vs tensor-code decoding of Witness Superset instances
    netcoding  network-coding connectivities vs the vertex-splitting flow oracle, one reseed allowed
    clique     both 4-clique decisions vs brute force, exact estimates on non-clique edges

"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import logging
import time

import numpy as np
from rcsb.utils.multiproc.MultiProcUtil import MultiProcUtil

from rcsb.utils.apmc.ApmcIterative import ApmcIterative
from rcsb.utils.apmc.ApmcRecursive import ApmcRecursive
from rcsb.utils.apmc.ApmcTable import ApmcTable
from rcsb.utils.apmc.CliqueReduction import CliqueReduction
from rcsb.utils.apmc.CutStructure import CutStructure
from rcsb.utils.apmc.FlowOracle import FlowOracle
from rcsb.utils.apmc.InstanceGenerator import InstanceGenerator
from rcsb.utils.apmc.NetworkCoding import NetworkCoding
from rcsb.utils.apmc.SuperimposedCode import FastCode
from rcsb.utils.apmc.TensorCodeword import WitnessDecoder
from rcsb.utils.apmc.WitnessSuperset import WitnessSupersetSolver, WsInstance

logging.basicConfig(level=logging.INFO, format="%(asctime)s [%(levelname)s]-%(module)s.%(funcName)s: %(message)s")
logger = logging.getLogger(__name__)


def oracleMatrix(g, k):
    fO = FlowOracle(g)
    matrix = []
    for s in range(g.n):
        rowL = []
        for t in range(g.n):
            if s == t:
                rowL.append(None)
            else:
                val = fO.maxFlowBounded(s, t, k + 1).value
                rowL.append(ApmcTable.ABOVE_K if val > k else val)
        matrix.append(rowL)
    return matrix


def firstMatrixDifference(m1, m2):
    for s, (row1, row2) in enumerate(zip(m1, m2)):
        for t, (v1, v2) in enumerate(zip(row1, row2)):
            if v1 != v2:
                return (s, t, v1, v2)
    return None


class VerifyWorker(object):
    """Runs verification cases; every case is rebuilt from its suite name and seed."""

    def __init__(self, **kwargs):
        self.__iG = InstanceGenerator()
        self.__solver = WitnessSupersetSolver(maxUniverse=kwargs.get("maxUniverse", 18))

    def runCases(self, dataList, procName, optionsD, workingDir):
        """Run verification cases.

        Args:
            dataList (list): (suite, seed) pairs
            procName (str): worker process name
            optionsD (dict): "faultK", "prime"
            workingDir (str): path to working directory

        Returns:
            successList (list): cases that ran
            retList (list): case result dictionaries
            diagList (list): unique diagnostics
        """
        _ = workingDir
        successList = []
        retList = []
        diagList = []
        for suite, seed in dataList:
            try:
                detail = getattr(self, "_check" + suite.capitalize())(seed, optionsD)
                retList.append({"suite": suite, "seed": seed, "ok": detail is None, "detail": detail})
                successList.append((suite, seed))
            except Exception as e:
                logger.exception("%s failing with %s", procName, str(e))
                diagList.append("%s/%d: %s" % (suite, seed, str(e)))
                retList.append({"suite": suite, "seed": seed, "ok": False, "detail": "exception: %s" % str(e)})
                successList.append((suite, seed))
        return successList, retList, diagList

    def _checkValues(self, seed, optionsD):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(0, 11))
        m = int(rng.integers(0, min(20, 3 * n * (n - 1) // 2) + 1))
        k = int(rng.integers(1, 4))
        g = self.__iG.randomDag(n, m, seed, maxMult=3)
        oracleM = oracleMatrix(g, k)
        itTable = ApmcIterative(k=k + optionsD.get("faultK", 0)).allPairsLatestCuts(g)
        diff = firstMatrixDifference(oracleM, itTable.valueMatrix())
        if diff:
            return "n=%d m=%d k=%d oracle vs iterative at (%d, %d): %r != %r" % ((n, m, k) + diff)
        recTable = ApmcRecursive(k=k).allPairsLatestCuts(g)
        diff = firstMatrixDifference(oracleM, recTable.valueMatrix())
        if diff:
            return "n=%d m=%d k=%d oracle vs recursive at (%d, %d): %r != %r" % ((n, m, k) + diff)
        for name, table in (("iterative", itTable), ("recursive", recTable)):
            for s, t in table.pairs():
                for cut in table.getFamily(s, t):
                    if cut.size > table.k or not ApmcIterative.isValidWitness(g, s, t, cut):
                        return "%s reports an invalid witness %r for (%d, %d)" % (name, cut.asList(), s, t)
        if k == 1:
            reach = g.reachBitsets()
            for s, t in itTable.pairs():
                if (itTable.value(s, t) != 0) != bool((reach[s] >> t) & 1):
                    return "k=1 value at (%d, %d) disagrees with reachability" % (s, t)
        return None

    def _checkFamilies(self, seed, optionsD):
        _ = optionsD
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 8))
        m = int(rng.integers(0, min(14, 3 * n * (n - 1) // 2) + 1))
        k = int(rng.integers(1, 4))
        g = self.__iG.randomDag(n, m, seed, maxMult=3)
        fO = FlowOracle(g)
        cs = CutStructure(g)
        itTable = ApmcIterative(k=k).allPairsLatestCuts(g)
        for s, t in itTable.pairs():
            _, bruteLatest = fO.enumerateExtremalCutsBruteForce(s, t, k)
            if not g.reaches(s, t):
                continue
            closure = cs.latestCutsUpToK(s, t, k)
            if not closure.sameCuts(bruteLatest):
                return "closure family differs from brute force at (%d, %d)" % (s, t)
            if not itTable.getFamily(s, t).sameCuts(bruteLatest):
                return "iterative family differs from brute force at (%d, %d)" % (s, t)
        return None

    def _checkWitness(self, seed, optionsD):
        _ = optionsD
        rng = np.random.default_rng(seed)
        universe, k, K = 6, 2, 2
        familyL = []
        for _ in range(int(rng.integers(1, 4))):
            memberL = []
            for _ in range(int(rng.integers(1, K + 1))):
                size = int(rng.integers(1, 3))
                memberL.append(frozenset(int(x) for x in rng.choice(universe, size=size, replace=False)))
            familyL.append(memberL)
        inst = WsInstance(familyL, k, K)
        pruned = self.__solver.solvePruning(inst)
        brute = self.__solver.solveBruteForce(inst)
        if pruned != brute:
            return "pruning %r != brute force %r" % ([sorted(w) for w in pruned], [sorted(w) for w in brute])
        decoder = WitnessDecoder(FastCode(k, universe), K, k)
        decoded = decoder.decodeWitness(decoder.encodeInstance(inst.families))
        if decoded != brute:
            return "decoding %r != brute force %r" % ([sorted(w) for w in decoded], [sorted(w) for w in brute])
        return None

    def _checkNetcoding(self, seed, optionsD):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 9))
        m = int(rng.integers(0, 2 * n + 1))
        k = int(rng.integers(1, 4))
        g = self.__iG.randomDigraph(n, m, seed, maxMult=2)
        fO = FlowOracle(g)
        expectD = {(s, t): fO.vertexConnectivityBounded(s, t, k) for s in range(n) for t in range(n) if s != t}
        nC = NetworkCoding(prime=optionsD.get("prime", 2**31 - 1))
        for attempt in range(2):
            report = nC.kapmvc(g, k, seed=seed + 7919 * attempt)
            if report.valueD == expectD:
                return None
            logger.warning("Network coding mismatch for seed %d attempt %d, reseeding", seed, attempt)
        badL = [pair for pair in sorted(expectD) if report.value(*pair) != expectD[pair]]
        return "n=%d m=%d k=%d network coding differs after a reseed at %r" % (n, m, k, badL[:3])

    def _checkClique(self, seed, optionsD):
        _ = optionsD
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 5))
        g4 = self.__iG.randomFourPartite(n, 0.5, seed)
        expected = FlowOracle.find4CliqueBruteForce(g4) is not None
        cR = CliqueReduction()
        if cR.decideUnbounded(g4) != expected:
            return "unbounded decision differs from brute force (n=%d)" % n
        if cR.decideBounded(g4, 2) != expected:
            return "bounded decision differs from brute force (n=%d)" % n
        est = cR.estimates(g4)
        for (a, d), nc in cR.connectivities(g4).items():
            inClique = any(
                g4.hasEdge("AB", a, b) and g4.hasEdge("BC", b, c) and g4.hasEdge("CD", c, d) and g4.hasEdge("AC", a, c) and g4.hasEdge("BD", b, d) for b in range(n) for c in range(n)
            )
            if (inClique and nc <= est.value(a, d)) or (not inClique and nc != est.value(a, d)):
                return "edge (%d, %d): NC=%d estimate=%d inClique=%r" % (a, d, nc, est.value(a, d), inClique)
        return None


class ApmcVerifier(object):
    SUITES = ("values", "families", "witness", "netcoding", "clique")

    def __init__(self, **kwargs):
        """
        Args:
            numProc (int, optional): worker processes. Defaults to 1.
            chunkSize (int, optional): cases per chunk. Defaults to 4.
            numCases (int, optional): cases per suite and seed. Defaults to 5.
            faultK (int, optional): offset added to the iterative bound in the values suite. Defaults to 0.
            prime (int, optional): network-coding field order. Defaults to 2**31 - 1.
        """
        self.__numProc = kwargs.get("numProc", 1)
        self.__chunkSize = kwargs.get("chunkSize", 4)
        self.__numCases = kwargs.get("numCases", 5)
        self.__faultK = kwargs.get("faultK", 0)
        self.__prime = kwargs.get("prime", 2**31 - 1)
        self.__workPath = kwargs.get("workPath", None)

    def buildCases(self, suites=None, seeds=None):
        suiteL = list(suites) if suites else list(self.SUITES)
        for suite in suiteL:
            if suite not in self.SUITES:
                raise ValueError("unknown verification suite %r" % suite)
        seedL = list(seeds) if seeds is not None else [0, 1, 2]
        return [(suite, seed * 1000 + idx) for suite in suiteL for seed in seedL for idx in range(self.__numCases)]

    def run(self, suites=None, seeds=None):
        """Run the selected suites and report the first divergence.

        Returns:
            dict: "ok", "cases", "failures", per-suite counts and "firstDivergence"
        """
        startTime = time.time()
        caseL = self.buildCases(suites, seeds)
        resultL = []
        if caseL:
            mpu = MultiProcUtil(verbose=True)
            mpu.setOptions({"faultK": self.__faultK, "prime": self.__prime})
            mpu.set(workerObj=VerifyWorker(), workerMethod="runCases")
            mpu.setWorkingDir(workingDir=self.__workPath)
            _, failList, resultLL, diagList = mpu.runMulti(dataList=caseL, numProc=self.__numProc, numResults=1, chunkSize=self.__chunkSize)
            if failList:
                logger.error("Verification cases without results (%d): %r", len(failList), failList[:5])
            if diagList:
                logger.info("Diagnostics: %r", diagList)
            resultL = resultLL[0]
        orderD = {case: idx for idx, case in enumerate(caseL)}
        resultL = sorted(resultL, key=lambda rD: orderD.get((rD["suite"], rD["seed"]), len(orderD)))
        suiteD = {}
        for rD in resultL:
            sD = suiteD.setdefault(rD["suite"], {"cases": 0, "failures": 0})
            sD["cases"] += 1
            sD["failures"] += 0 if rD["ok"] else 1
        failL = [rD for rD in resultL if not rD["ok"]]
        missing = len(caseL) - len(resultL)
        report = {
            "ok": not failL and missing == 0,
            "cases": len(caseL),
            "failures": len(failL) + missing,
            "suites": suiteD,
            "firstDivergence": failL[0] if failL else None,
        }
        logger.info("Completed verification of %d cases with %d failures (%.4f seconds)", len(caseL), report["failures"], time.time() - startTime)
        return report
