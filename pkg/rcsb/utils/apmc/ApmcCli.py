##
# File:    ApmcCli.py
# Author:  Dennis Piehl
# Date:    17-Oct-2026
#
# Updates:
#
# To Do:
##

"""
Command-line interface for the all-pairs min-cut utilities.

    apmc_cli values      --input g.graph --k 2 --algorithm iterative [--vertex-capacities] [--format tsv|json]
    apmc_cli witnesses   --input g.graph --k 2 --algorithm recursive
    apmc_cli gen         --family tree|random-dag|random-digraph|clique4 ...
    apmc_cli verify      --seeds 0 1 2 [--suites values witness] [--fault-k 1]
    apmc_cli netcoding   --input g.graph --k 3 --seed 7 [--sources 0 1] [--sinks 4]
    apmc_cli reduce-clique --input g4.json --mode unbounded|bounded --k 2 [--block 0 0]
    apmc_cli decide-clique --input g4.json --mode unbounded|bounded --k 2

Exit codes: 0 ok, 2 usage or parse error, 3 structural precondition, 4 verification divergence.
"""

__docformat__ = "google en"
__author__ = "Dennis Piehl"
__email__ = "dennis.piehl@rcsb.org"
__license__ = "Apache 2.0"

import argparse
import logging
import sys

from rcsb.utils.apmc.ApmcWorkflow import EXIT_USAGE, ApmcWorkflow, RunConfig

logger = logging.getLogger(__name__)


class _UsageArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def buildParser():
    parser = _UsageArgumentParser(prog="apmc_cli", description="k-bounded all-pairs min-cut utilities")
    commonP = argparse.ArgumentParser(add_help=False)
    commonP.add_argument("--config", dest="configPath", default=None, help="YAML configuration file (section apmc_configuration)")
    commonP.add_argument("--output", dest="outputPath", default=None, help="output file (default: standard output)")
    commonP.add_argument("--k", type=int, default=None, help="cut size bound")
    commonP.add_argument("--seed", type=int, default=None, help="random seed")
    commonP.add_argument("--jobs", dest="numProc", type=int, default=None, help="worker processes (1 = sequential)")
    commonP.add_argument("--quiet", action="store_true", help="log warnings and errors only")
    graphP = argparse.ArgumentParser(add_help=False)
    graphP.add_argument("--input", dest="inputPath", required=True, help="graph file")
    graphP.add_argument("--vertex-capacities", dest="vertexCapacities", action="store_true", help="unit vertex capacities through vertex splitting")
    subParsers = parser.add_subparsers(dest="command")
    subParsers.required = True
    #
    valuesP = subParsers.add_parser("values", parents=[commonP, graphP], help="k-capped all-pairs value matrix")
    valuesP.add_argument("--algorithm", choices=RunConfig.ALGORITHMS, default="iterative")
    valuesP.add_argument("--format", dest="outputFormat", choices=RunConfig.FORMATS, default="tsv")
    valuesP.add_argument("--max-K", dest="maxK", type=int, default=None, help="cap on the tensor dimension (recursive)")
    #
    witnessP = subParsers.add_parser("witnesses", parents=[commonP, graphP], help="latest <=k-cut families as JSON")
    witnessP.add_argument("--algorithm", choices=("oracle", "iterative", "recursive"), default="iterative")
    witnessP.add_argument("--max-K", dest="maxK", type=int, default=None)
    #
    genP = subParsers.add_parser("gen", parents=[commonP], help="generate an instance")
    genP.add_argument("--family", choices=("tree", "random-dag", "random-digraph", "clique4"), default="random-dag")
    genP.add_argument("--depth", type=int, default=None)
    genP.add_argument("--mult", type=int, default=None)
    genP.add_argument("--n", type=int, default=None)
    genP.add_argument("--m", type=int, default=None)
    genP.add_argument("--p", type=float, default=None)
    #
    verifyP = subParsers.add_parser("verify", parents=[commonP], help="run the cross-check suites")
    verifyP.add_argument("--seeds", type=int, nargs="+", default=None)
    verifyP.add_argument("--suites", nargs="+", default=None)
    verifyP.add_argument("--cases", dest="numCases", type=int, default=None, help="cases per suite and seed")
    verifyP.add_argument("--fault-k", dest="faultK", type=int, default=None, help="offset added to the iterative bound")
    #
    ncP = subParsers.add_parser("netcoding", parents=[commonP], help="randomized k-bounded vertex connectivity")
    ncP.add_argument("--input", dest="inputPath", required=True)
    ncP.add_argument("--sources", type=int, nargs="+", default=None)
    ncP.add_argument("--sinks", type=int, nargs="+", default=None)
    ncP.add_argument("--arc-capacities", dest="arcCapacities", action="store_true", help="arc-disjoint instead of vertex-disjoint paths")
    #
    for name, helpText in (("reduce-clique", "emit the layered DAG of a 4-clique reduction"), ("decide-clique", "decide 4-clique through the reduction")):
        cliqueP = subParsers.add_parser(name, parents=[commonP], help=helpText)
        cliqueP.add_argument("--input", dest="inputPath", required=True, help="4-partite instance (JSON)")
        cliqueP.add_argument("--mode", choices=("unbounded", "bounded"), default="unbounded")
        cliqueP.add_argument("--block", type=int, nargs=2, default=None)
        cliqueP.add_argument("--algorithm", choices=("oracle", "netcoding"), default="oracle")
    return parser


def main(argv=None):
    args = buildParser().parse_args(argv)
    argD = dict(vars(args))
    command = argD.pop("command")
    configPath = argD.pop("configPath", None)
    if argD.pop("quiet", False):
        logging.getLogger().setLevel(logging.WARNING)
    if command == "netcoding":
        argD["vertexCapacities"] = not argD.pop("arcCapacities", False)
    if argD.get("block") is not None:
        argD["block"] = tuple(argD["block"])
    try:
        config = RunConfig(command, configPath=configPath, **argD)
    except Exception as e:
        logger.error("Cannot read configuration: %s", str(e))
        return EXIT_USAGE
    return ApmcWorkflow().run(config)


if __name__ == "__main__":
    sys.exit(main())
