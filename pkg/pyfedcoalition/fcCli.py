import argparse
import logging
import sys

from sentry_sdk import capture_exception

from pyfedcoalition import PyFedCoalition
from pyfedcoalition.common import instanceio
from pyfedcoalition.const import (DEFAULT_BENEFIT_DENSITY, DEFAULT_ENUM_LIMIT, DEFAULT_MAX_CLIQUE_NODES,
    DEFAULT_ORACLE_CAP, DEFAULT_SEED, DEFAULT_SWEEP_ALPHAS, DEFAULT_SWEEP_N, DEFAULT_SWEEP_TRIALS,
    DEFAULT_WEIGHT_HI, DEFAULT_WEIGHT_LO, EXIT_IO, EXIT_LIMIT, EXIT_OK, EXIT_VALIDATION, MERGE_MODE_STRICT,
    MERGE_MODES, OUTPUT_JSON, OUTPUT_TEXT, SENTRY_URL, TIE_BREAK_MAX_CARDINALITY, TIE_BREAKS)
from pyfedcoalition.exceptions import EnumerationLimitError, InvalidInputError, SizeLimitError
from pyfedcoalition.fcGraph import partitionUtility
from pyfedcoalition.fcInstance import FcInstanceSpec, FcWeightDist
from pyfedcoalition.fcRunner import FcRunOptions

LOGGER = logging.getLogger(__name__)


def _alphaList(text):
    try:
        return tuple(float(a) for a in text.split(',') if a.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")

def buildParser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for instance generation and sweeps")
    common.add_argument("--mode", choices=MERGE_MODES, default=MERGE_MODE_STRICT, help="Independence reading used by the optimality check")
    common.add_argument("--tie-break", choices=TIE_BREAKS, default=TIE_BREAK_MAX_CARDINALITY, help="Clique cover selection rule")
    common.add_argument("--max-cliques-nodes", type=int, default=DEFAULT_MAX_CLIQUE_NODES, help="Largest graph the clique search accepts")
    common.add_argument("--enum-limit", type=int, default=DEFAULT_ENUM_LIMIT, help="Most cycles or paths one search may enumerate")
    common.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP, help="Most coalitions the blocking-merge search accepts")
    common.add_argument("--force-verify", action="store_true", help="Verify even when the baseline exceeds the oracle cap")
    common.add_argument("--output", choices=(OUTPUT_JSON, OUTPUT_TEXT), default=OUTPUT_JSON, help="Report format")
    common.add_argument("--timings", action="store_true", help="Include per-phase durations in JSON reports")
    common.add_argument("--sentry-dsn", default=SENTRY_URL, help="Report errors to this Sentry DSN")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging")

    parser = argparse.ArgumentParser(prog="coalitions", description="Conflict-free coalition formation")
    verbs = parser.add_subparsers(dest="verb", required=True)

    generate = verbs.add_parser("generate", parents=[common], help="Generate a random instance")
    generate.add_argument("-n", "--n", type=int, required=True, help="Participant count")
    generate.add_argument("--alpha", type=float, default=0.2, help="Probability that two participants compete")
    generate.add_argument("--density", type=float, default=DEFAULT_BENEFIT_DENSITY, help="Probability of a benefit edge")
    generate.add_argument("--weights", default=f"uniform:{DEFAULT_WEIGHT_LO}:{DEFAULT_WEIGHT_HI}", help="uniform:LO:HI or constant:W")
    generate.add_argument("--out", help="Write the instance here instead of stdout")

    for verb, text in (("partition", "Form coalitions and report them"), ("baseline", "Report the baseline partition")):
        p = verbs.add_parser(verb, parents=[common], help=text)
        p.add_argument("instance", help="Instance JSON file")

    v = verbs.add_parser("verify", parents=[common], help="Check both principles and optimality of a partition")
    v.add_argument("instance", help="Instance JSON file")
    v.add_argument("--partition", help="Partition JSON file; the formed partition when omitted")

    s = verbs.add_parser("sweep", parents=[common], help="Average utilities over random instances per alpha")
    s.add_argument("-n", "--n", type=int, default=DEFAULT_SWEEP_N, help="Participant count")
    s.add_argument("--alphas", type=_alphaList, default=DEFAULT_SWEEP_ALPHAS, help="Comma-separated competition probabilities")
    s.add_argument("--trials", type=int, default=DEFAULT_SWEEP_TRIALS, help="Trials per alpha")
    s.add_argument("--density", type=float, default=DEFAULT_BENEFIT_DENSITY, help="Probability of a benefit edge")
    s.add_argument("--weights", default=f"uniform:{DEFAULT_WEIGHT_LO}:{DEFAULT_WEIGHT_HI}", help="uniform:LO:HI or constant:W")
    s.add_argument("--workers", type=int, default=1, help="Trials run concurrently")

    d = verbs.add_parser("export-dot", parents=[common], help="Write the coalitions as a DOT graph")
    d.add_argument("instance", help="Instance JSON file")
    d.add_argument("--out", required=True, help="DOT file to write")
    d.add_argument("--baseline", action="store_true", help="Draw the baseline partition instead of the formed one")
    d.add_argument("--partition", help="Draw this partition JSON file instead")
    return parser

def _emit(args, data, text):
    if args.output == OUTPUT_TEXT:
        sys.stdout.write(text + "\n")
    else:
        sys.stdout.write(instanceio.dumpJSON(data))

# bare ids unless the instance names its participants
def _textLabel(instance):
    return instance.label if instance.labels is not None else str

def _dispatch(args, fc):
    if args.verb == "generate":
        spec = FcInstanceSpec(args.n, args.alpha, FcWeightDist.parse(args.weights), args.density, args.seed)
        instance = fc.generate(spec)
        if args.out:
            instanceio.saveInstance(instance, args.out)
            _emit(args, {'written': args.out}, f"Wrote {instance} to {args.out}")
        else:
            _emit(args, instanceio.instanceToDict(instance), str(instance))
        return

    if args.verb == "sweep":
        report = fc.sweep(args.n, args.alphas, args.trials, args.seed, args.density,
                          FcWeightDist.parse(args.weights), args.workers)
        _emit(args, report.toDict(), str(report))
        return

    instance = instanceio.loadInstance(args.instance)
    label = _textLabel(instance)
    if args.verb == "partition":
        report = fc.run(instance)
        _emit(args, report.toDict(includeTimings=args.timings), report.describe(label))
    elif args.verb == "baseline":
        baseline = fc.baseline(instance)
        utility = partitionUtility(instance.benefit, baseline)
        _emit(args, {'baseline': baseline.toLists(), 'baseline_utility': utility},
              f"Baseline: {baseline.describe(label)}\n Utility: {utility:.6f}")
    elif args.verb == "verify":
        partition = instanceio.loadPartition(args.partition, instance.n) if args.partition else None
        report = fc.verify(instance, partition)
        text = "\n".join([str(report)] + [f" {finding.describe(label)}" for finding in report.violations])
        _emit(args, report.toDict(), text)
    elif args.verb == "export-dot":
        if args.partition:
            partition = instanceio.loadPartition(args.partition, instance.n)
        elif args.baseline:
            partition = fc.baseline(instance)
        else:
            partition, _ = fc.partition(instance)
        instanceio.exportDot(instance, partition, args.out)
        _emit(args, {'written': args.out, 'clusters': len(partition)}, f"Wrote {len(partition)} clusters to {args.out}")

def main(argv=None):
    args = buildParser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        options = FcRunOptions(args.tie_break, args.mode, args.enum_limit, args.max_cliques_nodes,
                               args.oracle_cap, args.force_verify)
        fc = PyFedCoalition(options, args.sentry_dsn)
        LOGGER.debug(f"{fc}")
        _dispatch(args, fc)
        return EXIT_OK
    except (SizeLimitError, EnumerationLimitError) as e:
        LOGGER.error(f"Limit reached: {e}")
        capture_exception(e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_LIMIT
    except InvalidInputError as e:
        LOGGER.error(f"Invalid input: {e}")
        capture_exception(e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_VALIDATION
    except OSError as e:
        LOGGER.error(f"I/O failure: {e}")
        capture_exception(e)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_IO
