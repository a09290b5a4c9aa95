import logging
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from pyfedcoalition.const import (DEFAULT_BENEFIT_DENSITY, DEFAULT_ENUM_LIMIT, DEFAULT_MAX_CLIQUE_NODES,
    DEFAULT_ORACLE_CAP, DEFAULT_SEED, DEFAULT_SWEEP_ALPHAS, DEFAULT_SWEEP_N, DEFAULT_SWEEP_TRIALS,
    MERGE_MODE_STRICT, MERGE_MODES, TIE_BREAK_MAX_CARDINALITY, TIE_BREAKS, UTILITY_TOLERANCE)
from pyfedcoalition.exceptions import FedCoalitionError, InvalidInputError
from pyfedcoalition.fcFormer import baselinePartition, formCoalitions
from pyfedcoalition.fcGraph import memberUtilities, partitionUtility
from pyfedcoalition.fcInstance import FcInstanceSpec, checkSeed, generateInstance
from pyfedcoalition.fcOracle import verify

LOGGER = logging.getLogger(__name__)


class FcRunOptions(object):
    def __init__(self, tieBreak=TIE_BREAK_MAX_CARDINALITY, mode=MERGE_MODE_STRICT, enumLimit=DEFAULT_ENUM_LIMIT,
                 maxCliqueNodes=DEFAULT_MAX_CLIQUE_NODES, oracleCap=DEFAULT_ORACLE_CAP, forceVerify=False,
                 firstClique=None):
        if tieBreak not in TIE_BREAKS:
            raise InvalidInputError(f"Unknown tie-break {tieBreak!r}, expected one of {TIE_BREAKS}")
        if mode not in MERGE_MODES:
            raise InvalidInputError(f"Unknown merge mode {mode!r}, expected one of {MERGE_MODES}")
        for name, value in (("enumeration limit", enumLimit), ("clique guard", maxCliqueNodes), ("oracle cap", oracleCap)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise InvalidInputError(f"The {name} must be a positive integer, got {value!r}")
        self._tieBreak = tieBreak
        self._mode = mode
        self._enumLimit = enumLimit
        self._maxCliqueNodes = maxCliqueNodes
        self._oracleCap = oracleCap
        self._forceVerify = forceVerify
        self._firstClique = firstClique

    @property
    def tieBreak(self):
        return self._tieBreak
    @property
    def mode(self):
        return self._mode
    @property
    def enumLimit(self):
        return self._enumLimit
    @property
    def maxCliqueNodes(self):
        return self._maxCliqueNodes
    @property
    def oracleCap(self):
        return self._oracleCap
    @property
    def forceVerify(self):
        return self._forceVerify
    @property
    def firstClique(self):
        return self._firstClique


class FcRunReport(object):
    def __init__(self, partition, baseline, totalUtility, baselineUtility, perMemberUtilities,
                 mergeTrace, verification, timings):
        self._partition = partition
        self._baseline = baseline
        self._totalUtility = totalUtility
        self._baselineUtility = baselineUtility
        self._perMemberUtilities = dict(perMemberUtilities)
        self._mergeTrace = tuple(mergeTrace)
        self._verification = verification
        self._timings = dict(timings)

    def __str__(self):
        return self.describe()

    def describe(self, label=str):
        verified = self.verification if self.verification is not None else "Verification skipped"
        return f"Coalitions: {self.partition.describe(label)}\n Baseline: {self.baseline.describe(label)}\n Utility: {self.totalUtility:.6f} (baseline {self.baselineUtility:.6f})\n Merges: {len(self.mergeTrace)}\n {verified}"

    def toDict(self, includeTimings=False):
        data = {
            'partition': self.partition.toLists(),
            'baseline': self.baseline.toLists(),
            'total_utility': self.totalUtility,
            'baseline_utility': self.baselineUtility,
            'per_member_utilities': {str(i): u for i, u in sorted(self.perMemberUtilities.items())},
            'merge_trace': [
                {
                    'kind': x.kind,
                    'coalition_ids': list(x.coalitionIds),
                    'members': [list(c.sortedMembers) for c in x.coalitions],
                }
                for x in self.mergeTrace
            ],
            'verification': self.verification.toDict() if self.verification is not None else None,
        }
        if includeTimings:
            data['timings'] = dict(self.timings)
        return data

    @property
    def partition(self):
        return self._partition
    @property
    def baseline(self):
        return self._baseline
    @property
    def totalUtility(self):
        return self._totalUtility
    @property
    def baselineUtility(self):
        return self._baselineUtility
    @property
    def perMemberUtilities(self):
        return self._perMemberUtilities
    @property
    def mergeTrace(self):
        return self._mergeTrace
    @property
    def verification(self):
        return self._verification
    @property
    def timings(self):
        return self._timings


def run(instance, options=None):
    options = options if options is not None else FcRunOptions()
    b, c = instance
    timings = {}

    start = time.perf_counter()
    baseline = baselinePartition(b, c, options.tieBreak, options.maxCliqueNodes, options.firstClique)
    timings['baseline'] = time.perf_counter() - start

    start = time.perf_counter()
    partition, trace = formCoalitions(b, c, options.tieBreak, options.enumLimit, options.maxCliqueNodes,
                                      options.firstClique)
    timings['formation'] = time.perf_counter() - start

    total = partitionUtility(b, partition)
    baselineTotal = partitionUtility(b, baseline)
    perMember = memberUtilities(b, partition)
    baselinePerMember = memberUtilities(b, baseline)
    if not partition.isCoarseningOf(baseline) or total < baselineTotal - UTILITY_TOLERANCE:
        raise FedCoalitionError(f"Formed coalitions {partition} do not coarsen baseline {baseline}")
    for i, u in perMember.items():
        if u < baselinePerMember[i] - UTILITY_TOLERANCE:
            raise FedCoalitionError(f"Node {i} lost utility against the baseline ({u} < {baselinePerMember[i]})")

    verification = None
    if options.forceVerify or len(baseline) <= options.oracleCap:
        start = time.perf_counter()
        cap = max(options.oracleCap, len(partition)) if options.forceVerify else options.oracleCap
        verification = verify(b, c, partition, options.mode, cap)
        timings['verification'] = time.perf_counter() - start
    else:
        LOGGER.warning(f"Skipping verification: {len(baseline)} baseline blocks exceed the oracle cap of {options.oracleCap}")

    LOGGER.info(f"run: {len(partition)} coalitions, utility {total:.6f} vs baseline {baselineTotal:.6f}")
    return FcRunReport(partition, baseline, total, baselineTotal, perMember, trace, verification, timings)


class FcSweepRow(object):
    def __init__(self, alpha, utilities, baselineUtilities, coalitionCounts, verified):
        self._alpha = alpha
        self._utilities = tuple(utilities)
        self._baselineUtilities = tuple(baselineUtilities)
        self._coalitionCounts = tuple(coalitionCounts)
        self._verified = tuple(verified)

    def __str__(self):
        passRate = "n/a" if self.passRate is None else f"{self.passRate:.2f}"
        return (f"alpha={self.alpha:<5} utility={self.meanUtility:.4f}±{self.stdUtility:.4f} "
                f"baseline={self.meanBaselineUtility:.4f}±{self.stdBaselineUtility:.4f} "
                f"coalitions={self.meanCoalitions:.2f} verified={passRate}")

    def toDict(self):
        return {
            'alpha': self.alpha,
            'trials': len(self._utilities),
            'mean_utility': self.meanUtility,
            'std_utility': self.stdUtility,
            'mean_baseline_utility': self.meanBaselineUtility,
            'std_baseline_utility': self.stdBaselineUtility,
            'mean_coalitions': self.meanCoalitions,
            'verification_pass_rate': self.passRate,
            'utilities': list(self._utilities),
            'baseline_utilities': list(self._baselineUtilities),
        }

    @property
    def alpha(self):
        return self._alpha
    @property
    def utilities(self):
        return self._utilities
    @property
    def baselineUtilities(self):
        return self._baselineUtilities
    @property
    def meanUtility(self):
        return float(np.mean(self._utilities))
    @property
    def stdUtility(self):
        return float(np.std(self._utilities))
    @property
    def meanBaselineUtility(self):
        return float(np.mean(self._baselineUtilities))
    @property
    def stdBaselineUtility(self):
        return float(np.std(self._baselineUtilities))
    @property
    def meanCoalitions(self):
        return float(np.mean(self._coalitionCounts))
    # fraction of verified trials that passed all three checks
    @property
    def passRate(self):
        checked = [v for v in self._verified if v is not None]
        if not checked:
            return None
        return sum(checked) / len(checked)


class FcSweepReport(object):
    def __init__(self, n, trials, seed, rows):
        self._n = n
        self._trials = trials
        self._seed = seed
        self._rows = tuple(rows)

    def __str__(self):
        lines = [f"Sweep - n: {self.n} trials: {self.trials} seed: {self.seed}"]
        lines.extend(str(row) for row in self.rows)
        return "\n".join(lines)

    def toDict(self):
        return {'n': self.n, 'trials': self.trials, 'seed': self.seed, 'rows': [r.toDict() for r in self.rows]}

    @property
    def n(self):
        return self._n
    @property
    def trials(self):
        return self._trials
    @property
    def seed(self):
        return self._seed
    @property
    def rows(self):
        return self._rows


def _trialSeeds(seed, count):
    children = np.random.SeedSequence(seed).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) for child in children]

def sweep(n=DEFAULT_SWEEP_N, alphas=DEFAULT_SWEEP_ALPHAS, trials=DEFAULT_SWEEP_TRIALS, seed=DEFAULT_SEED,
          options=None, benefitDensity=DEFAULT_BENEFIT_DENSITY, weightDist=None, workers=1):
    """Average formed and baseline utilities over seeded random instances,
    one row per alpha. Trials may run on a thread pool; results are folded in
    trial order so the report only depends on the seed."""
    if isinstance(trials, bool) or not isinstance(trials, int) or trials < 1:
        raise InvalidInputError(f"Trials must be a positive integer, got {trials!r}")
    seed = checkSeed(seed)
    alphas = tuple(alphas)
    options = options if options is not None else FcRunOptions()
    seeds = _trialSeeds(seed, len(alphas) * trials)
    specs = [
        FcInstanceSpec(n, alpha, weightDist, benefitDensity, seeds[k * trials + l])
        for k, alpha in enumerate(alphas)
        for l in range(trials)
    ]

    def runTrial(spec):
        report = run(generateInstance(spec), options)
        verified = report.verification.ok if report.verification is not None else None
        return report.totalUtility, report.baselineUtility, len(report.partition), verified

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(runTrial, specs))
    else:
        outcomes = [runTrial(spec) for spec in specs]

    rows = []
    for k, alpha in enumerate(alphas):
        cell = outcomes[k * trials:(k + 1) * trials]
        row = FcSweepRow(alpha, [o[0] for o in cell], [o[1] for o in cell], [o[2] for o in cell], [o[3] for o in cell])
        LOGGER.info(f"sweep: {row}")
        rows.append(row)
    return FcSweepReport(n, trials, seed, rows)
