"""Brute-force certification of a partition.

Checks that no coalition member is a free rider, that no participant reaches
a competitor in the data usage graph, and that no subset of coalitions could
merge into an admissible coalition with strictly higher utility. The subset
search is exhaustive and therefore capped.
"""
import logging
import math
from itertools import combinations

from pyfedcoalition.const import (DEFAULT_ORACLE_CAP, DIRECTION_INCOMING, DIRECTION_OUTGOING,
    FINDING_BLOCKING_MERGE, FINDING_CONFLICT, FINDING_FREE_RIDER, MERGE_MODE_REACHABILITY,
    MERGE_MODE_STRICT, MERGE_MODES, UTILITY_TOLERANCE)
from pyfedcoalition.exceptions import InvalidInputError, SizeLimitError
from pyfedcoalition.fcGraph import (FcCoalition, checkCoalition, checkPartition, coalitionUtility,
    dataUsageGraph, inducedBenefitSubgraph, isCoalitionValid)
from pyfedcoalition.fcPrimitives import reachable

LOGGER = logging.getLogger(__name__)


class FcFinding(object):
    def __init__(self, kind, coalitionIndex=None, nodes=(), direction=None, blocking=()):
        self._kind = kind
        self._coalitionIndex = coalitionIndex
        self._nodes = tuple(nodes)
        self._direction = direction
        self._blocking = tuple(blocking)

    def __str__(self):
        return self.describe()

    def describe(self, label=str):
        if self.kind == FINDING_FREE_RIDER:
            return f"free rider: node {label(self.nodes[0])} of coalition {self.coalitionIndex} has no {self.direction} benefit"
        if self.kind == FINDING_CONFLICT:
            return f"conflict: node {label(self.nodes[0])} reaches competitor {label(self.nodes[1])}"
        return "blocking merge: " + " + ".join(c.describe(label) for c in self.blocking)

    def __repr__(self):
        return f"FcFinding({self.kind!r}, {self.coalitionIndex!r}, {self.nodes!r}, {self.direction!r}, {self.blocking!r})"

    def __eq__(self, other):
        if not isinstance(other, FcFinding):
            return NotImplemented
        return (self.kind, self.coalitionIndex, self.nodes, self.direction, self.blocking) == \
            (other.kind, other.coalitionIndex, other.nodes, other.direction, other.blocking)

    def __hash__(self):
        return hash((self.kind, self.coalitionIndex, self.nodes, self.direction, self.blocking))

    def toDict(self):
        data = {'kind': self.kind}
        if self.coalitionIndex is not None:
            data['coalition'] = self.coalitionIndex
        if self.nodes:
            data['nodes'] = list(self.nodes)
        if self.direction is not None:
            data['missing'] = self.direction
        if self.blocking:
            data['blocking'] = [list(c.sortedMembers) for c in self.blocking]
        return data

    @property
    def kind(self):
        return self._kind
    @property
    def coalitionIndex(self):
        return self._coalitionIndex
    @property
    def nodes(self):
        return self._nodes
    @property
    def direction(self):
        return self._direction
    @property
    def blocking(self):
        return self._blocking


class FcVerificationReport(object):
    def __init__(self, mode, principle1, principle2, blocking):
        self._mode = mode
        self._principle1 = tuple(principle1)
        self._principle2 = tuple(principle2)
        self._blocking = blocking

    def __str__(self):
        return f"Verification ({self.mode}) - Principle 1: {self.principle1Ok} Principle 2: {self.principle2Ok} Optimal: {self.optimalOk}"

    def toDict(self):
        return {
            'mode': self.mode,
            'principle1_ok': self.principle1Ok,
            'principle2_ok': self.principle2Ok,
            'optimal_ok': self.optimalOk,
            'violations': [f.toDict() for f in self.violations],
        }

    @property
    def mode(self):
        return self._mode
    @property
    def principle1Ok(self):
        return not self._principle1
    @property
    def principle2Ok(self):
        return not self._principle2
    @property
    def optimalOk(self):
        return self._blocking is None
    @property
    def ok(self):
        return self.principle1Ok and self.principle2Ok and self.optimalOk
    @property
    def blockingMerge(self):
        return self._blocking
    @property
    def violations(self):
        found = list(self._principle1) + list(self._principle2)
        if self._blocking is not None:
            found.append(FcFinding(FINDING_BLOCKING_MERGE, blocking=self._blocking))
        return tuple(found)


def _checkMode(mode):
    if mode not in MERGE_MODES:
        raise InvalidInputError(f"Unknown merge mode {mode!r}, expected one of {MERGE_MODES}")
    return mode

def checkPrinciple1(b, p):
    p = checkPartition(b, p)
    findings = []
    for k, coalition in enumerate(p):
        if len(coalition) < 2:
            continue
        for i in coalition:
            if not any(src in coalition for src in b.incoming(i)):
                findings.append(FcFinding(FINDING_FREE_RIDER, k, (i,), DIRECTION_INCOMING))
            if not any(dst in coalition for dst in b.outgoing(i)):
                findings.append(FcFinding(FINDING_FREE_RIDER, k, (i,), DIRECTION_OUTGOING))
    return findings

def checkPrinciple2(b, c, p):
    """Every ordered competing pair (i, j) where i reaches j in the data usage graph."""
    p = checkPartition(b, p)
    if c.n != b.n:
        raise InvalidInputError(f"Benefit graph has {b.n} participants but competing graph has {c.n}")
    usage = dataUsageGraph(b, p).toNetworkx()
    findings = []
    for a, z in c.pairs:
        for src, dst in ((a, z), (z, a)):
            if reachable(usage, src, dst):
                findings.append(FcFinding(FINDING_CONFLICT, p.indexOf(src), (src, dst)))
    return findings

def mergedAdmissible(b, c, unionSet, mode=MERGE_MODE_STRICT):
    _checkMode(mode)
    s = checkCoalition(b.n, unionSet)
    if not isCoalitionValid(b, s):
        return False
    rivals = [(a, z) for a, z in c.pairs if a in s and z in s]
    if mode == MERGE_MODE_STRICT:
        return not rivals
    h = inducedBenefitSubgraph(b, s).toNetworkx()
    return not any(reachable(h, a, z) or reachable(h, z, a) for a, z in rivals)

def findBlockingMerge(b, c, p, mode=MERGE_MODE_STRICT, maxBlocks=DEFAULT_ORACLE_CAP):
    """The first subset of at least two coalitions, by size then
    lexicographically, whose union is admissible and strictly gains utility.
    None means no such subset exists."""
    _checkMode(mode)
    p = checkPartition(b, p)
    if len(p) > maxBlocks:
        raise SizeLimitError(f"Blocking-merge search over {len(p)} coalitions exceeds the cap of {maxBlocks}")
    blocks = p.coalitions
    utilities = [coalitionUtility(b, block) for block in blocks]
    checked = 0
    for size in range(2, len(blocks) + 1):
        for combo in combinations(range(len(blocks)), size):
            checked += 1
            union = FcCoalition(i for k in combo for i in blocks[k])
            parts = math.fsum(utilities[k] for k in combo)
            if coalitionUtility(b, union) <= parts + UTILITY_TOLERANCE:
                continue
            if mergedAdmissible(b, c, union, mode):
                LOGGER.debug(f"findBlockingMerge: blocking subset found after {checked} subsets")
                return tuple(blocks[k] for k in combo)
    LOGGER.debug(f"findBlockingMerge: no blocking subset among {checked} subsets")
    return None

def verify(b, c, p, mode=MERGE_MODE_STRICT, maxBlocks=DEFAULT_ORACLE_CAP):
    _checkMode(mode)
    principle1 = checkPrinciple1(b, p)
    principle2 = checkPrinciple2(b, c, p)
    blocking = findBlockingMerge(b, c, p, mode, maxBlocks)
    if blocking is not None and mode == MERGE_MODE_REACHABILITY:
        union = FcCoalition(i for block in blocking for i in block)
        if not mergedAdmissible(b, c, union, MERGE_MODE_STRICT):
            LOGGER.warning(f"Blocking merge {union} is admissible only under the reachability reading")
    return FcVerificationReport(mode, principle1, principle2, blocking)
