"""Conflict-free, free-rider-free coalition formation.

A baseline partition (a clique cover of the inverse competing graph, each
clique split into the strongly connected components of its benefit subgraph)
is lifted to coalition-level graphs and then coarsened by three merge loops:
cycles through a singleton coalition, simple paths between two larger
coalitions through a singleton, and benefit edges between two larger
coalitions. Every merged set is pairwise independent in the competing graph.
"""
import logging
from itertools import combinations

import networkx as nx

from pyfedcoalition.const import (DEFAULT_ENUM_LIMIT, DEFAULT_MAX_CLIQUE_NODES, MERGE_KIND_CYCLE,
    MERGE_KIND_NEIGHBORS, MERGE_KIND_PATH, MERGE_KINDS, TIE_BREAK_MAX_CARDINALITY)
from pyfedcoalition.exceptions import InvalidInputError, PreconditionError
from pyfedcoalition.fcGraph import FcCoalition, FcPartition, checkPartition, inducedBenefitSubgraph
from pyfedcoalition.fcPrimitives import (FcDirectedGraph, cliquePartition, enumerateCycles,
    enumerateSimplePaths, inverseGraph, stronglyConnectedComponents)

LOGGER = logging.getLogger(__name__)


class FcQuotientState(object):
    """the current coalitions with their benefit (zb) and competing (zc) projections"""

    def __init__(self, n, coalitions, zb, zc, nextId):
        self._n = n
        self._coalitions = dict(coalitions)
        self._zb = zb
        self._zc = zc
        self._nextId = nextId

    def __str__(self):
        parts = " ".join(f"{cid}:{self._coalitions[cid]}" for cid in self.coalitionIds)
        return f"Quotient State - Next Id: {self.nextId} Coalitions: {parts}"

    def copy(self):
        return FcQuotientState(self._n, self._coalitions, self._zb.copy(), self._zc.copy(), self._nextId)

    def size(self, cid):
        return len(self._coalitions[cid])

    def members(self, cid):
        return self._coalitions[cid]

    # no two of the given coalitions compete
    def independent(self, ids):
        return not any(self._zc.has_edge(a, b) for a, b in combinations(ids, 2))

    def toPartition(self):
        return FcPartition(self._n, self._coalitions.values())

    @property
    def n(self):
        return self._n
    @property
    def coalitions(self):
        return dict(self._coalitions)
    @property
    def coalitionIds(self):
        return tuple(sorted(self._coalitions))
    @property
    def zb(self):
        return self._zb
    @property
    def zc(self):
        return self._zc
    @property
    def nextId(self):
        return self._nextId


class FcMergeCandidate(object):
    def __init__(self, kind, coalitionIds, coalitions=()):
        if kind not in MERGE_KINDS:
            raise InvalidInputError(f"Unknown merge kind {kind!r}")
        self._kind = kind
        self._coalitionIds = tuple(coalitionIds)
        self._coalitions = tuple(coalitions)

    def __str__(self):
        return f"{self.kind} merge of {list(self.coalitionIds)}"

    def __repr__(self):
        return f"FcMergeCandidate({self.kind!r}, {self.coalitionIds!r})"

    def __eq__(self, other):
        if not isinstance(other, FcMergeCandidate):
            return NotImplemented
        return self.kind == other.kind and self.coalitionIds == other.coalitionIds

    def __hash__(self):
        return hash((self.kind, self.coalitionIds))

    @property
    def kind(self):
        return self._kind
    @property
    def coalitionIds(self):
        return self._coalitionIds
    @property
    def coalitions(self):
        return self._coalitions
    @property
    def members(self):
        return FcCoalition(i for c in self._coalitions for i in c)


def _candidate(q, kind, ids):
    return FcMergeCandidate(kind, ids, [q.members(cid) for cid in ids])

def _checkInstance(b, c):
    if b.n != c.n:
        raise InvalidInputError(f"Benefit graph has {b.n} participants but competing graph has {c.n}")

def baselinePartition(b, c, tieBreak=TIE_BREAK_MAX_CARDINALITY,
                      maxCliqueNodes=DEFAULT_MAX_CLIQUE_NODES, firstClique=None):
    _checkInstance(b, c)
    cover = cliquePartition(inverseGraph(c), tieBreak, benefit=b, maxNodes=maxCliqueNodes,
                            firstClique=firstClique)
    blocks = []
    for clique in cover:
        sccs = stronglyConnectedComponents(FcDirectedGraph.fromBenefitGraph(inducedBenefitSubgraph(b, clique)))
        # nodes outside the clique come back as isolated singletons
        blocks.extend(block for block in sccs if block.members <= clique.members)
    LOGGER.debug(f"baselinePartition: {len(cover)} cliques, {len(blocks)} blocks")
    return FcPartition(b.n, blocks)

def buildQuotient(b, c, p):
    _checkInstance(b, c)
    p = checkPartition(b, p)
    coalitions = dict(enumerate(p))
    zb = nx.DiGraph()
    zb.add_nodes_from(coalitions)
    for src, dst in b.edgePairs:
        l, m = p.indexOf(src), p.indexOf(dst)
        if l != m:
            zb.add_edge(l, m)
    zc = nx.Graph()
    zc.add_nodes_from(coalitions)
    for a, z in c.pairs:
        l, m = p.indexOf(a), p.indexOf(z)
        if l != m:
            zc.add_edge(l, m)
    return FcQuotientState(b.n, coalitions, zb, zc, len(p))

# zb without edges between competing coalitions; an independent cycle or path never uses them
def _independentBenefitView(q, nodes):
    h = nx.DiGraph(q.zb.subgraph(nodes))
    h.remove_edges_from([(u, v) for u, v in list(h.edges) if q.zc.has_edge(u, v)])
    return h

def findCycleCandidate(q, limit=DEFAULT_ENUM_LIMIT):
    """Shortest (then lexicographically smallest) elementary cycle of zb that
    holds a singleton coalition and whose coalitions are pairwise independent."""
    h = _independentBenefitView(q, q.coalitionIds)
    # a cycle through a singleton stays inside that singleton's component
    keep = set()
    for scc in nx.strongly_connected_components(h):
        if len(scc) > 1 and any(q.size(cid) == 1 for cid in scc):
            keep |= scc
    if not keep:
        return None
    h = h.subgraph(keep)
    # the limit applies to each bounded enumeration
    for bound in range(2, len(keep) + 1):
        cycles = enumerateCycles(h, limit, lengthBound=bound)
        for cycle in cycles:
            if len(cycle) != bound:
                continue
            if any(q.size(cid) == 1 for cid in cycle) and q.independent(cycle):
                return _candidate(q, MERGE_KIND_CYCLE, cycle)
    return None

def findPathCandidate(q, limit=DEFAULT_ENUM_LIMIT):
    """Shortest (then lexicographically smallest) simple path of zb between two
    coalitions of size >= 2 that passes a singleton coalition and whose
    coalitions are pairwise independent."""
    ids = q.coalitionIds
    if not any(q.size(cid) == 1 for cid in ids):
        return None
    large = [cid for cid in ids if q.size(cid) >= 2]
    searches = []
    for s in large:
        for t in large:
            if s == t or q.zc.has_edge(s, t):
                continue
            allowed = [v for v in ids if v in (s, t) or not (q.zc.has_edge(v, s) or q.zc.has_edge(v, t))]
            h = _independentBenefitView(q, allowed)
            if not nx.has_path(h, s, t):
                continue
            between = (nx.descendants(h, s) & nx.ancestors(h, t)) | {s, t}
            if not any(q.size(v) == 1 for v in between):
                continue
            searches.append((s, t, h.subgraph(between)))
    if not searches:
        return None
    longest = max(len(h) for _, _, h in searches)
    for cutoff in range(2, longest):
        qualifying = []
        for s, t, h in searches:
            paths = enumerateSimplePaths(h, s, t, limit, cutoff=cutoff)
            for path in paths:
                if len(path) == cutoff + 1 and any(q.size(v) == 1 for v in path) and q.independent(path):
                    qualifying.append(path)
        if qualifying:
            return _candidate(q, MERGE_KIND_PATH, min(qualifying))
    return None

def findNeighborsCandidate(q):
    pairs = set()
    for u, v in q.zb.edges:
        if q.size(u) >= 2 and q.size(v) >= 2 and not q.zc.has_edge(u, v):
            pairs.add((min(u, v), max(u, v)))
    if not pairs:
        return None
    return _candidate(q, MERGE_KIND_NEIGHBORS, min(pairs))

def merge(q, x):
    """Replace the candidate's coalitions by their union under id q.nextId and
    redirect every zb and zc edge touching them; returns (newId, new state)."""
    ids = x.coalitionIds
    if len(set(ids)) != len(ids) or len(ids) < 2:
        raise PreconditionError(f"Merge candidate {x} needs at least two distinct coalitions")
    for cid in ids:
        if cid not in q.coalitions:
            raise PreconditionError(f"Merge candidate {x} references missing coalition {cid}")
    merged = set(ids)
    state = q.copy()
    newId = state.nextId
    zb, zc = state.zb, state.zc
    zb.add_node(newId)
    zc.add_node(newId)
    for cid in ids:
        for pred in list(zb.predecessors(cid)):
            if pred not in merged:
                zb.add_edge(pred, newId)
        for succ in list(zb.successors(cid)):
            if succ not in merged:
                zb.add_edge(newId, succ)
        for rival in list(zc.neighbors(cid)):
            if rival not in merged:
                zc.add_edge(rival, newId)
    zb.remove_nodes_from(ids)
    zc.remove_nodes_from(ids)
    members = FcCoalition(i for cid in ids for i in q.members(cid))
    for cid in ids:
        del state._coalitions[cid]
    state._coalitions[newId] = members
    state._nextId = newId + 1
    return newId, state

def _applyMerge(q, x, trace):
    newId, q = merge(q, x)
    trace.append(x)
    LOGGER.debug(f"merged {x.kind} {list(x.coalitionIds)} into {newId}: {q.members(newId)}")
    return q

def _mergeCycles(q, trace, limit):
    while True:
        x = findCycleCandidate(q, limit)
        if x is None:
            return q
        q = _applyMerge(q, x, trace)

def _mergePaths(q, trace, limit):
    while True:
        x = findPathCandidate(q, limit)
        if x is None:
            return q
        q = _applyMerge(q, x, trace)
        q = _mergeCycles(q, trace, limit)

def _mergeNeighbors(q, trace, limit):
    while True:
        x = findNeighborsCandidate(q)
        if x is None:
            return q
        q = _applyMerge(q, x, trace)
        q = _mergeCycles(q, trace, limit)
        q = _mergePaths(q, trace, limit)

def runMergeLoops(q, limit=DEFAULT_ENUM_LIMIT):
    """Run the cycle, path and neighbor merge loops to their fixpoint.
    Returns the final state and the merge trace."""
    trace = []
    q = _mergeCycles(q, trace, limit)
    q = _mergePaths(q, trace, limit)
    q = _mergeNeighbors(q, trace, limit)
    return q, tuple(trace)

def formCoalitions(b, c, tieBreak=TIE_BREAK_MAX_CARDINALITY, enumLimit=DEFAULT_ENUM_LIMIT,
                   maxCliqueNodes=DEFAULT_MAX_CLIQUE_NODES, firstClique=None):
    _checkInstance(b, c)
    if b.n < 1:
        raise InvalidInputError("Coalition formation needs at least one participant")
    baseline = baselinePartition(b, c, tieBreak, maxCliqueNodes, firstClique)
    q, trace = runMergeLoops(buildQuotient(b, c, baseline), enumLimit)
    partition = q.toPartition()
    LOGGER.debug(f"formCoalitions: {len(baseline)} baseline blocks -> {len(partition)} coalitions after {len(trace)} merges")
    return partition, trace
