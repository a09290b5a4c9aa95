"""Relationship graphs over participants, coalitions, partitions and utilities.

Participants are dense integer ids in [0, n). All objects here are immutable
once built; operations are plain functions over them.
"""
import logging
import math

import networkx as nx

from pyfedcoalition.exceptions import InvalidInputError

LOGGER = logging.getLogger(__name__)


def checkCount(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InvalidInputError(f"Participant count must be a non-negative integer, got {n!r}")
    return n

def checkNode(n, i):
    if isinstance(i, bool) or not isinstance(i, int) or i < 0 or i >= n:
        raise InvalidInputError(f"Node id {i!r} is outside [0, {n})")
    return i


class FcBenefitGraph(object):
    """weighted directed graph; edge (j, i, w) means j benefits i with weight w"""

    def __init__(self, n, edges=()):
        self._n = checkCount(n)
        weights = {}
        for src, dst, w in edges:
            checkNode(n, src)
            checkNode(n, dst)
            if src == dst:
                raise InvalidInputError(f"Benefit edge ({src}, {dst}) is a self-loop")
            if (src, dst) in weights:
                raise InvalidInputError(f"Duplicate benefit edge ({src}, {dst})")
            try:
                w = float(w)
            except (OverflowError, TypeError, ValueError) as e:
                raise InvalidInputError(f"Benefit edge ({src}, {dst}) has unusable weight {w!r:.40}") from e
            # also rejects NaN
            if not (w > 0) or math.isinf(w):
                raise InvalidInputError(f"Benefit edge ({src}, {dst}) has non-positive or non-finite weight {w}")
            weights[(src, dst)] = w
        self._weights = dict(sorted(weights.items()))
        self._incoming = {i: {} for i in range(n)}
        self._outgoing = {i: {} for i in range(n)}
        for (src, dst), w in self._weights.items():
            self._outgoing[src][dst] = w
            self._incoming[dst][src] = w

    def __str__(self):
        return f"Benefit Graph - Participants: {self.n} Edges: {len(self._weights)}"

    def __repr__(self):
        return f"FcBenefitGraph({self.n}, {list(self.edges)!r})"

    def __eq__(self, other):
        if not isinstance(other, FcBenefitGraph):
            return NotImplemented
        return self.n == other.n and self._weights == other._weights

    def __hash__(self):
        return hash((self.n, self.edges))

    def weight(self, src, dst):
        return self._weights.get((src, dst), 0.0)

    # sources benefiting node i, with weights
    def incoming(self, i):
        return self._incoming[checkNode(self.n, i)]

    # nodes benefiting from node i, with weights
    def outgoing(self, i):
        return self._outgoing[checkNode(self.n, i)]

    def toNetworkx(self):
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        for (src, dst), w in self._weights.items():
            g.add_edge(src, dst, weight=w)
        return g

    @property
    def n(self):
        return self._n
    @property
    def edges(self):
        return tuple((src, dst, w) for (src, dst), w in self._weights.items())
    @property
    def edgePairs(self):
        return tuple(self._weights)
    @property
    def numberOfEdges(self):
        return len(self._weights)


class FcCompetingGraph(object):
    """undirected conflict-of-interest graph"""

    def __init__(self, n, pairs=()):
        self._n = checkCount(n)
        seen = set()
        for a, b in pairs:
            checkNode(n, a)
            checkNode(n, b)
            if a == b:
                raise InvalidInputError(f"Competing pair ({a}, {b}) is a self-pair")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise InvalidInputError(f"Duplicate competing pair {key}")
            seen.add(key)
        self._pairs = tuple(sorted(seen))
        self._rivals = {i: set() for i in range(n)}
        for a, b in self._pairs:
            self._rivals[a].add(b)
            self._rivals[b].add(a)
        self._rivals = {i: frozenset(r) for i, r in self._rivals.items()}

    def __str__(self):
        return f"Competing Graph - Participants: {self.n} Pairs: {len(self._pairs)}"

    def __repr__(self):
        return f"FcCompetingGraph({self.n}, {list(self._pairs)!r})"

    def __eq__(self, other):
        if not isinstance(other, FcCompetingGraph):
            return NotImplemented
        return self.n == other.n and self._pairs == other._pairs

    def __hash__(self):
        return hash((self.n, self._pairs))

    def competes(self, a, b):
        return b in self._rivals.get(a, ())

    def rivals(self, i):
        return self._rivals[checkNode(self.n, i)]

    def toNetworkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self._pairs)
        return g

    @property
    def n(self):
        return self._n
    @property
    def pairs(self):
        return self._pairs


class FcCoalition(object):
    def __init__(self, members):
        members = frozenset(members)
        if not members:
            raise InvalidInputError("A coalition needs at least one member")
        for i in members:
            if isinstance(i, bool) or not isinstance(i, int) or i < 0:
                raise InvalidInputError(f"Coalition member {i!r} is not a node id")
        self._members = members
        self._sortedMembers = tuple(sorted(members))

    def __str__(self):
        return self.describe()

    # label maps a node id to its display name
    def describe(self, label=str):
        return "{" + ", ".join(label(i) for i in self._sortedMembers) + "}"

    def __repr__(self):
        return f"FcCoalition({list(self._sortedMembers)!r})"

    def __eq__(self, other):
        if not isinstance(other, FcCoalition):
            return NotImplemented
        return self._members == other._members

    def __hash__(self):
        return hash(self._members)

    def __lt__(self, other):
        return self._sortedMembers < other._sortedMembers

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        return iter(self._sortedMembers)

    def __contains__(self, i):
        return i in self._members

    @property
    def members(self):
        return self._members
    @property
    def sortedMembers(self):
        return self._sortedMembers


def asCoalition(s):
    return s if isinstance(s, FcCoalition) else FcCoalition(s)

def checkCoalition(n, s):
    s = asCoalition(s)
    for i in s:
        checkNode(n, i)
    return s


class FcPartition(object):
    """disjoint, covering coalitions over [0, n), ordered by smallest member"""

    def __init__(self, n, coalitions):
        self._n = checkCount(n)
        blocks = [checkCoalition(n, c) for c in coalitions]
        owner = {}
        for k, block in enumerate(blocks):
            for i in block:
                if i in owner:
                    raise InvalidInputError(f"Node {i} appears in more than one coalition")
                owner[i] = k
        missing = [i for i in range(n) if i not in owner]
        if missing:
            raise InvalidInputError(f"Partition does not cover nodes {missing}")
        self._coalitions = tuple(sorted(blocks))
        self._owner = {}
        for k, block in enumerate(self._coalitions):
            for i in block:
                self._owner[i] = k

    @classmethod
    def singletons(cls, n):
        return cls(n, [[i] for i in range(n)])

    @classmethod
    def grand(cls, n):
        return cls(n, [range(n)] if n else [])

    def __str__(self):
        return self.describe()

    def describe(self, label=str):
        return " ".join(c.describe(label) for c in self._coalitions)

    def __repr__(self):
        return f"FcPartition({self.n}, {self.toLists()!r})"

    def __eq__(self, other):
        if not isinstance(other, FcPartition):
            return NotImplemented
        return self.n == other.n and self._coalitions == other._coalitions

    def __hash__(self):
        return hash((self.n, self._coalitions))

    def __len__(self):
        return len(self._coalitions)

    def __iter__(self):
        return iter(self._coalitions)

    def coalitionOf(self, i):
        return self._coalitions[self._owner[checkNode(self.n, i)]]

    def indexOf(self, i):
        return self._owner[checkNode(self.n, i)]

    # every block of the finer partition sits inside exactly one block of this one
    def isCoarseningOf(self, finer):
        if finer.n != self.n:
            return False
        for block in finer:
            owners = {self._owner[i] for i in block}
            if len(owners) != 1:
                return False
        return True

    def toLists(self):
        return [list(c.sortedMembers) for c in self._coalitions]

    @property
    def n(self):
        return self._n
    @property
    def coalitions(self):
        return self._coalitions


class FcDataUsageGraph(object):
    def __init__(self, n, edges=()):
        self._n = checkCount(n)
        for src, dst in edges:
            checkNode(n, src)
            checkNode(n, dst)
        self._edges = tuple(sorted(set(edges)))

    def __eq__(self, other):
        if not isinstance(other, FcDataUsageGraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"FcDataUsageGraph({self.n}, {list(self._edges)!r})"

    def toNetworkx(self):
        g = nx.DiGraph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self._edges)
        return g

    @property
    def n(self):
        return self._n
    @property
    def edges(self):
        return self._edges


def inducedBenefitSubgraph(g, s):
    s = checkCoalition(g.n, s)
    edges = []
    for src in s:
        for dst, w in g.outgoing(src).items():
            if dst in s:
                edges.append((src, dst, w))
    return FcBenefitGraph(g.n, edges)

# u(S): sum of the induced edge weights
def coalitionUtility(g, s):
    return math.fsum(w for _, _, w in inducedBenefitSubgraph(g, s).edges)

def memberUtility(g, s, i):
    """Sum of the weights of induced edges pointing into member i."""
    s = checkCoalition(g.n, s)
    if i not in s:
        raise InvalidInputError(f"Node {i!r} is not a member of coalition {s}")
    return math.fsum(w for src, w in sorted(g.incoming(i).items()) if src in s)

def isCoalitionValid(g, s):
    """True iff s is a singleton or every member both benefits and benefits
    from some other member (weights are positive, so a positive sum is the
    same as one edge)."""
    s = checkCoalition(g.n, s)
    if len(s) == 1:
        return True
    for i in s:
        if not any(dst in s for dst in g.outgoing(i)):
            return False
        if not any(src in s for src in g.incoming(i)):
            return False
    return True

def checkPartition(g, p):
    if not isinstance(p, FcPartition):
        raise InvalidInputError(f"Expected a partition, got {type(p).__name__}")
    if p.n != g.n:
        raise InvalidInputError(f"Partition covers {p.n} participants but the graph has {g.n}")
    return p

def dataUsageGraph(g, p):
    p = checkPartition(g, p)
    edges = [(src, dst) for src, dst in g.edgePairs if p.indexOf(src) == p.indexOf(dst)]
    return FcDataUsageGraph(g.n, edges)

def partitionUtility(g, p):
    p = checkPartition(g, p)
    return math.fsum(coalitionUtility(g, c) for c in p)

def memberUtilities(g, p):
    p = checkPartition(g, p)
    return {i: memberUtility(g, p.coalitionOf(i), i) for i in range(g.n)}
