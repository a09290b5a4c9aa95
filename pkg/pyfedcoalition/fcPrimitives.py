"""Classical graph algorithms the coalition former is built from.

Clique enumeration, strongly connected components, cycle and simple-path
enumeration and reachability are delegated to networkx; this module adds the
guards, the clique cover and a canonical ordering of every result so runs are
reproducible.
"""
import logging

import networkx as nx

from pyfedcoalition.const import (DEFAULT_ENUM_LIMIT, DEFAULT_MAX_CLIQUE_NODES,
    TIE_BREAK_LEXICOGRAPHIC, TIE_BREAK_MAX_CARDINALITY, TIE_BREAKS)
from pyfedcoalition.exceptions import EnumerationLimitError, InvalidInputError, SizeLimitError
from pyfedcoalition.fcGraph import (FcBenefitGraph, FcCoalition, FcCompetingGraph, FcDataUsageGraph,
    FcPartition, asCoalition, checkCount, checkNode, coalitionUtility)

LOGGER = logging.getLogger(__name__)


class FcUndirectedGraph(object):
    def __init__(self, n, pairs=()):
        self._n = checkCount(n)
        normalized = set()
        for a, b in pairs:
            checkNode(n, a)
            checkNode(n, b)
            if a == b:
                raise InvalidInputError(f"Undirected edge ({a}, {b}) is a self-pair")
            normalized.add((min(a, b), max(a, b)))
        self._pairs = tuple(sorted(normalized))

    def __eq__(self, other):
        if not isinstance(other, FcUndirectedGraph):
            return NotImplemented
        return self.n == other.n and self._pairs == other._pairs

    def __hash__(self):
        return hash((self.n, self._pairs))

    def __repr__(self):
        return f"FcUndirectedGraph({self.n}, {list(self._pairs)!r})"

    def adjacent(self, a, b):
        return (min(a, b), max(a, b)) in self._pairs

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


class FcDirectedGraph(object):
    def __init__(self, n, edges=()):
        self._n = checkCount(n)
        for src, dst in edges:
            checkNode(n, src)
            checkNode(n, dst)
            if src == dst:
                raise InvalidInputError(f"Directed edge ({src}, {dst}) is a self-loop")
        self._edges = tuple(sorted(set(edges)))

    @classmethod
    def fromBenefitGraph(cls, g):
        return cls(g.n, g.edgePairs)

    def __eq__(self, other):
        if not isinstance(other, FcDirectedGraph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self):
        return hash((self.n, self._edges))

    def __repr__(self):
        return f"FcDirectedGraph({self.n}, {list(self._edges)!r})"

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


class FcCliqueSet(object):
    def __init__(self, cliques):
        self._cliques = tuple(sorted(asCoalition(c) for c in cliques))

    def __len__(self):
        return len(self._cliques)

    def __iter__(self):
        return iter(self._cliques)

    def __contains__(self, clique):
        return asCoalition(clique) in self._cliques

    def __repr__(self):
        return f"FcCliqueSet({[list(c) for c in self._cliques]!r})"


def _undirected(g):
    if isinstance(g, nx.Graph) and not g.is_directed():
        return g
    if isinstance(g, (FcUndirectedGraph, FcCompetingGraph)):
        return g.toNetworkx()
    raise InvalidInputError(f"Expected an undirected graph, got {type(g).__name__}")

def _directed(g):
    if isinstance(g, nx.DiGraph):
        return g
    if isinstance(g, (FcDirectedGraph, FcBenefitGraph, FcDataUsageGraph)):
        return g.toNetworkx()
    raise InvalidInputError(f"Expected a directed graph, got {type(g).__name__}")


# complement of the competing graph: adjacency means independence
def inverseGraph(c):
    rivals = set(c.pairs)
    pairs = [(a, b) for a in range(c.n) for b in range(a + 1, c.n) if (a, b) not in rivals]
    return FcUndirectedGraph(c.n, pairs)

def maximalCliques(g, maxNodes=DEFAULT_MAX_CLIQUE_NODES):
    """All maximal cliques, found with pivoting Bron-Kerbosch (networkx
    find_cliques). Isolated nodes come back as singleton cliques."""
    G = _undirected(g)
    if G.number_of_nodes() > maxNodes:
        raise SizeLimitError(f"Clique search on {G.number_of_nodes()} nodes exceeds the guard of {maxNodes}")
    cliques = FcCliqueSet(nx.find_cliques(G))
    LOGGER.debug(f"maximalCliques: {len(cliques)} cliques on {G.number_of_nodes()} nodes")
    return cliques

def cliquePartition(g, tieBreak=TIE_BREAK_MAX_CARDINALITY, benefit=None,
                    maxNodes=DEFAULT_MAX_CLIQUE_NODES, firstClique=None):
    """Greedy clique cover: repeatedly take one maximal clique of the residual
    graph and remove its nodes.

    max-cardinality prefers the largest clique, then (with a benefit graph)
    the largest internal benefit weight, then the smallest member list.
    lexicographic takes the smallest member list. firstClique, when given,
    must be a maximal clique of g and is taken before the greedy loop.
    """
    if tieBreak not in TIE_BREAKS:
        raise InvalidInputError(f"Unknown tie-break {tieBreak!r}, expected one of {TIE_BREAKS}")
    G = _undirected(g)
    n = G.number_of_nodes()

    def selectionKey(clique):
        if tieBreak == TIE_BREAK_LEXICOGRAPHIC:
            return clique.sortedMembers
        internal = coalitionUtility(benefit, clique) if benefit is not None else 0.0
        return (-len(clique), -internal, clique.sortedMembers)

    remaining = set(G.nodes)
    blocks = []
    if firstClique is not None:
        first = asCoalition(firstClique)
        if first not in maximalCliques(G, maxNodes):
            raise InvalidInputError(f"First clique {first} is not a maximal clique of the graph")
        blocks.append(first)
        remaining -= first.members
    while remaining:
        cliques = maximalCliques(G.subgraph(remaining), maxNodes)
        chosen = min(cliques, key=selectionKey)
        LOGGER.debug(f"cliquePartition: selected {chosen} out of {len(cliques)} residual cliques")
        blocks.append(chosen)
        remaining -= chosen.members
    return FcPartition(n, blocks)

def stronglyConnectedComponents(g):
    G = _directed(g)
    return FcPartition(G.number_of_nodes(), nx.strongly_connected_components(G))

# rotate so the smallest node leads
def _canonicalCycle(cycle):
    k = cycle.index(min(cycle))
    return tuple(cycle[k:] + cycle[:k])

def _sequenceKey(seq):
    return (len(seq), seq)

def enumerateCycles(g, limit=DEFAULT_ENUM_LIMIT, lengthBound=None):
    """Elementary cycles (Johnson's algorithm via networkx), each once in
    canonical rotation, ordered shortest first then lexicographically.
    Raises EnumerationLimitError once more than `limit` cycles exist."""
    G = _directed(g)
    found = []
    for cycle in nx.simple_cycles(G, length_bound=lengthBound):
        if len(found) >= limit:
            raise EnumerationLimitError(f"More than {limit} elementary cycles")
        found.append(_canonicalCycle(cycle))
    return sorted(found, key=_sequenceKey)

def enumerateSimplePaths(g, s, t, limit=DEFAULT_ENUM_LIMIT, cutoff=None):
    G = _directed(g)
    if s == t:
        raise InvalidInputError(f"Simple path endpoints must differ, got {s} twice")
    if s not in G or t not in G:
        raise InvalidInputError(f"Path endpoints ({s}, {t}) are not both in the graph")
    found = []
    for path in nx.all_simple_paths(G, s, t, cutoff=cutoff):
        if len(found) >= limit:
            raise EnumerationLimitError(f"More than {limit} simple paths from {s} to {t}")
        found.append(tuple(path))
    return sorted(found, key=_sequenceKey)

def reachable(g, s, t):
    """True iff a directed path of at least one edge leads from s to t, so a
    node reaches itself only through a cycle."""
    G = _directed(g)
    if s not in G or t not in G:
        raise InvalidInputError(f"Nodes ({s}, {t}) are not both in the graph")
    return any(nxt == t or nx.has_path(G, nxt, t) for nxt in G.successors(s))
