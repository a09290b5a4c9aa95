"""Instance and result documents: instance JSON, partition JSON, report JSON
and DOT export."""
import json
import logging

import pydot

from pyfedcoalition.const import (DOT_BENEFIT_COLOR, DOT_COMPETING_COLOR, KEY_BENEFIT, KEY_COMPETING,
    KEY_DST, KEY_LABELS, KEY_N, KEY_SRC, KEY_WEIGHT)
from pyfedcoalition.exceptions import InstanceParseError, InstanceValidationError, InvalidInputError
from pyfedcoalition.fcGraph import FcBenefitGraph, FcCompetingGraph, FcPartition
from pyfedcoalition.fcInstance import FcInstance

LOGGER = logging.getLogger(__name__)


def _isInt(value):
    return isinstance(value, int) and not isinstance(value, bool)

def _isNumber(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)

def _readJSON(path):
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except UnicodeDecodeError as e:
        raise InstanceParseError(f"{path}: not valid UTF-8 ({e.reason} at byte {e.start})") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceParseError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from e
    # integer literals past the int conversion limit
    except ValueError as e:
        raise InstanceParseError(f"{path}: {e}") from e

def dumpJSON(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"

def instanceToDict(instance):
    data = {
        KEY_N: instance.n,
        KEY_BENEFIT: [{KEY_SRC: src, KEY_DST: dst, KEY_WEIGHT: w} for src, dst, w in instance.benefit.edges],
        KEY_COMPETING: [[a, z] for a, z in instance.competing.pairs],
    }
    if instance.labels is not None:
        data[KEY_LABELS] = list(instance.labels)
    return data

def instanceFromDict(data, source="<instance>"):
    if not isinstance(data, dict):
        raise InstanceParseError(f"{source}: expected a JSON object at top level")
    n = data.get(KEY_N)
    if not _isInt(n):
        raise InstanceParseError(f"{source}: field '{KEY_N}' must be an integer, got {n!r}")
    benefitJSON = data.get(KEY_BENEFIT, [])
    competingJSON = data.get(KEY_COMPETING, [])
    if not isinstance(benefitJSON, list):
        raise InstanceParseError(f"{source}: field '{KEY_BENEFIT}' must be a list")
    if not isinstance(competingJSON, list):
        raise InstanceParseError(f"{source}: field '{KEY_COMPETING}' must be a list")
    edges = []
    for k, edge in enumerate(benefitJSON):
        if not isinstance(edge, dict):
            raise InstanceParseError(f"{source}: {KEY_BENEFIT}[{k}] must be an object")
        for key, check in ((KEY_SRC, _isInt), (KEY_DST, _isInt), (KEY_WEIGHT, _isNumber)):
            if not check(edge.get(key)):
                raise InstanceParseError(f"{source}: {KEY_BENEFIT}[{k}].{key} is missing or has the wrong type")
        edges.append((edge[KEY_SRC], edge[KEY_DST], edge[KEY_WEIGHT]))
    pairs = []
    for k, pair in enumerate(competingJSON):
        if not isinstance(pair, list) or len(pair) != 2 or not all(_isInt(v) for v in pair):
            raise InstanceParseError(f"{source}: {KEY_COMPETING}[{k}] must be a pair of integers")
        pairs.append((pair[0], pair[1]))
    labels = data.get(KEY_LABELS)
    if labels is not None and (not isinstance(labels, list) or not all(isinstance(l, str) for l in labels)):
        raise InstanceParseError(f"{source}: field '{KEY_LABELS}' must be a list of strings")
    try:
        return FcInstance(FcBenefitGraph(n, edges), FcCompetingGraph(n, pairs), labels)
    except InvalidInputError as e:
        raise InstanceValidationError(f"{source}: {e}") from e

def loadInstance(path):
    instance = instanceFromDict(_readJSON(path), str(path))
    LOGGER.debug(f"Loaded instance from {path}: {instance}")
    return instance

def saveInstance(instance, path):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(dumpJSON(instanceToDict(instance)))
    LOGGER.debug(f"Saved instance to {path}")

# a JSON list of member lists
def loadPartition(path, n):
    data = _readJSON(path)
    if not isinstance(data, list) or not all(isinstance(block, list) and all(_isInt(i) for i in block) for block in data):
        raise InstanceParseError(f"{path}: a partition must be a list of integer lists")
    try:
        return FcPartition(n, data)
    except InvalidInputError as e:
        raise InstanceValidationError(f"{path}: {e}") from e

def _quoted(text):
    return '"' + str(text).replace('\\', '\\\\').replace('"', '\\"') + '"'

def toPydot(instance, partition):
    dot = pydot.Dot("coalitions", graph_type="digraph")
    for k, coalition in enumerate(partition):
        cluster = pydot.Cluster(f"coalition_{k}", label=_quoted(f"S{k}"))
        for i in coalition:
            cluster.add_node(pydot.Node(f"v{i}", label=_quoted(instance.label(i))))
        dot.add_subgraph(cluster)
    for src, dst, w in instance.benefit.edges:
        dot.add_edge(pydot.Edge(f"v{src}", f"v{dst}", label=_quoted(f"{w:.3g}"), color=DOT_BENEFIT_COLOR))
    for a, z in instance.competing.pairs:
        dot.add_edge(pydot.Edge(f"v{a}", f"v{z}", dir="none", style="dashed", color=DOT_COMPETING_COLOR))
    return dot

def exportDot(instance, partition, path):
    if partition.n != instance.n:
        raise InvalidInputError(f"Partition covers {partition.n} participants but the instance has {instance.n}")
    with open(path, 'w', encoding='utf-8') as f:
        f.write(toPydot(instance, partition).to_string())
    LOGGER.debug(f"Wrote {len(partition)} clusters to {path}")
