"""Problem instances and their seeded random generation.

Generation uses numpy's default generator (PCG64) seeded with FcInstanceSpec.seed.
Draw order is fixed: one uniform per unordered pair (a < b, row-major) decides
competition with probability alpha; then for each ordered pair (src != dst,
row-major) one uniform decides benefit presence with probability
benefitDensity and, for a present edge under a uniform weight distribution,
one more draw gives its weight. Instances meant to be shared across
implementations should travel as saved instance files rather than seeds.
"""
import logging
import math

import numpy as np

from pyfedcoalition.const import (DEFAULT_BENEFIT_DENSITY, DEFAULT_SEED, DEFAULT_WEIGHT_HI,
    DEFAULT_WEIGHT_LO, WEIGHT_DIST_CONSTANT, WEIGHT_DIST_UNIFORM)
from pyfedcoalition.exceptions import InvalidInputError
from pyfedcoalition.fcGraph import FcBenefitGraph, FcCompetingGraph

LOGGER = logging.getLogger(__name__)


def _checkProbability(name, value):
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not (0.0 <= value <= 1.0):
        raise InvalidInputError(f"{name} must lie in [0, 1], got {value!r}")
    return float(value)

def checkSeed(seed):
    if isinstance(seed, bool) or not isinstance(seed, int) or not (0 <= seed < 2**64):
        raise InvalidInputError(f"Seed must be a 64-bit unsigned integer, got {seed!r}")
    return seed


class FcWeightDist(object):
    def __init__(self, kind, lo=None, hi=None, value=None):
        if kind == WEIGHT_DIST_UNIFORM:
            if lo is None or hi is None or not (0 < lo <= hi) or math.isinf(hi):
                raise InvalidInputError(f"Uniform weights need 0 < lo <= hi, got lo={lo} hi={hi}")
        elif kind == WEIGHT_DIST_CONSTANT:
            if value is None or not (value > 0) or math.isinf(value):
                raise InvalidInputError(f"Constant weight must be positive, got {value}")
        else:
            raise InvalidInputError(f"Unknown weight distribution {kind!r}")
        self._kind = kind
        self._lo = lo
        self._hi = hi
        self._value = value

    @classmethod
    def uniform(cls, lo=DEFAULT_WEIGHT_LO, hi=DEFAULT_WEIGHT_HI):
        return cls(WEIGHT_DIST_UNIFORM, lo=float(lo), hi=float(hi))

    @classmethod
    def constant(cls, w):
        return cls(WEIGHT_DIST_CONSTANT, value=float(w))

    # "uniform:LO:HI" or "constant:W"
    @classmethod
    def parse(cls, text):
        parts = text.split(':')
        try:
            if parts[0] == WEIGHT_DIST_UNIFORM and len(parts) == 3:
                return cls.uniform(float(parts[1]), float(parts[2]))
            if parts[0] == WEIGHT_DIST_CONSTANT and len(parts) == 2:
                return cls.constant(float(parts[1]))
        except ValueError as e:
            raise InvalidInputError(f"Cannot parse weight distribution {text!r}: {e}") from e
        raise InvalidInputError(f"Weight distribution must be uniform:LO:HI or constant:W, got {text!r}")

    def draw(self, rng):
        if self.kind == WEIGHT_DIST_CONSTANT:
            return self._value
        return float(rng.uniform(self._lo, self._hi))

    def __str__(self):
        if self.kind == WEIGHT_DIST_CONSTANT:
            return f"{WEIGHT_DIST_CONSTANT}:{self._value}"
        return f"{WEIGHT_DIST_UNIFORM}:{self._lo}:{self._hi}"

    def __eq__(self, other):
        if not isinstance(other, FcWeightDist):
            return NotImplemented
        return str(self) == str(other)

    def __hash__(self):
        return hash(str(self))

    @property
    def kind(self):
        return self._kind


class FcInstanceSpec(object):
    def __init__(self, n, alpha, weightDist=None, benefitDensity=DEFAULT_BENEFIT_DENSITY, seed=DEFAULT_SEED):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise InvalidInputError(f"Participant count must be a non-negative integer, got {n!r}")
        self._n = n
        self._alpha = _checkProbability("alpha", alpha)
        self._benefitDensity = _checkProbability("benefit density", benefitDensity)
        self._weightDist = weightDist if weightDist is not None else FcWeightDist.uniform()
        self._seed = checkSeed(seed)

    def __str__(self):
        return f"Instance Spec - n: {self.n} alpha: {self.alpha} density: {self.benefitDensity} weights: {self.weightDist} seed: {self.seed}"

    @property
    def n(self):
        return self._n
    @property
    def alpha(self):
        return self._alpha
    @property
    def weightDist(self):
        return self._weightDist
    @property
    def benefitDensity(self):
        return self._benefitDensity
    @property
    def seed(self):
        return self._seed


class FcInstance(object):
    """a benefit graph and a competing graph over the same participants"""

    def __init__(self, benefit, competing, labels=None):
        if benefit.n != competing.n:
            raise InvalidInputError(f"Benefit graph has {benefit.n} participants but competing graph has {competing.n}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != benefit.n or not all(isinstance(l, str) for l in labels):
                raise InvalidInputError(f"Expected {benefit.n} string labels, got {labels!r}")
        self._benefit = benefit
        self._competing = competing
        self._labels = labels

    def __iter__(self):
        return iter((self._benefit, self._competing))

    def __eq__(self, other):
        if not isinstance(other, FcInstance):
            return NotImplemented
        return (self.benefit, self.competing, self.labels) == (other.benefit, other.competing, other.labels)

    def __hash__(self):
        return hash((self.benefit, self.competing, self.labels))

    def __str__(self):
        return f"Instance - {self.benefit} / {self.competing}"

    def label(self, i):
        return self._labels[i] if self._labels is not None else f"v{i}"

    @property
    def n(self):
        return self._benefit.n
    @property
    def benefit(self):
        return self._benefit
    @property
    def competing(self):
        return self._competing
    @property
    def labels(self):
        return self._labels


def generateInstance(spec):
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    pairs = []
    for a in range(n):
        for z in range(a + 1, n):
            if rng.random() < spec.alpha:
                pairs.append((a, z))
    edges = []
    for src in range(n):
        for dst in range(n):
            if src == dst:
                continue
            if rng.random() < spec.benefitDensity:
                edges.append((src, dst, spec.weightDist.draw(rng)))
    LOGGER.debug(f"generateInstance: {spec} -> {len(edges)} benefit edges, {len(pairs)} competing pairs")
    return FcInstance(FcBenefitGraph(n, edges), FcCompetingGraph(n, pairs))
