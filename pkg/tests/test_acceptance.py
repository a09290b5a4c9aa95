"""Seeded sweeps over generated instances.

The grids below cover n in [2, 12], every competition probability of the
default sweep and three benefit densities.
"""
import time
from itertools import product

import numpy as np
import pytest

from pyfedcoalition.const import (DEFAULT_SWEEP_ALPHAS, MERGE_MODE_STRICT, TIE_BREAK_LEXICOGRAPHIC,
    UTILITY_TOLERANCE)
from pyfedcoalition.exceptions import EnumerationLimitError, SizeLimitError
from pyfedcoalition.fcFormer import (baselinePartition, buildQuotient, findCycleCandidate,
    findNeighborsCandidate, findPathCandidate, formCoalitions, runMergeLoops)
from pyfedcoalition.fcGraph import memberUtilities, partitionUtility
from pyfedcoalition.fcInstance import FcInstanceSpec, generateInstance
from pyfedcoalition.fcOracle import checkPrinciple1, checkPrinciple2, findBlockingMerge

from strategies import makeInstance

DENSITIES = (0.2, 0.5, 0.8)


def sweepSpecs(count, nRange, seed):
    rng = np.random.default_rng(seed)
    grid = list(product(DEFAULT_SWEEP_ALPHAS, DENSITIES))
    specs = []
    for k in range(count):
        alpha, density = grid[k % len(grid)]
        n = int(rng.integers(nRange[0], nRange[1] + 1))
        specs.append(FcInstanceSpec(n, alpha, benefitDensity=density, seed=int(rng.integers(0, 2**63))))
    return specs


@pytest.mark.slow
class TestPrinciplesSweep:
    def test_thousand_instances(self):
        started = time.perf_counter()
        for spec in sweepSpecs(1000, (2, 12), seed=2024):
            b, c = generateInstance(spec)
            baseline = baselinePartition(b, c)
            q, trace = runMergeLoops(buildQuotient(b, c, baseline))
            partition = q.toPartition()

            assert checkPrinciple1(b, partition) == [], spec
            assert checkPrinciple2(b, c, partition) == [], spec
            for coalition in partition:
                assert not any(c.competes(a, z) for a in coalition for z in coalition), spec

            assert findCycleCandidate(q) is None, spec
            assert findPathCandidate(q) is None, spec
            assert findNeighborsCandidate(q) is None, spec

            assert partition.isCoarseningOf(baseline), spec
            assert partitionUtility(b, partition) >= partitionUtility(b, baseline) - UTILITY_TOLERANCE, spec
            before = memberUtilities(b, baseline)
            for i, u in memberUtilities(b, partition).items():
                assert u >= before[i] - UTILITY_TOLERANCE, spec
        assert time.perf_counter() - started < 60


@pytest.mark.slow
class TestOptimalitySweep:
    def test_no_blocking_merge(self):
        for spec in sweepSpecs(500, (2, 10), seed=7):
            b, c = generateInstance(spec)
            partition, _ = formCoalitions(b, c)
            assert findBlockingMerge(b, c, partition, MERGE_MODE_STRICT) is None, spec


class TestScale:
    def test_thirty_participants(self):
        b, c = generateInstance(FcInstanceSpec(30, 0.2, benefitDensity=0.5, seed=30))
        started = time.perf_counter()
        partition, _ = formCoalitions(b, c)
        assert time.perf_counter() - started < 10
        assert checkPrinciple1(b, partition) == []
        assert checkPrinciple2(b, c, partition) == []

    def test_clique_guard_fails_loudly(self):
        b, c = makeInstance(129)
        with pytest.raises(SizeLimitError):
            formCoalitions(b, c)

    def test_enumeration_limit_fails_loudly(self):
        # cover {0,2,4} {1,3,5} leaves singletons joined by six independent 2-cycles
        b, c = makeInstance(6, [(a, z, 1.0) for a, z in ((0, 3), (0, 5), (2, 1), (2, 5), (4, 1), (4, 3))]
                            + [(z, a, 1.0) for a, z in ((0, 3), (0, 5), (2, 1), (2, 5), (4, 1), (4, 3))],
                            [(0, 1), (2, 3), (4, 5)])
        with pytest.raises(EnumerationLimitError):
            formCoalitions(b, c, TIE_BREAK_LEXICOGRAPHIC, enumLimit=2)
