import logging

import sentry_sdk
from sentry_sdk import capture_exception

from pyfedcoalition.const import PYFEDCOALITION_VERSION, SENTRY_URL
from pyfedcoalition.fcFormer import baselinePartition, formCoalitions
from pyfedcoalition.fcInstance import generateInstance
from pyfedcoalition.fcOracle import verify
from pyfedcoalition.fcRunner import FcRunOptions, run, sweep

LOGGER = logging.getLogger(__name__)

class PyFedCoalition(object):
    """base object for coalition formation"""

    def __init__(self, options=None, sentryDsn=SENTRY_URL):
        if sentryDsn:
            sentry_sdk.init(sentryDsn, release=PYFEDCOALITION_VERSION)
        self._options = options if options is not None else FcRunOptions()

    def __str__(self):
        o = self.options
        return f"PyFedCoalition {PYFEDCOALITION_VERSION} - Tie-break: {o.tieBreak} Mode: {o.mode} Enumeration Limit: {o.enumLimit} Clique Guard: {o.maxCliqueNodes} Oracle Cap: {o.oracleCap}"

    def generate(self, spec):
        try:
            return generateInstance(spec)
        except Exception as e:
            capture_exception(e)
            raise

    def baseline(self, instance):
        try:
            o = self.options
            return baselinePartition(instance.benefit, instance.competing, o.tieBreak, o.maxCliqueNodes, o.firstClique)
        except Exception as e:
            capture_exception(e)
            raise

    # the formed partition and its merge trace
    def partition(self, instance):
        try:
            o = self.options
            return formCoalitions(instance.benefit, instance.competing, o.tieBreak, o.enumLimit,
                                  o.maxCliqueNodes, o.firstClique)
        except Exception as e:
            capture_exception(e)
            raise

    # verify a given partition, or the formed one when none is given
    def verify(self, instance, partition=None):
        try:
            if partition is None:
                partition, _ = self.partition(instance)
            cap = max(self.options.oracleCap, len(partition)) if self.options.forceVerify else self.options.oracleCap
            return verify(instance.benefit, instance.competing, partition, self.options.mode, cap)
        except Exception as e:
            capture_exception(e)
            raise

    def run(self, instance):
        try:
            return run(instance, self.options)
        except Exception as e:
            capture_exception(e)
            raise

    def sweep(self, n, alphas, trials, seed, benefitDensity, weightDist=None, workers=1):
        try:
            return sweep(n, alphas, trials, seed, self.options, benefitDensity, weightDist, workers)
        except Exception as e:
            capture_exception(e)
            raise

    @property
    def options(self):
        return self._options
