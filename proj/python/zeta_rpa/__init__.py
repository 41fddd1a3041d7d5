"""Remainder Pade approximants for the Hurwitz zeta function.

Rational arguments accept int, str ("5/2", "1.3") or fractions.Fraction.
Exact results come back as strings so nothing is rounded on the way out.
"""

import json
from fractions import Fraction

from . import _zeta_rpa as _core
from ._zeta_rpa import ZetaRpaError

__all__ = [
    "ZetaRpaError",
    "bernoulli",
    "pade",
    "rpa_symbolic",
    "rpa_eval",
    "zeta",
    "s2_apery",
    "s3_apery",
    "s3_apery_crosscheck",
    "weights_verify",
    "rates_scan",
]

DEFAULT_PRECISION = 128


def _q(x):
    if isinstance(x, float):
        raise TypeError("pass rationals as int, str or Fraction, not float")
    return str(x)


def bernoulli(k):
    """B_k as a Fraction, with B_1 = -1/2."""
    return Fraction(json.loads(_core.bernoulli(k)))


def pade(m1, m2, s=None):
    """[m1/m2] approximant of the remainder kernel; symbolic in s when s is None."""
    return json.loads(_core.pade("" if s is None else _q(s), m1, m2))


def rpa_symbolic(n, m1, m2, a=1):
    return json.loads(_core.rpa_symbolic(n, _q(a), m1, m2))


def rpa_eval(s, n, m1, m2, a=1, precision=DEFAULT_PRECISION):
    return json.loads(_core.rpa_eval(_q(s), _q(a), n, m1, m2, precision))


def zeta(s, a=1, precision=DEFAULT_PRECISION):
    """zeta(s, a) as a decimal string."""
    return json.loads(_core.zeta(_q(s), _q(a), precision))


def s2_apery(n, m, precision=DEFAULT_PRECISION):
    return json.loads(_core.s2_apery(n, m, precision))


def s3_apery(n, m, precision=DEFAULT_PRECISION):
    return json.loads(_core.s3_apery(n, m, precision))


def s3_apery_crosscheck(mmax, precision=256):
    return json.loads(_core.s3_apery_crosscheck(mmax, precision))


def weights_verify(s, a=1, precision=DEFAULT_PRECISION):
    return json.loads(_core.weights_verify(_q(s), _q(a), precision))


def rates_scan(case, lo=0.5, hi=2.0, step=0.01, precision=DEFAULT_PRECISION):
    return json.loads(_core.rates_scan(case, lo, hi, step, precision))
