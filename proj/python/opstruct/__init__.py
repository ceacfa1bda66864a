"""Exact rational checks for linearly related orthogonal polynomial sequences."""

import json
from fractions import Fraction

from ._opstruct import Error, all_checks, canonical
from . import _opstruct

__all__ = ["Error", "all_checks", "canonical", "family", "hankel_dets", "recurrence", "check", "check_file"]


def _frac(values):
    return [Fraction(v) for v in values]


def _text(values):
    return [canonical(str(Fraction(v))) if not isinstance(v, str) else v for v in values]


def family(name, K=24, alpha=0, beta=0):
    """Exact moments, recurrence coefficients and monic polynomials of a classical family."""
    d = _opstruct.family(name, K, str(Fraction(alpha)), str(Fraction(beta)))
    return {
        "family": d["family"],
        "moments": _frac(d["moments"]),
        "beta": _frac(d["beta"]),
        "gamma": _frac(d["gamma"]),
        "polys": [_frac(p) for p in d["polys"]],
    }


def hankel_dets(moments, n):
    """Hankel determinants Delta_0..Delta_n of a moment sequence."""
    return _frac(_opstruct.hankel_dets(_text(moments), n))


def recurrence(moments, n_max):
    """(betas, gammas) of the monic orthogonal sequence of a moment sequence."""
    betas, gammas = _opstruct.recurrence(_text(moments), n_max)
    return _frac(betas), _frac(gammas)


def check(instance, checks=None, n_max=None, horizon=None):
    """Run the pipeline on an instance (dict or JSON text); returns the report as a dict."""
    doc = instance if isinstance(instance, str) else json.dumps(instance)
    return json.loads(_opstruct.run(doc, checks, n_max, horizon))


def check_file(path, **kwargs):
    with open(path) as f:
        return check(f.read(), **kwargs)
