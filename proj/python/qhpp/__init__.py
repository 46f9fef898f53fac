"""Planar quasi-homogeneous polynomial systems: classification, homogenization and phase portraits."""

import json

from . import _qhpp
from ._qhpp import BadWindowError, ParseError, PreconditionError

__all__ = [
    "BadWindowError",
    "ParseError",
    "PreconditionError",
    "analyze",
    "catalog",
    "census",
    "parse",
    "streamlines_csv",
]


def parse(text):
    """Return the canonical (P, Q) strings of a system given in the file grammar."""
    return _qhpp.parse(text)


def analyze(text, oracle=True, tol=1e-10, radius=0.05):
    """Run the full pipeline. Returns (status, report) with the report as a dict."""
    status, report = _qhpp.analyze(text, oracle, tol, radius)
    return status, json.loads(report)


def catalog(degree=5):
    return json.loads(_qhpp.catalog(degree))


def census(greater=True, less=True, equal=True):
    return json.loads(_qhpp.census(greater, less, equal))


def streamlines_csv(text, window="-1:1,-1:1", n=100, tol=1e-8, tmax=20.0):
    return _qhpp.streamlines_csv(text, window, n, tol, tmax)
