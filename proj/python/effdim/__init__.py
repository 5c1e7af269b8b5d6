"""Effective dimensions of path semigroups of quivers."""

import json

from ._core import (
    Arrow,
    GuardError,
    ParseError,
    Quiver,
    an_closed_form,
    an_segments,
    effdim_path,
    effdim_truncated,
    exhaustive_lower_bound_f2,
    is_commutative_at,
    load_quiver,
    parse_quiver,
    stabilization,
)
from . import _core

__all__ = [
    "Arrow",
    "GuardError",
    "ParseError",
    "Quiver",
    "analyze",
    "an_closed_form",
    "an_segments",
    "construct",
    "effdim_path",
    "effdim_truncated",
    "exhaustive_lower_bound_f2",
    "is_commutative_at",
    "load_quiver",
    "parse_quiver",
    "stabilization",
    "verify",
    "verify_document",
]


def analyze(quiver, N=None):
    """Per-vertex lengths, K(x), d_x and totals, as a dict."""
    return json.loads(_core._analysis_json(quiver, N))


def construct(quiver, N=None, labels="primes"):
    """Representation document: symbolic when N is None, graded otherwise."""
    return json.loads(_core._construct_json(quiver, N, labels))


def verify(quiver, N=None, max_len=None, threads=1, seed=None):
    """Build and check a representation; returns the report dict."""
    kwargs = {} if seed is None else {"seed": seed}
    return json.loads(_core._verify_json(quiver, N, max_len, threads, **kwargs))


def verify_document(quiver, document):
    """Check a representation document (a dict as produced by construct)."""
    return json.loads(_core._verify_rep_json(quiver, json.dumps(document)))
