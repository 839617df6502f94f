"""Virtual link diagrams given by Gauss codes such as ``"O1+U2+O3+U1+O2+U3+"``."""

import json

from . import _vlink
from ._vlink import ParseError, SurfaceError, ValidationError, component_count, crossing_count, f_polynomial, genus, normal_key, normalize

__all__ = [
    "ParseError",
    "SurfaceError",
    "ValidationError",
    "canonical_minimum",
    "check_certificate",
    "complement",
    "component_count",
    "crossing_count",
    "decide",
    "f_polynomial",
    "fingerprint",
    "genus",
    "normal_key",
    "normalize",
]


def fingerprint(code, threads=1):
    """Invariant report: components, f_poly (exponent strings), odd_writhe, linking, colorings."""
    return json.loads(_vlink.fingerprint_json(code, threads))


def decide(a, b, max_crossings=None, max_expansions=200000, threads=1):
    """Verdict dict with keys verdict, certificate, budget, explored (and note when unknown)."""
    return json.loads(_vlink.decide_json(a, b, max_crossings, max_expansions, threads))


def canonical_minimum(code, max_crossings=None, max_expansions=200000, threads=1):
    return json.loads(_vlink.canonical_minimum_json(code, max_crossings, max_expansions, threads))


def complement(code):
    """Cell complex of the link complement as an exported document."""
    return json.loads(_vlink.complement_json(code))


def check_certificate(a, b, certificate):
    """Replays an equivalence certificate taken from ``decide``."""
    return _vlink.check_certificate_json(a, b, json.dumps(certificate))
