"""Chain-level toolkit for CW-supported resolutions of monomial ideals.

Thin dict-based wrappers over the compiled core: inputs may be dicts or
JSON strings, outputs are dicts. See the README for the file schemas.
"""

import json as _json

from cwres._core import (  # noqa: F401
    Error,
    GradingViolation,
    ParseError,
    SearchExhaustedError,
    UnknownVariable,
)
from cwres import _core

__all__ = [
    "parse_ideal",
    "resolve",
    "betti_oracle",
    "taylor",
    "minimize",
    "validate_cw",
    "regular_two_skeleton",
    "face_poset",
    "check_support",
    "find_basis",
    "transform",
    "Error",
    "ParseError",
    "UnknownVariable",
    "GradingViolation",
    "SearchExhaustedError",
]


def _dumps(obj):
    if isinstance(obj, str):
        return obj
    return _json.dumps(obj)


def parse_ideal(text, variables):
    return _json.loads(_core.parse_ideal(text, list(variables)))


def resolve(ideal, p):
    return _json.loads(_core.resolve(_dumps(ideal), p))


def betti_oracle(ideal, p):
    return _json.loads(_core.betti_oracle(_dumps(ideal), p))


def taylor(ideal, p):
    return _json.loads(_core.taylor(_dumps(ideal), p))


def minimize(complex_doc):
    return _json.loads(_core.minimize(_dumps(complex_doc)))


def validate_cw(cw):
    return _json.loads(_core.validate_cw(_dumps(cw)))


def regular_two_skeleton(cw):
    return _core.regular_two_skeleton(_dumps(cw))


def face_poset(cw, p):
    return _json.loads(_core.face_poset(_dumps(cw), p))


def check_support(cw, ideal, p):
    return _json.loads(_core.check_support(_dumps(cw), _dumps(ideal), p))


def find_basis(cw, p, stage2=False, bound=200000):
    return _json.loads(_core.find_basis(_dumps(cw), p, stage2, bound))


def transform(ideal, cw, p, stage2=False, bound=200000):
    return _json.loads(_core.transform(_dumps(ideal), _dumps(cw), p, stage2, bound))
