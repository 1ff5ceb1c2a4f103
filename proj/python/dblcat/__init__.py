"""Finite strict double categories: validation, companions, conjunctions,
mates and double pseudofunctors."""

import json

from ._dblcat import (
    DblcatError,
    DoubleCategory,
    canonical,
    fixture_names,
    psfunctor_fixtures,
    quin,
    run_cli,
)
from ._dblcat import check_psfunctor as _check_psfunctor
from ._dblcat import fixture as _fixture

__all__ = [
    "DblcatError",
    "DoubleCategory",
    "canonical",
    "check_psfunctor",
    "companions",
    "conjoints",
    "fixture",
    "fixture_names",
    "psfunctor_fixtures",
    "quin",
    "run_cli",
]


def fixture(name):
    """A named fixture as a decoded document."""
    return json.loads(_fixture(name))


def companions(d, arrow):
    return [json.loads(p) for p in d.companions(arrow)]


def conjoints(d, arrow):
    return [json.loads(c) for c in d.conjoints(arrow)]


def check_psfunctor(source):
    """Violations of a psfunctor fixture name, document text or dict."""
    if isinstance(source, dict):
        source = json.dumps(source)
    return _check_psfunctor(source)
