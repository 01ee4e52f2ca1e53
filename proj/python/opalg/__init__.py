"""Structure theory of finite-dimensional algebras over linear operads.

Presentations and reports are plain dicts in the same JSON format the
``opalg`` command-line tool reads and writes.
"""

import json

from . import _opalg
from ._opalg import FieldGuardError, TheoremViolation, ValidationError

__all__ = [
    "FieldGuardError",
    "TheoremViolation",
    "ValidationError",
    "analyze",
    "canonical",
    "check_ideal",
    "classify",
    "decompose",
    "preset",
    "preset_names",
    "radical",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def preset_names():
    """Names accepted by :func:`preset`."""
    return list(_opalg.preset_names())


def preset(name, field="Q"):
    """Presentation of a named preset over ``"Q"`` or ``"F<p>"``."""
    return json.loads(_opalg.preset(name, field))


def analyze(doc, threads=1, seed=0):
    """Operator-algebra dimensions, radical, simplicity and, over small finite fields, the ideal lattice."""
    return json.loads(_opalg.analyze(_text(doc), threads, seed))


def radical(doc):
    """Rad(A), the semisimple quotient and the projection onto it."""
    return json.loads(_opalg.radical(_text(doc)))


def decompose(doc):
    """Minimal ideals of a semisimple algebra with their projections."""
    return json.loads(_opalg.decompose(_text(doc)))


def classify(doc):
    """Recover (H, phi, B) and the isomorphism psi for a simple equivariant algebra."""
    return json.loads(_opalg.classify(_text(doc)))


def check_ideal(doc, basis):
    """Run both ideal tests on the span of ``basis`` (a list of vectors)."""
    return json.loads(_opalg.check_ideal(_text(doc), json.dumps(basis)))


def canonical(doc):
    """Canonical serialization of a presentation."""
    return _opalg.canonical(_text(doc))
