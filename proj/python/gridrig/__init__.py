"""Exact rigidity analysis of reflection-symmetric frameworks in quadrilateral norms.

Every function takes and returns plain JSON-compatible Python values using the
same document formats as the ``gridrig`` command-line tool. Rationals are
"num/den" strings.
"""

import json

from . import _gridrig
from ._gridrig import DomainError, IllPositioned, SchemaError

__all__ = [
    "DomainError",
    "IllPositioned",
    "SchemaError",
    "analyze",
    "construct",
    "crosscheck",
    "realize",
    "sparsity",
]


def _text(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def _norm(norm):
    return norm if norm in ("linf", "l1") else _text(norm)


def analyze(framework, flexes=False):
    return json.loads(_gridrig.analyze(_text(framework), flexes))


def sparsity(quotient, variant="221", loopless=False):
    return json.loads(_gridrig.sparsity(_text(quotient), str(variant), loopless))


def construct(quotient, mode="sym"):
    return json.loads(_gridrig.construct(_text(quotient), mode))


def realize(doc, mode="sym", norm="linf", seed=0):
    return json.loads(_gridrig.realize(_text(doc), mode, _norm(norm), seed))


def crosscheck(cases, max_orbits=5, seed=0, norm="linf"):
    return json.loads(_gridrig.crosscheck(cases, max_orbits, seed, _norm(norm)))
