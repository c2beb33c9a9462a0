"""Finite groups in which every non-cyclic subgroup is self-centralizing.

Thin wrapper over the C++ engine. Reports come back as dicts with the same
fields, in the same order, as the command-line tool prints.
"""

import json

from . import _core
from ._core import Group, XGroupError

__all__ = [
    "Group",
    "XGroupError",
    "families",
    "construct",
    "load",
    "document",
    "provenance",
    "fingerprint",
    "check",
    "classify",
    "explain",
    "tower",
    "corpus",
]


def families():
    return list(_core.families())


def construct(family, **params):
    """Build a group, e.g. construct("metacyclic", m=7, n=3, u=2)."""
    return _core.construct(family, json.dumps(params))


def load(doc):
    """Group from a description document (dict or JSON text)."""
    return _core.load(doc if isinstance(doc, str) else json.dumps(doc))


def document(group):
    return json.loads(group.document_json())


def provenance(group):
    text = group.provenance_json
    return json.loads(text) if text else None


def fingerprint(group):
    return json.loads(group.fingerprint_json())


def check(group, method="brute", cap=2500):
    return json.loads(_core.check(group, method, cap))


def classify(group, cap=2500):
    return json.loads(_core.classify(group, cap)[0])


def explain(group, cap=2500):
    return _core.classify(group, cap)[1]


def tower(kind, p, d=1, y_order=2, depth=3):
    return json.loads(_core.tower(kind, p, d, y_order, depth))


def corpus(suite="standard", workers=1):
    return json.loads(_core.corpus(suite, workers))
