"""Distance-regular Cayley graphs on finite abelian groups.

Groups and connection sets use the CLI spellings: ``check("Z6", "1,5,3")``,
``classify("Z6xZ2", "(1,0),(5,0),(2,1),(4,1),(0,1)")``. Graphs are
``(n, edges)`` pairs with ``u < v`` in every edge.
"""

import json

from . import _drgcay
from ._drgcay import DisconnectedGraph, ResourceCap, enumerate_groups, family_names

__all__ = [
    "DisconnectedGraph",
    "ResourceCap",
    "are_isomorphic",
    "canonical_certificate",
    "cayley_spec",
    "check",
    "classify",
    "construct",
    "enumerate_groups",
    "family_names",
    "intersection_array",
    "lemmas",
    "survey",
]


def check(group, connection_set):
    """Validation and distance-regularity verdict for Cay(group; set)."""
    return json.loads(_drgcay.check(group, connection_set))


def classify(group, connection_set, node_budget=10_000_000):
    """Classification record: array or witness, family label, certificate."""
    return json.loads(_drgcay.classify(group, connection_set, node_budget))


def lemmas(group, connection_set):
    return json.loads(_drgcay.lemmas(group, connection_set))


def construct(family, params=""):
    """Family graph as (n, edges); e.g. construct("hamming", "3,2")."""
    n, edges = _drgcay.construct(family, params)
    return n, [tuple(e) for e in edges]


def cayley_spec(family, params=""):
    return json.loads(_drgcay.cayley_spec(family, params))


def intersection_array(n, edges):
    return json.loads(_drgcay.intersection_array(n, list(edges)))


def are_isomorphic(g1, g2):
    """(True, mapping) or (False, None); mapping[v] is the image of v."""
    return _drgcay.are_isomorphic(g1[0], list(g1[1]), g2[0], list(g2[1]))


def canonical_certificate(n, edges):
    return _drgcay.canonical_certificate(n, list(edges))


def survey(max_order, min_order=2, min_valency=1, workers=1, dedup="none", lemmas=False):
    """Run the survey; returns (summary dict, list of per-instance records)."""
    summary, lines = _drgcay.survey(max_order, min_order, min_valency, workers, dedup, lemmas)
    return json.loads(summary), [json.loads(line) for line in lines.splitlines()]
