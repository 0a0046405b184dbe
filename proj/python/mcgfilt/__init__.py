"""Exact integral computations in the Johnson and Lagrangian filtrations.

Thin wrappers over the C++ core. Endomorphisms are passed as dicts (or JSON
strings) shaped like {"g": 2, "images": {"x1": "x1", ...}}; structured
results come back as dicts decoded from the core's JSON.
"""

import json as _json

from . import _core

__all__ = [
    "witt",
    "words",
    "dk_rank",
    "dk_basis",
    "eta_image",
    "johnson",
    "lagrangian",
    "membership",
    "trace",
    "sp_matrix",
    "heegaard",
    "catalog",
    "catalog_endo",
    "eta",
    "decompose",
    "cli",
]


def _endo(e):
    return e if isinstance(e, str) else _json.dumps(e)


def witt(n, k):
    """Rank of the degree-k part of the free Lie ring on n symbols."""
    return _core.witt(n, k)


def words(n, k):
    """Lyndon basis words of degree k, as generator-name strings."""
    return _core.lyndon_words(n, k)


def dk_rank(g, k):
    """Rank of the derivation lattice D_k(H_g)."""
    return _core.dk_rank(g, k)


def dk_basis(g, k):
    """Basis of D_k(H_g), one coefficient dict per element."""
    return _json.loads(_core.dk_basis_json(g, k))


def eta_image(g, k):
    """Elementary divisors of D_k(H_g) over the tree image."""
    return [int(d) for d in _core.eta_image(g, k)]


def johnson(endo, k):
    """Johnson homomorphism of the endomorphism at level k."""
    return _json.loads(_core.johnson(_endo(endo), k))


def lagrangian(endo, k):
    """Lagrangian homomorphism of the endomorphism at level k."""
    return _json.loads(_core.lagrangian(_endo(endo), k))


def membership(endo, k, filtration="J"):
    """Membership report for the Johnson ("J") or Lagrangian ("L") filtration."""
    return _json.loads(_core.membership(_endo(endo), k, filtration))


def trace(endo, k):
    """Morita trace of the level-k Johnson value."""
    return _json.loads(_core.trace(_endo(endo), k))


def sp_matrix(endo):
    """Action on first homology, columns in the order x1, y1, x2, y2, ..."""
    return _json.loads(_core.sp_matrix(_endo(endo)))


def heegaard(endo):
    """Relators, divisors, and the homology-sphere verdict of the gluing."""
    return _json.loads(_core.heegaard(_endo(endo)))


def catalog(g):
    """Names of the built-in automorphisms at genus g."""
    return _core.catalog_names(g)


def catalog_endo(g, name):
    """A built-in automorphism as an endomorphism dict."""
    return _json.loads(_core.catalog_endo(g, name))


def eta(tree, g):
    """The derivation attached to a decorated tree like "((y1,y2),(y1,y2))"."""
    return _json.loads(_core.eta_tree(tree, g))


def decompose(tree, g):
    """Tripod decomposition of a Lagrangian tree."""
    return _json.loads(_core.decompose(tree, g))


def cli(args):
    """Run a CLI command in-process; returns (exit_code, output_text)."""
    return _core.cli(list(args))
