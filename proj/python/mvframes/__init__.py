"""Products of Lukasiewicz chains: classification, compactness with witnesses,
nuclei, ring ideal lattices, and lattice-ordered groups with strong unit.

Every helper takes and returns plain dicts/lists mirroring the JSON formats
of the command-line tool; the heavy lifting happens in the C++ extension.
"""

import json as _json

from . import _core
from ._core import MvfError

__all__ = [
    "MvfError",
    "classify",
    "is_compact",
    "classify_nucleus",
    "check_hom",
    "apply_hom",
    "ring_radicals",
    "ring_mv_check",
    "gamma",
    "phi",
    "is_lu_compact",
    "oplus",
    "join",
    "meet",
    "neg",
    "pseudocomplement",
    "leq",
]


def _out(text):
    return _json.loads(text)


def classify(spec):
    """Classification flags (algebraic, coherent, regular, fip, powerset) of a signature."""
    return _out(_core.classify_json(_json.dumps(spec)))


def is_compact(spec, element, witness_prefix=64):
    """Compactness verdict for an element; negative verdicts carry a checked witness chain."""
    return _out(_core.compact_json(_json.dumps(spec), _json.dumps(element), witness_prefix))


def classify_nucleus(spec, kind, seed=0):
    """Nucleus flags for a built-in kind such as 'ceiling', 'halving' or 'threshold:1/2'."""
    return _out(_core.nucleus_json(_json.dumps(spec), kind, seed))


def check_hom(hom):
    """Coherence, completeness and maximal-compact preservation of a product homomorphism."""
    return _out(_core.hom_check_json(_json.dumps(hom)))


def apply_hom(hom, element):
    """Image of an element under a product homomorphism."""
    return _out(_core.hom_apply_json(_json.dumps(hom), _json.dumps(element)))


def ring_radicals(ring):
    """Radical of every ideal of a product of Z/p^k, with the chain-product translation."""
    return _out(_core.ring_radicals_json(_json.dumps(ring)))


def ring_mv_check(ring, seed=0):
    """Agreement of annihilator/sum/radical with the chain-product MV-operations."""
    return _out(_core.ring_mv_check_json(_json.dumps(ring), seed))


def gamma(group):
    """Unit interval of a group with strong unit, as a chain-product signature."""
    return _out(_core.gamma_json(_json.dumps(group)))


def phi(spec):
    """Integer group with strong unit whose unit interval is the given chain product."""
    return _out(_core.phi_json(_json.dumps(spec)))


def is_lu_compact(group, element, witness_prefix=64):
    """Group-side compactness: |g| capped at the unit must be compact in the interval."""
    return _out(_core.lu_compact_json(_json.dumps(group), _json.dumps(element), witness_prefix))


def oplus(spec, x, y):
    """Truncated sum of two elements."""
    return _out(_core.oplus_json(_json.dumps(spec), _json.dumps(x), _json.dumps(y)))


def join(spec, x, y):
    """Lattice join of two elements."""
    return _out(_core.join_json(_json.dumps(spec), _json.dumps(x), _json.dumps(y)))


def meet(spec, x, y):
    """Lattice meet of two elements."""
    return _out(_core.meet_json(_json.dumps(spec), _json.dumps(x), _json.dumps(y)))


def neg(spec, x):
    """Involution of an element."""
    return _out(_core.neg_json(_json.dumps(spec), _json.dumps(x)))


def pseudocomplement(spec, x):
    """Largest element whose meet with x is 0."""
    return _out(_core.pseudocomplement_json(_json.dumps(spec), _json.dumps(x)))


def leq(spec, x, y):
    """Order comparison of two elements."""
    return _core.leq(_json.dumps(spec), _json.dumps(x), _json.dumps(y))
