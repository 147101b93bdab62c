"""Exact Chow groups of degree-0 zero-cycles on Chatelet surfaces over p-adic fields.

Thin wrappers over the compiled core: every function returns plain dicts/lists
decoded from the core's canonical JSON, so results are stable and easy to
serialize.  Field descriptors: "Qp:5", "Unram:5^2", "Eis:5:[-5,0,1]"; elements
are strings like "5", "-1/3", "[1,2/5]".
"""

import json as _json

from chatelet._core import (  # noqa: F401
    ChateletError,
    hilbert_symbol,
    solve_norm_equation,
)
from chatelet import _core


def classify(field, d, e1, e2):
    """Closed-form classification of A_0(X)_0 for y^2 - d z^2 = x(x-e1)(x-e2)."""
    return _json.loads(_core.classify_json(field, d, e1, e2))


def theta(field, d, e1, e2, x):
    """Theta at one x coordinate of the given presentation (x='inf' allowed)."""
    return _json.loads(_core.theta_json(field, d, e1, e2, x))


def oracle(field, d, e1, e2, depth=None):
    """Brute-force theta image; cross-checks the closed form (see 'match')."""
    return _json.loads(_core.oracle_json(field, d, e1, e2, depth))


def lemmas(qmax=13):
    """Residue-field lemma sweep over all odd prime powers q <= qmax."""
    return _json.loads(_core.lemmas_json(qmax))


def restrict(field, d, e1, e2, ext):
    """Behavior of A_0(X)_0 under base change to the given extension."""
    return _json.loads(_core.restrict_json(field, d, e1, e2, ext))


def delpezzo(field, d, a, c):
    """Degree-4 del Pezzo parameters (a, c) -> surface roots, then classify."""
    return _json.loads(_core.delpezzo_json(field, d, a, c))


def verify(matrix=None, qmax=49, depth=None):
    """Full verification suite; `matrix` is a list of instance dicts or None."""
    text = _json.dumps(matrix) if matrix is not None else None
    return _json.loads(_core.verify_json(text, qmax, depth))


__all__ = [
    "ChateletError",
    "classify",
    "delpezzo",
    "hilbert_symbol",
    "lemmas",
    "oracle",
    "restrict",
    "solve_norm_equation",
    "theta",
    "verify",
]
