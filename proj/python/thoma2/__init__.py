"""Python interface to the 2-categorical subdivision machinery.

The heavy lifting happens in the compiled extension; this wrapper parses the
JSON payloads into plain dicts/lists.
"""

import json

import _thoma2

lemmas = _thoma2.lemmas


def _parsed(raw):
    return json.loads(raw)


def chain_poset(poset):
    """f(P): the poset of non-empty chains. `poset` is an ordinal given as a
    string like "2", or a poset dict."""
    return _parsed(_thoma2.chain_poset(_as_arg(poset)))


def horn_poset(n, k):
    return _parsed(_thoma2.horn_poset(n, k))


def collar_sizes(n, k):
    return _parsed(_thoma2.collar_sizes(n, k))


def nerve(poset, cap):
    return _parsed(_thoma2.nerve(_as_arg(poset), cap))


def sd(sset):
    return _parsed(_thoma2.sd(json.dumps(sset)))


def standard_complex(kind, n, k=-1):
    return _parsed(_thoma2.standard_complex(kind, n, k))


def n2_counts(poset, cap):
    return _parsed(_thoma2.n2_counts(_as_arg(poset), cap))


def ex(sset, cap, iterations=1):
    return _parsed(_thoma2.ex(json.dumps(sset), cap, iterations))


def homology(sset, cap):
    return _parsed(_thoma2.homology(json.dumps(sset), cap))


def quotient_counts(poset, ideal):
    return _parsed(_thoma2.quotient_counts(_as_arg(poset), list(ideal)))


def generating_set(kind, n, k=-1):
    return _parsed(_thoma2.generating_set(kind, n, k))


def verify(lemma, n=2, k=1, cap=-1, seed=1, poset=None):
    raw = _thoma2.verify(lemma, n, k, cap, seed, _as_arg(poset) if poset else "")
    return _parsed(raw)


def _as_arg(poset):
    if isinstance(poset, dict):
        return json.dumps(poset)
    return str(poset)
