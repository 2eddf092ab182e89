"""Exact differential calculi on finite quantum principal bundles.

Thin wrappers over the C++ core; each returns the decoded JSON document.
"""

import json

from . import _core

SCHEMA = _core.SCHEMA


def _call(fn, *args, **kwargs):
    return json.loads(fn(*args, **kwargs))


def builtins():
    return _call(_core.builtins)


def hopf_check(name):
    return _call(_core.hopf_check, name)


def hopf_dump(name):
    return _call(_core.hopf_dump, name)


def h1(cover):
    """Čech H¹ of a builtin cover name, a JSON string, or a dict."""
    if isinstance(cover, dict):
        cover = json.dumps(cover)
    return int(_call(_core.h1, cover)["reports"][0]["facts"]["H1"])


def moduli(cover, order):
    if isinstance(cover, dict):
        cover = json.dumps(cover)
    return _call(_core.moduli, cover, order)


def gamma_dim(pair):
    return int(_call(_core.gamma_dim, pair)["reports"][0]["facts"]["dimension"])


def bicross_example(gamma1, gamma2):
    return _call(_core.bicross_example, str(gamma1), str(gamma2))


def bundle_suite(seed=20240601, count=10):
    return _call(_core.bundle_suite, seed, count)


def qmonopole_dims(family, degree=6, slack=2):
    return _call(_core.qmonopole_dims, family, degree, slack)


__all__ = [
    "SCHEMA",
    "builtins",
    "hopf_check",
    "hopf_dump",
    "h1",
    "moduli",
    "gamma_dim",
    "bicross_example",
    "bundle_suite",
    "qmonopole_dims",
]
