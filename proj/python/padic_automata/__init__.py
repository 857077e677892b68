"""p-adic automata: transducers, van der Put series, kernels and finiteness checks.

A function is given either as presentation text ("poly p=2 [1, 3]",
"affine p=3 a=1/2 b=5") or as a dict holding a transducer or a van der
Put series document. Results come back as plain dicts.
"""

import json

from . import _core
from ._core import PadicError

__all__ = [
    "PadicError",
    "evaluate",
    "lipschitz_check",
    "vdp",
    "synth_minimal",
    "synth_naive",
    "minimize",
    "kernel",
    "dfao_eval",
    "finiteness",
    "cross_check",
    "christol_find",
    "to_dot",
    "acceptance_report",
]


def _spec(f):
    if isinstance(f, str):
        return f, False
    return json.dumps(f), True


def evaluate(f, x, n):
    """f(x) mod p^n for 0 <= x < p^n."""
    return int(_core.eval(*_spec(f), str(x), n))


def lipschitz_check(f, depth, threads=1):
    return json.loads(_core.lipschitz_check(*_spec(f), depth, threads))


def vdp(f, depth, threads=1):
    return json.loads(_core.vdp(*_spec(f), depth, threads))


def synth_minimal(f, max_states=1024, threads=1):
    return json.loads(_core.synth_minimal(*_spec(f), max_states, threads))


def synth_naive(f, depth, threads=1):
    return json.loads(_core.synth_naive(*_spec(f), depth, threads))


def minimize(machine):
    return json.loads(_core.minimize(json.dumps(machine)))


def kernel(dfao, max_elems=1024, threads=1):
    return json.loads(_core.kernel(json.dumps(dfao), max_elems, threads))


def dfao_eval(dfao, n):
    return _core.dfao_eval(json.dumps(dfao), str(n))


def finiteness(f, depth=10, value_bound=64, kernel_bound=1024, threads=1):
    return json.loads(_core.finiteness(*_spec(f), depth, value_bound, kernel_bound, threads))


def cross_check(f, depth=10, max_states=1024, threads=1):
    return json.loads(_core.cross_check(*_spec(f), depth, max_states, threads))


def christol_find(dfao, tau=None, degree=None, max_d=2, max_h=3, margin=32, threads=1):
    return json.loads(_core.christol_find(json.dumps(dfao), tau, degree, max_d, max_h, margin, threads))


def to_dot(document):
    return _core.to_dot(json.dumps(document))


def acceptance_report(threads=1):
    return json.loads(_core.acceptance_report(threads))
