# Copyright 2026 The otplab Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact one-time-pad models of no-signaling boxes.

Tables are plain dicts in the same JSON shape the command-line tool emits:
``{"m": .., "n": .., "entries": {"a,b|x,y": "num/den"}}``. Probabilities
passed in may be ``Fraction``, ``int`` or strings such as ``"3/4"``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    ConstructionError,
    DomainError,
    OtplabError,
    ParseError,
    PreconditionError,
    ProtocolError,
    ResourceError,
    binary_entropy,
    chsh_variant_names,
    ic_threshold_notp,
    xor_homomorphism_check,
)

__all__ = [
    "ConstructionError", "DomainError", "OtplabError", "ParseError",
    "PreconditionError", "ProtocolError", "ResourceError",
    "analyze_vertex", "anti_pr_box", "binary_entropy", "chsh", "chsh_family",
    "chsh_variant_names", "entry", "evaluate", "function_hex",
    "ic_threshold_notp", "isotropic", "key_mutual_information",
    "local_2222", "local_deterministic", "noisy_ontic_box",
    "notp_model_from_isotropic", "ns_check", "otp_ns_verdict", "pr_box", "rac",
    "sample_outcomes", "simulate_otp_via_pr", "vandam_exhaustive",
    "vandam_run", "xor_homomorphism_check",
]


def _rational(value):
    if isinstance(value, str):
        return value
    return str(Fraction(value))


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def entry(table, a, b, x, y):
    """P(a, b | x, y) as a Fraction."""
    return Fraction(table["entries"][f"{a},{b}|{x},{y}"])


def pr_box():
    return json.loads(_core.pr_box())


def anti_pr_box():
    return json.loads(_core.anti_pr_box())


def isotropic(q):
    return json.loads(_core.isotropic(_rational(q)))


def noisy_ontic_box(mu):
    return json.loads(_core.noisy_ontic_box(_rational(mu)))


def local_deterministic(alice, bob):
    return json.loads(_core.local_deterministic(list(alice), list(bob)))


def evaluate(spec):
    """Exact table of an OTP spec ("key") or N-OTP spec ("keys")."""
    return json.loads(_core.evaluate(_dump(spec)))


def sample_outcomes(table, x, y, count, seed=0):
    return _core.sample_outcomes(_dump(table), x, y, count, seed)


def ns_check(table):
    return json.loads(_core.ns_check(_dump(table)))


def otp_ns_verdict(spec):
    return json.loads(_core.otp_ns_verdict(_dump(spec)))


def chsh(table, variant="chsh-neg-11"):
    return Fraction(_core.chsh_value(_dump(table), variant))


def chsh_family(table):
    names = _core.chsh_variant_names()
    values = _core.chsh_family(_dump(table))
    return {name: Fraction(v) for name, v in zip(names, values)}


def local_2222(table):
    return json.loads(_core.local_2222(_dump(table)))


def analyze_vertex(table):
    return json.loads(_core.analyze_vertex(_dump(table)))


def notp_model_from_isotropic(q):
    return json.loads(_core.notp_model_from_isotropic(_rational(q)))


def function_hex(fn, m=0, n=0):
    return _core.function_hex(fn, m, n)


def vandam_exhaustive(fn, m=0, n=0, seed=0):
    return json.loads(_core.vandam_exhaustive(fn, m, n, seed))


def vandam_run(fn, x, y, m=0, n=0, seed=0):
    """Transcript of one run as a list of event dicts."""
    text = _core.vandam_run(fn, m, n, x, y, seed)
    return [json.loads(line) for line in text.splitlines()]


def simulate_otp_via_pr(spec, trials, seed=0):
    return json.loads(_core.simulate_otp_via_pr(_dump(spec), trials, seed))


def rac(family, mu):
    """RAC result for family "notp" or "noisy-ontic"."""
    return json.loads(_core.rac(family, _rational(mu)))


def key_mutual_information(q):
    """(I(lambda1 : lambda2), violates IC) for correlated keys with parameter q."""
    return _core.key_mutual_information(_rational(q))
