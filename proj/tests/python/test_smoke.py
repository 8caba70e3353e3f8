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

from fractions import Fraction

import pytest

import otplab


def test_pr_and_isotropic_tables():
    pr = otplab.pr_box()
    assert otplab.entry(pr, 0, 0, 0, 0) == Fraction(1, 2)
    assert otplab.entry(pr, 0, 0, 1, 1) == 0
    iso = otplab.isotropic(Fraction(3, 4))
    assert otplab.entry(iso, 0, 0, 0, 0) == Fraction(3, 8)
    assert otplab.entry(iso, 0, 1, 0, 0) == Fraction(1, 8)
    assert otplab.isotropic(1) == pr
    assert otplab.isotropic("1/2") == otplab.isotropic(0.5)


def test_evaluate_specs():
    spec = {"m": 2, "n": 2, "g": [0, 0], "f": [[0, 0], [0, 1]], "key": "1/2"}
    assert otplab.evaluate(spec) == otplab.pr_box()
    notp = otplab.notp_model_from_isotropic("9/10")
    assert otplab.evaluate(notp) == otplab.isotropic("9/10")
    biased = dict(spec, key="3/5")
    assert otplab.otp_ns_verdict(biased) == {"f_depends_on_x": True, "ns": False, "key_uniform": False}
    assert not otplab.ns_check(otplab.evaluate(biased))["alice_to_bob_ns"]


def test_chsh_and_locality():
    assert otplab.chsh(otplab.pr_box()) == 4
    assert otplab.chsh(otplab.anti_pr_box()) == -4
    fam = otplab.chsh_family(otplab.isotropic("3/4"))
    assert len(fam) == 8 and fam["chsh-neg-11"] == 2
    verdict = otplab.local_2222(otplab.local_deterministic([0, 1], [1, 1]))
    assert verdict["is_local"] and verdict["max_chsh"] == "2/1"


def test_vertex_analysis():
    v = otplab.analyze_vertex(otplab.pr_box())
    assert v["accepted"] and v["structure"]["h"] == [[0, 0], [0, 1]]
    assert otplab.evaluate(v["model"]) == otplab.pr_box()
    assert otplab.analyze_vertex(otplab.isotropic("3/4"))["reason"] == "entries not in {0,1/2}"


def test_protocols():
    report = otplab.vandam_exhaustive("IP2", seed=1)
    assert report["runs"] == report["successes"] == 16
    assert report["max_bits_alice_to_bob"] == 1 and report["pool_size"] == 4
    events = otplab.vandam_run("IP2", "11", "10", seed=1)
    assert events[0]["event"] == "run" and events[-1]["result"] == 1
    assert otplab.function_hex("IP2") == "2 2\n0536\n"
    assert otplab.xor_homomorphism_check("10", "01", "11", "00")
    spec = {"m": 2, "n": 2, "g": [0, 0], "f": [[0, 0], [0, 1]], "key": "1/2"}
    sim = otplab.simulate_otp_via_pr(spec, 100, seed=2)
    assert sim["exact"] == otplab.pr_box() and sim["trials_per_cell"] == 100


def test_sampling_is_seeded():
    pr = otplab.pr_box()
    a = otplab.sample_outcomes(pr, 1, 1, 50, seed=9)
    assert a == otplab.sample_outcomes(pr, 1, 1, 50, seed=9)
    assert all(x ^ y == 1 for x, y in a)


def test_information():
    assert otplab.binary_entropy(0.5) == 1.0
    assert abs(otplab.ic_threshold_notp() - 0.889972135561640) < 1e-12
    r = otplab.rac("noisy-ontic", "1/2")
    assert r["report"]["I_n"] == 1.0 and r["report"]["ic_satisfied"]
    r = otplab.rac("notp", Fraction(9, 10))
    assert abs(r["report"]["I_n"] - 1.062008812821438) < 1e-12
    mi, violates = otplab.key_mutual_information("9/10")
    assert abs(mi - 0.531004406410719) < 1e-12 and violates


def test_errors_map_to_python_exceptions():
    with pytest.raises(otplab.DomainError):
        otplab.isotropic("5/4")
    with pytest.raises(otplab.ParseError):
        otplab.isotropic("abc")
    with pytest.raises(otplab.ResourceError):
        otplab.vandam_exhaustive("IP11")
    with pytest.raises(otplab.PreconditionError):
        otplab.local_2222(otplab.evaluate(
            {"m": 2, "n": 2, "g": [0, 0], "f": [[0, 0], [0, 1]], "key": "1/3"}))
    assert issubclass(otplab.ConstructionError, otplab.OtplabError)
