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

import json
import os
import shutil
import subprocess
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


def _cli_path():
    path = os.environ.get("OTPLAB_CLI") or shutil.which("otplab")
    if not path:
        pytest.skip("otplab executable not found; set OTPLAB_CLI")
    return path


@pytest.fixture(scope="session")
def cli():
    path = _cli_path()

    def run(*args, seed=None, env=None):
        cmd = [path] if "--format" in args else [path, "--format", "json"]
        if seed is not None:
            cmd += ["--seed", str(seed)]
        full_env = dict(os.environ)
        full_env.pop("OTPLAB_SEED", None)
        full_env.update(env or {})
        return subprocess.run(cmd + [str(a) for a in args], capture_output=True, text=True,
                              env=full_env, check=False)

    return run


@pytest.fixture(scope="session")
def schema():
    from jsonschema import Draft202012Validator

    cache = {}

    def load(name):
        if name not in cache:
            with open(ROOT / "schemas" / f"{name}.schema.json") as f:
                s = json.load(f)
            Draft202012Validator.check_schema(s)
            cache[name] = Draft202012Validator(s)
        return cache[name]

    return load
