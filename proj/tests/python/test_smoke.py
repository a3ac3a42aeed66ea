# Copyright 2026 The trispec Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import cmath
import json
import math
import os
import subprocess

import pytest

import trispec


def test_window_coordinates():
    seq = trispec.SymbolSequence("explicit:[0,1,1,1,0|1,0,0,0,1,0]")
    assert [int(z.real) for z in seq.window(-2, 1)] == [1, 0, 1, 0]


def test_run_witness_hits_target():
    seq = trispec.SymbolSequence("pseudoergodic:{0,1}")
    lam = cmath.rect(0.5, math.pi / 4)
    w = trispec.run_witness(seq, lam, 0)
    assert w.kind == "zero_run"
    assert abs(trispec.rayleigh(seq, w.vector) - lam) <= 1e-12
    assert abs(w.vector.norm() - 1.0) <= 1e-13


def test_witness_error_on_sturmian():
    seq = trispec.SymbolSequence("sturmian:0.6180339887498949,0")
    with pytest.raises(trispec.WitnessError):
        trispec.run_witness(seq, 0.9, 0)


def test_numerical_range_inside_gamma():
    seq = trispec.SymbolSequence("pseudoergodic:{0,1}")
    poly = trispec.range_polygon(trispec.truncate(seq, 32), 90)
    assert all(trispec.gamma_contains(z, 1e-9) for z in poly.hull)


def test_laurent_examples():
    circle = trispec.periodic_spectrum([0], 8)
    assert all(abs(abs(z) - 1.0) <= 1e-15 for z in circle)
    diamond = trispec.constants_hull([-1, 1], 64)
    assert sorted((round(z.real), round(z.imag)) for z in diamond) == [(-2, 0), (0, -2), (0, 2), (2, 0)]


def test_cli_entry_point():
    code, out, err = trispec.cli(["seq", "--seq", "explicit:[0,1,1,1,0|1,0,0,0,1,0]", "--window", "-2,1"])
    assert (code, out, err) == (0, "1,0,1,0\n", "")
    code, out, _ = trispec.cli(["spectrum", "--kind", "periodic", "--word", "01", "--m", "4"])
    assert code == 0
    assert json.loads(out)["m"] == 4


@pytest.mark.skipif("TRISPEC_CLI" not in os.environ, reason="CLI binary path not provided")
def test_cli_binary_exit_codes():
    exe = os.environ["TRISPEC_CLI"]
    ok = subprocess.run([exe, "hulls", "--check"], capture_output=True, text=True)
    assert ok.returncode == 0
    bad = subprocess.run([exe, "range", "--seq", "constant:0", "--unknown"], capture_output=True, text=True)
    assert bad.returncode == 1
