# Copyright 2026 The steercoh Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import steercoh


def test_werner_msc():
    rho = steercoh.family("werner", p=0.7)["state"]
    r = steercoh.msc(rho)
    assert r["value"] == pytest.approx(0.7, abs=1e-4)
    assert r["degenerate_path"]


def test_state_from_numpy_and_json_round_trip():
    psi = np.array([1, 0, 0, 1]) / math.sqrt(2)
    rho = steercoh.State(np.outer(psi, psi.conj()), [2, 2])
    assert rho.dims == [2, 2]
    back = steercoh.State.from_json(rho.to_json())
    assert np.max(np.abs(back.matrix - rho.matrix)) <= 1e-12
    assert steercoh.msc(rho)["value"] == pytest.approx(1.0, abs=1e-4)


def test_validation_errors_carry_codes():
    with pytest.raises(steercoh.SteercohError) as info:
        steercoh.State(np.diag([1.5, -0.5]), [2])
    assert "NotPSD" in str(info.value)
    with pytest.raises(ValueError):
        steercoh.family("werner", p=1.5)


def test_qse_and_closed_forms():
    e = steercoh.qse(steercoh.family("max-obese", b=0.5)["state"])
    assert e["center"] == pytest.approx((0.0, 0.0, 0.5), abs=1e-12)
    assert e["semiaxes"] == pytest.approx((math.sqrt(0.5), math.sqrt(0.5), 0.5), abs=1e-12)
    f = steercoh.family("rho-p", p=0.5, theta=0.1 * math.pi)
    assert steercoh.msc(f["state"])["value"] == pytest.approx(f["analytic_msc"], abs=1e-6)


def test_sweep_matches_closed_form():
    t = 0.75
    rho = steercoh.family("classical-c", t=t)["state"]
    pts = steercoh.sweep(rho, "amplitude-damping", [1.0, 0.5, 0.0])
    assert [g for g, _ in pts] == [0.0, 0.5, 1.0]
    g = 0.5
    expected = 2 * t * g * math.sqrt(1 - g) / math.sqrt((1 - 2 * t) ** 2 * (1 - g) + g * g)
    assert pts[1][1] == pytest.approx(expected, abs=1e-6)
    assert steercoh.sweep_csv(pts).startswith("gamma,msc\n")


def test_coherence_and_channels():
    assert steercoh.coherence_bloch((0.5, 0, 0), (0, 0, 1)) == pytest.approx(0.5)
    plus = np.full((2, 2), 0.5)
    assert steercoh.coherence_l1(plus, np.eye(2)) == pytest.approx(1.0)
    rho = steercoh.family("werner", p=0.4)["state"]
    out = steercoh.apply_channel(rho, "depolarizing", 1.0)
    assert steercoh.msc(out)["value"] < 1e-8


def test_run_check():
    r = steercoh.run_check("spheroid-ratios")
    assert r["passed"]
    assert len(r["detail"]) == 4
