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

"""Maximal steered coherence of bipartite quantum states."""

from ._steercoh import (
    State,
    SteercohError,
    apply_channel,
    canonical,
    channel_names,
    check_names,
    coherence_bloch,
    coherence_l1,
    family,
    family_names,
    msc,
    msc_oracle,
    qse,
    run_check,
    sweep,
    sweep_csv,
)

__all__ = [
    "State",
    "SteercohError",
    "apply_channel",
    "canonical",
    "channel_names",
    "check_names",
    "coherence_bloch",
    "coherence_l1",
    "family",
    "family_names",
    "msc",
    "msc_oracle",
    "qse",
    "run_check",
    "sweep",
    "sweep_csv",
]
