# Copyright 2026 The Authors.
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

"""Smoke tests for the Python bindings."""

import json

import pytest

import rhodes


def test_expand_and_round_trip():
  phi = rhodes.expand("cyclic:6", "K4")
  assert phi.num_edges == 36
  assert phi.group_order == 6
  again = rhodes.GainGraph.from_json(phi.to_json())
  assert again == phi


def test_counts_and_isomorphism():
  phi = rhodes.expand("Z2", "K3")
  assert len(rhodes.rhodes_pp(phi)) == 24
  assert len(rhodes.rhodes_graphic(phi)) == 24
  report = rhodes.verify_isomorphism(phi)
  assert report["ok"]
  assert report["pp_count"] == 24


def test_b_map_matches_enumeration():
  phi = rhodes.expand("Z2", "K3")
  images = [rhodes.b_map(phi, p) for p in rhodes.rhodes_pp(phi)]
  graphic = rhodes.rhodes_graphic(phi)
  key = lambda s: (tuple(s["vertices"]), tuple(s["edges"]))
  assert sorted(map(key, images)) == sorted(map(key, graphic))


def test_lattices():
  phi = rhodes.expand("Z2", "K3")
  assert len(rhodes.lattice(phi, "classic")["elements"]) == 25
  probe = rhodes.probe_lattice(phi, "frame")
  assert probe["is_lattice"] and not probe["geometric"]
  assert probe["witnesses"]


def test_rank_closure_meet():
  phi = rhodes.expand("Z2", "K3")
  assert rhodes.rank(phi, "frame", [0, 1]) == 2
  assert rhodes.closure(phi, "balanced", [0, 4])["edges"] == [0, 2, 4]
  p = {"blocks": [[0, 1, 2]], "rep": {"0": 0, "1": 1, "2": 1}}
  q = {"blocks": [[0, 1, 2]], "rep": {"0": 0, "1": 0, "2": 0}}
  assert rhodes.meet(phi, p, q)["blocks"] == [[0], [1, 2]]


def test_biased_graph_and_errors():
  bad = {"vertices": [0, 1],
         "edges": [{"id": i, "tail": 0, "head": 1} for i in range(3)],
         "balanced": [[0, 1], [1, 2]]}
  with pytest.raises(ValueError, match="theta"):
    rhodes.BiasedGraph.from_json(json.dumps(bad))
  ok = dict(bad, balanced=[])
  omega = rhodes.BiasedGraph.from_json(json.dumps(ok))
  assert len(rhodes.lattice(omega, "frame")["elements"]) == 8
  with pytest.raises(ValueError):
    rhodes.expand("cyclic:0", "K3")
  with pytest.raises(RuntimeError, match="max_exhaustive_edges"):
    rhodes.lattice(rhodes.expand("Z6", "K4"), "semiclosed")


def test_forms_fixture():
  report = rhodes.check_forms("Z6.K4", "frame")
  assert report["ok"]
  assert report["unlisted_count"] == 0
