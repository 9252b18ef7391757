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

"""Rhodes semilattices and lattices of gain and biased graphs.

Graphs are native objects; everything else comes back as plain Python data
(dicts and lists) using external vertex and edge ids, in the same layout as
the command-line tool's JSON files.
"""

import json

from rhodes import _rhodes
from rhodes._rhodes import BiasedGraph, GainGraph, GuardExceeded, InvalidInput, PreconditionError

__all__ = [
    "BiasedGraph", "GainGraph", "GuardExceeded", "InvalidInput", "PreconditionError",
    "b_map", "check_forms", "closure", "expand", "lattice", "meet", "probe_lattice",
    "rank", "rhodes_graphic", "rhodes_pp", "verify_isomorphism",
]


def expand(group, base):
  """Group expansion, e.g. expand("cyclic:6", "K4")."""
  return GainGraph.expand(group, base)


def rhodes_pp(phi, unsafe_scale=False):
  """Phi-connected partition-potential pairs as {"blocks", "rep"} dicts."""
  return json.loads(_rhodes.rhodes_pp(phi, unsafe_scale))


def rhodes_graphic(host, unsafe_scale=False):
  """Closed balanced subgraphs as {"vertices", "edges"} dicts."""
  return json.loads(_rhodes.rhodes_graphic(host, unsafe_scale))


def verify_isomorphism(phi, unsafe_scale=False):
  return json.loads(_rhodes.verify_isomorphism(phi, unsafe_scale))


def lattice(host, kind, unsafe_scale=False):
  """kind is classic, frame, lift or semiclosed."""
  return json.loads(_rhodes.lattice(host, kind, unsafe_scale))


def probe_lattice(host, kind, unsafe_scale=False):
  return json.loads(_rhodes.probe_lattice(host, kind, unsafe_scale))


def rank(host, matroid, edges, vertices=None):
  return _rhodes.rank(host, matroid, list(edges), vertices)


def closure(host, kind, edges, vertices=None):
  """kind is frame, lift, semiclosed or balanced."""
  return json.loads(_rhodes.closure(host, kind, list(edges), vertices))


def meet(phi, p, q):
  return json.loads(_rhodes.meet(phi, json.dumps(p), json.dumps(q)))


def b_map(phi, pair):
  return json.loads(_rhodes.b_map(phi, json.dumps(pair)))


def check_forms(fixture, matroid):
  """fixture is "Z6.K4" or "Z6.C4"; matroid is frame or lift."""
  return json.loads(_rhodes.check_forms(fixture, matroid))
