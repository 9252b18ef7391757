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

"""End-to-end checks of the rhodes command-line tool."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

RHODES = None


def run(*args, env=None):
  merged = dict(os.environ)
  merged.pop("RHODES_SCALE_GUARD", None)
  merged.update(env or {})
  return subprocess.run([RHODES, *args], capture_output=True, text=True,
                        env=merged, check=False)


class CliTest(unittest.TestCase):

  def setUp(self):
    self.tmp = tempfile.TemporaryDirectory()
    self.dir = self.tmp.name

  def tearDown(self):
    self.tmp.cleanup()

  def path(self, name):
    return os.path.join(self.dir, name)

  def write(self, name, obj):
    with open(self.path(name), "w") as f:
      json.dump(obj, f)
    return self.path(name)

  def expand(self, group, base):
    out = self.path(f"{group}-{base}.json".replace(":", "_"))
    r = run("expand", "--group", group, "--base", base, "-o", out)
    self.assertEqual(r.returncode, 0, r.stderr)
    return out

  def test_expand(self):
    with open(self.expand("cyclic:6", "K4")) as f:
      self.assertEqual(len(json.load(f)["edges"]), 36)
    with open(self.expand("cyclic:6", "C4")) as f:
      self.assertEqual(len(json.load(f)["edges"]), 24)
    with open(self.expand("cyclic:1", "K3")) as f:
      self.assertTrue(all(e["gain"] == 0 for e in json.load(f)["edges"]))
    self.assertEqual(run("expand", "--group", "cyclic:0", "--base", "K3").returncode, 2)
    self.assertEqual(run("expand", "--group", "Z2", "--base", "X3").returncode, 2)

  def count(self, src, kind):
    r = run("enumerate", "-i", src, "--kind", kind)
    self.assertEqual(r.returncode, 0, r.stderr)
    return len(json.loads(r.stdout)["elements"])

  def test_enumerate_counts(self):
    z2k3 = self.expand("cyclic:2", "K3")
    self.assertEqual(self.count(z2k3, "rhodes-graphic"), 24)
    self.assertEqual(self.count(z2k3, "rhodes-pp"), 24)
    self.assertEqual(self.count(z2k3, "classic"), 25)
    pair = self.write("pair.json", {
        "vertices": [0, 1],
        "edges": [{"id": 0, "tail": 0, "head": 1}, {"id": 1, "tail": 0, "head": 1}],
        "balanced": []})
    self.assertEqual(self.count(pair, "frame"), 7)

  def test_deterministic_and_round_trip(self):
    z2k3 = self.expand("cyclic:2", "K3")
    for kind in ("rhodes-pp", "classic", "frame", "lift", "semiclosed"):
      a, b = self.path(f"a-{kind}.json"), self.path(f"b-{kind}.json")
      self.assertEqual(run("enumerate", "-i", z2k3, "--kind", kind, "-o", a).returncode, 0)
      self.assertEqual(run("enumerate", "-i", z2k3, "--kind", kind, "-o", b).returncode, 0)
      with open(a) as fa, open(b) as fb:
        self.assertEqual(fa.read(), fb.read())
      r = run("export-dot", "-i", a)
      self.assertEqual(r.returncode, 0, r.stderr)
    # Expand output reads back to the same bytes through enumerate's host.
    r = run("enumerate", "-i", z2k3, "--kind", "rhodes-pp")
    with open(z2k3) as f:
      self.assertEqual(json.loads(r.stdout)["host"], json.load(f))

  def test_export_dot(self):
    one = self.write("one.json", {"kind": "frame", "host": {"vertices": [], "edges": []},
                                  "elements": [{"vertices": [], "edges": []}], "hasse": []})
    r = run("export-dot", "-i", one)
    self.assertEqual(r.returncode, 0, r.stderr)
    self.assertEqual(r.stdout.count("->"), 0)
    self.assertEqual(r.stdout.count("[label="), 1)
    chain = self.write("chain.json", {
        "kind": "frame", "host": {"vertices": [0, 1], "edges": []},
        "elements": [{"vertices": [], "edges": []}, {"vertices": [0], "edges": []},
                     {"vertices": [0, 1], "edges": []}],
        "hasse": [[0, 1], [1, 2]]})
    r = run("export-dot", "-i", chain)
    self.assertEqual(r.stdout.count("->"), 2)
    z2k3 = self.expand("cyclic:2", "K3")
    r = run("enumerate", "-i", z2k3, "--kind", "classic", "--format", "dot")
    self.assertIn('label="TOP", shape=box', r.stdout)
    bad = self.write("bad.json", {"kind": "frame", "elements": []})
    self.assertEqual(run("export-dot", "-i", bad).returncode, 2)

  def verify(self, src, *extra):
    r = run("verify", "-i", src, *extra)
    return r.returncode, (json.loads(r.stdout) if r.stdout else None), r.stderr

  def test_verify(self):
    z2k3 = self.expand("cyclic:2", "K3")
    for check in ("iso", "order-ideal", "rank-axioms", "theta"):
      code, report, err = self.verify(z2k3, "--check", check)
      self.assertEqual(code, 0, err)
      self.assertTrue(report["ok"])
    k4 = self.expand("cyclic:6", "K4")
    code, report, _ = self.verify(k4, "--check", "forms", "--lattice", "frame")
    self.assertEqual(code, 0)
    self.assertEqual(report["unlisted_count"], 0)
    self.assertEqual(report["classified"], report["unbalanced"])
    code, report, _ = self.verify(k4, "--check", "theta")
    self.assertEqual(code, 0)
    code, _, err = self.verify(z2k3, "--check", "forms")
    self.assertEqual(code, 2)
    self.assertIn("forms", err)
    # The listed C4 lift forms include a non-flat; the report carries the missing forms.
    c4 = self.expand("cyclic:6", "C4")
    code, report, _ = self.verify(c4, "--check", "forms", "--lattice", "lift")
    self.assertEqual(code, 1)
    self.assertEqual(report["missing_per_form"], {"Phi:X2+e(Y2)": 24})

  def test_theta_rejection(self):
    bad = self.write("bad.json", {
        "vertices": [0, 1],
        "edges": [{"id": i, "tail": 0, "head": 1} for i in range(3)],
        "balanced": [[0, 1], [1, 2]]})
    code, report, _ = self.verify(bad, "--check", "theta")
    self.assertEqual(code, 1)
    self.assertFalse(report["ok"])
    self.assertEqual(report["counterexample"]["edges"], [0, 1, 2])
    self.assertEqual(run("enumerate", "-i", bad, "--kind", "frame").returncode, 2)

  def test_guards(self):
    k4 = self.expand("cyclic:6", "K4")
    r = run("enumerate", "-i", k4, "--kind", "semiclosed")
    self.assertEqual(r.returncode, 3)
    self.assertIn("max_exhaustive_edges", r.stderr)
    r = run("verify", "-i", k4, "--check", "theta", "--unsafe-scale")
    self.assertEqual(r.returncode, 0)
    self.assertIn("lifted", r.stderr)
    r = run("verify", "-i", k4, "--check", "theta", env={"RHODES_SCALE_GUARD": "unsafe"})
    self.assertIn("RHODES_SCALE_GUARD", r.stderr)
    r = run("verify", "-i", k4, "--check", "theta", env={"RHODES_SCALE_GUARD": "nope"})
    self.assertEqual(r.returncode, 2)

  def test_rank_closure_meet(self):
    z2k3 = self.expand("cyclic:2", "K3")
    r = run("rank", "-i", z2k3, "--matroid", "frame", "--edges", "0,1")
    self.assertEqual(json.loads(r.stdout)["rank"], 2)
    r = run("closure", "-i", z2k3, "--kind", "balanced", "--edges", "0,4")
    self.assertEqual(json.loads(r.stdout)["edges"], [0, 2, 4])
    r = run("closure", "-i", z2k3, "--kind", "balanced", "--edges", "0,1")
    self.assertEqual(r.returncode, 2)
    p = self.write("p.json", {"blocks": [[0, 1, 2]], "rep": {"0": 0, "1": 1, "2": 1}})
    q = self.write("q.json", {"blocks": [[0, 1, 2]], "rep": {"0": 0, "1": 0, "2": 0}})
    r = run("meet", "-i", z2k3, "--p", p, "--q", q)
    self.assertEqual(r.returncode, 0, r.stderr)
    self.assertEqual(json.loads(r.stdout)["blocks"], [[0], [1, 2]])
    self.assertEqual(json.loads(run("rank", "-i", z2k3).stdout)["rank"], 0)
    self.assertNotEqual(run("bogus").returncode, 0)


if __name__ == "__main__":
  RHODES = sys.argv.pop(1)
  unittest.main()
