# Copyright 2026 The Judicious Authors
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

"""End-to-end tests of the judicious command line.

Usage: cli_test.py <judicious binary> <report schema>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = None
SCHEMA = None


def run(*args, env=None):
    return subprocess.run([BINARY, *args], capture_output=True, text=True, env=env)


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = cls.tmp.name
        with open(SCHEMA) as f:
            cls.schema = json.load(f)
        jsonschema.Draft202012Validator.check_schema(cls.schema)

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.dir, name)

    def report(self, *args, code=0):
        r = run(*args)
        self.assertEqual(r.returncode, code, r.stderr)
        data = json.loads(r.stdout)
        jsonschema.validate(data, self.schema)
        self.assertEqual(data["schema_version"], "1.0")
        return data

    def construct(self, name, *args):
        out = self.path(name)
        r = run("construct", *args, "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        return out

    def test_extremal_graph_value(self):
        h = self.construct("h.el", "--family", "paper-h")
        data = self.report("solve-exact", h, "--objective", "minmax")
        self.assertEqual(data["results"]["value"], 10)
        self.assertEqual(data["results"]["n"], 12)
        self.assertEqual(len(data["fingerprint"]), 16)

    def test_exact_objectives_and_methods(self):
        h = self.construct("h2.el", "--family", "paper-h")
        bnb = self.report("solve-exact", h, "--objective", "sum")
        enum = self.report("solve-exact", h, "--objective", "sum", "--method", "enumerate")
        self.assertEqual(bnb["results"]["value"], enum["results"]["value"])
        self.assertEqual(bnb["results"]["witness"], enum["results"]["witness"])
        c5 = self.construct("c5.el", "--family", "cycle", "--n", "5")
        self.assertEqual(self.report("solve-exact", c5, "--objective", "d2")["results"]["value"], 1)

    def test_blowup_value(self):
        data = self.report("solve-blowup", "--base", "paper-h", "--mult", "2")
        self.assertEqual(data["results"]["value"], 37)
        self.assertEqual(data["results"]["n"], 24)
        c5 = self.construct("c5b.el", "--family", "cycle", "--n", "5")
        data = self.report("solve-blowup", "--base-file", c5, "--mult", "2", "--all-optimal")
        self.assertEqual(data["results"]["value"], 2)
        self.assertIn("all_optimal", data["results"])

    def test_graph6_round_trip(self):
        el = self.construct("p.el", "--family", "petersen")
        g6 = self.construct("p.g6", "--family", "petersen", "--format", "g6")
        a = self.report("solve-exact", el, "--objective", "d2")
        b = self.report("solve-exact", g6, "--objective", "d2")
        self.assertEqual(a["fingerprint"], b["fingerprint"])
        self.assertEqual(a["results"]["value"], 3)

    def test_heuristic_pipelines(self):
        k = self.construct("k.el", "--family", "random-k4free", "--n", "240", "--p", "0.4")
        data = self.report("heuristic", k, "--pipeline", "k4free")
        trace = data["results"]["trace"]
        self.assertTrue(trace["compliant"])
        self.assertEqual(trace["achieved"], data["results"]["partition"]["max"])
        j = self.construct("j.el", "--family", "join", "--base", "cycle", "--n", "7", "--i-size", "13")
        data = self.report("heuristic", j, "--pipeline", "join")
        self.assertEqual(data["results"]["i_size"], 13)
        self.assertTrue(data["results"]["trace"]["compliant"])
        t = self.construct("t.el", "--family", "complete-multipartite", "--classes", "6,3,3")
        data = self.report("heuristic", t, "--pipeline", "tripartite", "--parts", "6,3,3")
        self.assertEqual(data["results"]["partition"]["max"], 9)
        h = self.construct("h3.el", "--family", "paper-h")
        data = self.report("heuristic", h, "--pipeline", "xu")
        self.assertEqual(data["results"]["achieved"], 10)
        data = self.report("heuristic", h, "--pipeline", "xu", "--preset", "k4free-0.074")
        self.assertFalse(data["results"]["applicable"])
        c5 = self.construct("c5c.el", "--family", "cycle", "--n", "5")
        self.assertEqual(self.report("heuristic", c5, "--pipeline", "bipartize")["results"]["deleted"], 1)

    def test_seed_and_workers_do_not_leak_into_results(self):
        k = self.construct("k2.el", "--family", "random-k4free", "--n", "200", "--p", "0.5")
        one = self.report("--workers", "1", "heuristic", k, "--pipeline", "k4free")
        two = self.report("--workers", "2", "heuristic", k, "--pipeline", "k4free")
        self.assertEqual(one["results"], two["results"])
        a = run("--seed", "4", "construct", "--family", "erdos-renyi", "--n", "30").stdout
        b = run("--seed", "4", "construct", "--family", "erdos-renyi", "--n", "30").stdout
        c = run("--seed", "5", "construct", "--family", "erdos-renyi", "--n", "30").stdout
        self.assertEqual(a, b)
        self.assertNotEqual(a, c)

    def test_certify_single_claims(self):
        data = self.report("certify", "--claim", "CUBIC1", "--claim", "CONTROL_CUBIC")
        self.assertTrue(data["results"]["all_passed"])
        verdicts = {c["id"]: c["verdict"] for c in data["results"]["claims"]}
        self.assertEqual(verdicts, {"CUBIC1": "verified", "CONTROL_CUBIC": "refuted"})
        data = self.report("certify", "--claim", "G1", "--cells")
        self.assertEqual(len(data["results"]["claims"][0]["cells"]), data["results"]["claims"][0]["cell_count"])

    def test_certify_all_reports_the_refuted_sign_claim(self):
        data = self.report("certify", "--all", code=1)
        results = data["results"]
        self.assertGreaterEqual(results["passed"], 20)
        failed = [c["id"] for c in results["claims"] if not c["passed"]]
        self.assertEqual(failed, ["F_PRIME_ALPHA"])
        self.assertTrue(all(c["match"] for c in results["constants"]))

    def test_verify_paper_filter(self):
        data = self.report("verify-paper", "--only", "blowup-value", "--json")
        self.assertEqual(len(data["results"]["checks"]), 1)
        self.assertEqual(data["results"]["checks"][0]["number"], 3)
        self.assertTrue(data["results"]["all_passed"])
        table = run("verify-paper", "--only", "1,7")
        self.assertEqual(table.returncode, 0)
        self.assertIn("2/2 checks passed", table.stdout)
        failing = run("verify-paper", "--only", "certificates")
        self.assertEqual(failing.returncode, 1)
        self.assertIn("FAIL", failing.stdout)

    def test_bench(self):
        r = run("bench", "--family", "paper-h", "--operation", "blowup", "--sizes", "1,2,3,4", "--csv")
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = r.stdout.strip().splitlines()
        self.assertEqual(lines[0], "n,operation,wall_ms,nodes,value")
        nodes = [int(line.split(",")[3]) for line in lines[1:]]
        self.assertEqual(nodes, sorted(nodes))
        data = self.report("bench", "--family", "erdos-renyi", "--operation", "exact", "--sizes", "12,16")
        self.assertEqual([row["n"] for row in data["results"]["rows"]], [12, 16])
        data = self.report("bench", "--family", "random-tripartite", "--p", "0.5", "--operation", "k4free",
                           "--sizes", "240,480")
        self.assertEqual(len(data["results"]["rows"]), 2)

    def test_out_flag_writes_file(self):
        out = self.path("report.json")
        h = self.construct("h4.el", "--family", "paper-h")
        r = run("solve-exact", h, "--out", out)
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout, "")
        with open(out) as f:
            jsonschema.validate(json.load(f), self.schema)

    def test_usage_and_input_errors(self):
        bad = self.path("bad.el")
        with open(bad, "w") as f:
            f.write("3 2\n0 1\n1 x\n")
        r = run("solve-exact", bad)
        self.assertEqual(r.returncode, 2)
        self.assertIn("line 3", r.stderr)
        self.assertEqual(run("solve-exact", self.path("missing.el")).returncode, 2)
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("construct", "--family", "nope").returncode, 2)
        self.assertEqual(run("certify").returncode, 2)
        self.assertEqual(run("certify", "--claim", "NOPE").returncode, 2)
        self.assertEqual(run("verify-paper", "--only", "nope").returncode, 2)
        c5 = self.construct("c5d.el", "--family", "cycle", "--n", "5")
        r = run("solve-exact", c5)
        self.assertEqual(r.returncode, 2)
        self.assertIn("even", r.stderr)
        self.assertEqual(run("--help").returncode, 0)

    def test_no_color(self):
        env = dict(os.environ, NO_COLOR="1")
        r = run("solve-exact", self.path("missing.el"), env=env)
        self.assertTrue(r.stderr.startswith("error: "))
        self.assertNotIn("\033[", r.stderr)


if __name__ == "__main__":
    BINARY, SCHEMA = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])
