#!/usr/bin/env python3
"""End-to-end checks of the squarint binary.

    test_cli.py <squarint> <report.schema.json>
"""
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

EXE = None
SCHEMA = None


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("SQUARINT_PROFILE", None)
    if env:
        e.update(env)
    p = subprocess.run([EXE, *args], capture_output=True, text=True, env=e, timeout=600)
    return p.returncode, p.stdout, p.stderr


class Verify(unittest.TestCase):
    def test_single_id_passes(self):
        code, out, _ = run("verify", "--id", "T1-EX3")
        self.assertEqual(code, 0)
        self.assertRegex(out, r"T1-EX3\s+PASS")

    def test_json_report_matches_schema(self):
        code, out, _ = run("verify", "--filter", "T1-*", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMA)
        t1ex3 = next(r for r in doc["reports"] if r["id"] == "T1-EX3")
        self.assertAlmostEqual(t1ex3["lhs"]["re"], 0.0290392279127452, delta=1e-7)
        self.assertEqual(doc["seed"], 1729)
        self.assertEqual(doc["profile"], "quick")

    def test_full_run_exit_zero_and_schema(self):
        code, out, _ = run("verify", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        jsonschema.validate(doc, SCHEMA)
        self.assertEqual(doc["summary"]["fail"], 0)
        self.assertGreaterEqual(len(doc["reports"]), 30)

    def test_ramanujan_sine_parts(self):
        code, out, _ = run("verify", "--filter", "RAM-*-SIN")
        self.assertEqual(code, 0)
        lines = [l for l in out.splitlines() if l.startswith("RAM-")]
        self.assertEqual(len(lines), 12)
        self.assertTrue(all(" PASS " in l for l in lines))

    def test_flagged_rows_show_printed_formula(self):
        code, out, _ = run("verify", "--id", "COR1-COTH-PRINTED")
        self.assertEqual(code, 0)
        self.assertIn("FLAGGED", out)
        self.assertIn("printed: ", out)

    def test_deterministic(self):
        a = run("verify", "--filter", "GS-*", "--format", "json", "--seed", "42")[1]
        b = run("verify", "--filter", "GS-*", "--format", "json", "--seed", "42")[1]
        c = run("verify", "--filter", "GS-*", "--format", "json", "--seed", "42", "--serial")[1]
        self.assertEqual(a, b)
        self.assertEqual(a, c)

    def test_profile_from_environment(self):
        _, out, _ = run("verify", "--id", "T1-EX1", "--format", "json", env={"SQUARINT_PROFILE": "thorough"})
        self.assertEqual(json.loads(out)["profile"], "thorough")
        _, out, _ = run("verify", "--id", "T1-EX1", "--format", "json", "--profile", "quick",
                        env={"SQUARINT_PROFILE": "thorough"})
        self.assertEqual(json.loads(out)["profile"], "quick")

    def test_budgets_accepted(self):
        code, _, _ = run("verify", "--id", "GAMMA-SONDOW", "--budget-evals", "200000", "--budget-points", "4096")
        self.assertEqual(code, 0)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "r.json")
            code, out, _ = run("verify", "--id", "T1-EX1", "--format", "json", "--out", path)
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(path) as f:
                jsonschema.validate(json.load(f), SCHEMA)


class Errors(unittest.TestCase):
    def test_unknown_id(self):
        code, _, err = run("verify", "--id", "NOPE")
        self.assertEqual(code, 2)
        self.assertIn("UnknownIdentity", err)

    def test_bad_profile(self):
        self.assertEqual(run("verify", "--profile", "slow")[0], 2)
        self.assertEqual(run("verify", "--id", "T1-EX1", env={"SQUARINT_PROFILE": "slow"})[0], 2)

    def test_bad_format_and_flag(self):
        self.assertEqual(run("verify", "--format", "xml")[0], 2)
        self.assertEqual(run("verify", "--bogus")[0], 2)
        self.assertEqual(run()[0], 2)

    def test_unwritable_output(self):
        code, _, err = run("verify", "--id", "T1-EX1", "--out", "/nonexistent-dir/x.json")
        self.assertEqual(code, 3)
        self.assertIn("I/O error", err)

    def test_missing_registry_file(self):
        self.assertEqual(run("list", "--registry", "/nonexistent-dir/reg.txt")[0], 3)

    def test_asserted_failure_exits_one(self):
        # a registry file with one wrong asserted identity
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "reg.txt")
            with open(path, "w") as f:
                f.write('(identity :id "WRONG" :tol 1e-9 :trust asserted '
                        ':lhs (plan (term 1 value (const 1))) :rhs (plan (term 1 value (const 2))))\n')
            code, out, _ = run("verify", "--registry", path)
            self.assertEqual(code, 1)
            self.assertIn("FAIL", out)

    def test_registry_parse_error(self):
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "reg.txt")
            with open(path, "w") as f:
                f.write("; comment\n(identity :id \"X\"\n")
            code, _, err = run("list", "--registry", path)
            self.assertEqual(code, 2)
            self.assertIn("line 2", err)


class Eval(unittest.TestCase):
    def test_halfline(self):
        code, out, _ = run("eval", "halfline", "(1,1,1)(2,1,1)")
        self.assertEqual(code, 0)
        fields = dict(l.split(None, 1) for l in out.splitlines())
        self.assertAlmostEqual(float(fields["re"]), 0.34657359, places=8)
        self.assertAlmostEqual(float(fields["im"]), -0.34657359, places=8)

    def test_cube_json(self):
        code, out, _ = run("eval", "cube", "k=3; mu=3,2,1; logw=1,2,3; j=1", "--format", "json")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertAlmostEqual(doc["value"]["re"], 0.0290392279127452, delta=1e-8)
        self.assertEqual(doc["method"], "radial-simplex")

    def test_divergent_is_engine_error(self):
        code, _, err = run("eval", "halfline", "(1,1,1)")
        self.assertEqual(code, 1)
        self.assertIn("Divergent", err)

    def test_parse_error(self):
        self.assertEqual(run("eval", "cube", "k=two")[0], 2)
        self.assertEqual(run("eval", "sphere", "k=2")[0], 2)


class Listing(unittest.TestCase):
    def test_filter(self):
        code, out, _ = run("list", "--filter", "T9-*", "--format", "json")
        self.assertEqual(code, 0)
        ids = [r["id"] for r in json.loads(out)]
        self.assertEqual(len(ids), 14)
        self.assertTrue(all(i.startswith("T9-") for i in ids))

    def test_dump_round_trip(self):
        _, dumped, _ = run("dump")
        with tempfile.TemporaryDirectory() as d:
            path = os.path.join(d, "reg.txt")
            with open(path, "w") as f:
                f.write(dumped)
            code, again, _ = run("dump", "--registry", path)
            self.assertEqual(code, 0)
            self.assertEqual(again, dumped)
            a = run("verify", "--filter", "T1-*", "--format", "json")[1]
            b = run("verify", "--filter", "T1-*", "--format", "json", "--registry", path)[1]
            strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "registryVersion"}
            self.assertEqual(strip(a), strip(b))


if __name__ == "__main__":
    EXE = sys.argv[1]
    with open(sys.argv[2]) as f:
        SCHEMA = json.load(f)
    unittest.main(argv=sys.argv[:1], verbosity=2)
