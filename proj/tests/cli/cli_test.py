import json
import os
import shutil
import stat
import subprocess
import sys
import tempfile
import unittest

import jsonschema

EXE = os.environ["SIEGEL_VERIFY"]
SRC = os.environ["SIEGEL_SOURCE_DIR"]


def run(*args):
    return subprocess.run([EXE, *args], capture_output=True, text=True)


class Cli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.mkdtemp()
        with open(os.path.join(SRC, "schema", "report.schema.json")) as f:
            cls.schema = json.load(f)

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.tmp, ignore_errors=True)

    def path(self, name):
        return os.path.join(self.tmp, name)

    def test_all_passes_and_validates(self):
        p = self.path("all.json")
        r = run("verify", "all", "--json", p)
        self.assertEqual(r.returncode, 0, r.stdout + r.stderr)
        with open(p) as f:
            rep = json.load(f)
        jsonschema.validate(rep, self.schema)
        names = [c["name"] for c in rep["checks"]]
        self.assertEqual(names, sorted(names))
        self.assertEqual(rep["summary"]["fail"], 0)
        self.assertTrue(all(c["elapsedMs"] is None for c in rep["checks"]))

    def test_timings_validate(self):
        p = self.path("rep.json")
        r = run("verify", "--suite", "reptables", "--timings", "--json", p)
        self.assertEqual(r.returncode, 0)
        with open(p) as f:
            rep = json.load(f)
        jsonschema.validate(rep, self.schema)
        self.assertTrue(all(isinstance(c["elapsedMs"], float) for c in rep["checks"]))

    def test_determinism(self):
        a, b, c = self.path("d1.json"), self.path("d2.json"), self.path("d3.json")
        self.assertEqual(run("verify", "all", "--seed", "11", "--json", a).returncode, 0)
        self.assertEqual(run("verify", "all", "--seed", "11", "--json", b).returncode, 0)
        with open(a, "rb") as f, open(b, "rb") as g:
            self.assertEqual(f.read(), g.read())
        self.assertEqual(run("verify", "all", "--seed", "11", "--jobs", "4", "--json", c).returncode, 0)
        with open(a) as f, open(c) as g:
            x, y = json.load(f), json.load(g)
        self.assertEqual(x["checks"], y["checks"])

    def test_sturm_k1(self):
        p = self.path("sturm.json")
        r = run("verify", "sturm", "--k", "1", "--json", p)
        self.assertEqual(r.returncode, 0)
        with open(p) as f:
            checks = {c["name"]: c for c in json.load(f)["checks"]}
        self.assertIn("sturm.limit.k1", checks)
        self.assertNotIn("sturm.limit.k2", checks)
        self.assertEqual(checks["sturm.limit.k1"]["lhs"], "-1/8*tau*aT")

    def test_unknown_suite_and_bad_flag(self):
        self.assertEqual(run("verify", "nope").returncode, 2)
        self.assertEqual(run("verify", "all", "--tol", "-1").returncode, 2)
        self.assertEqual(run("--bogus").returncode, 2)

    def test_list(self):
        r = run("--list")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(r.stdout.split(), ["gamma-numeric", "hc", "maass", "reptables", "shift", "sturm", "uea", "all"])

    def test_corrupted_golden_table(self):
        g = self.path("goldens")
        shutil.copytree(os.path.join(SRC, "goldens"), g)
        table = os.path.join(g, "c2_table.txt")
        with open(table) as f:
            lines = f.read().splitlines()
        lines = [l.replace("- 32", "- 31") if l.startswith("(0,0):") else l for l in lines]
        self.assertTrue(any(l.endswith("- 31") for l in lines))
        with open(table, "w") as f:
            f.write("\n".join(lines) + "\n")
        r = run("verify", "shift", "--goldens", g)
        self.assertEqual(r.returncode, 1)
        self.assertIn("FAIL    shift.golden.c2_table  residual: (0,0): -1", r.stdout)

    def test_dump_goldens(self):
        self.assertEqual(run("dump", "goldens", self.path("g1")).returncode, 2)
        self.assertEqual(run("dump", "goldens", self.path("g1"), "--update-goldens").returncode, 0)
        self.assertEqual(run("dump", "goldens", self.path("g2"), "--update-goldens").returncode, 0)
        files = sorted(os.listdir(self.path("g1")))
        self.assertEqual(files, sorted(os.listdir(os.path.join(SRC, "goldens"))))
        for n in files:
            with open(os.path.join(self.path("g1"), n), "rb") as a, open(os.path.join(self.path("g2"), n), "rb") as b:
                self.assertEqual(a.read(), b.read(), n)
            with open(os.path.join(self.path("g1"), n), "rb") as a, open(os.path.join(SRC, "goldens", n), "rb") as b:
                self.assertEqual(a.read(), b.read(), n)

    def test_dump_tables(self):
        r = run("dump", "tables", self.path("t"))
        self.assertEqual(r.returncode, 0)
        with open(os.path.join(self.path("t"), "tables.json")) as f:
            t = json.load(f)
        self.assertEqual(t["infinitesimalCharacters"], ["(1,-1)", "(1,0)", "(1,2)", "(2,1)"])
        self.assertEqual([s["L1"] for s in t["ktypeScan"] if s["contains33"]], [2])

    @unittest.skipIf(hasattr(os, "geteuid") and os.geteuid() == 0, "root ignores directory permissions")
    def test_dump_read_only(self):
        d = self.path("ro")
        os.mkdir(d)
        os.chmod(d, stat.S_IRUSR | stat.S_IXUSR)
        try:
            r = run("dump", "tables", d)
            self.assertEqual(r.returncode, 1)
            self.assertIn("Permission denied", r.stderr)
        finally:
            os.chmod(d, stat.S_IRWXU)

    def test_dump_unwritable_path(self):
        blocker = self.path("file")
        with open(blocker, "w") as f:
            f.write("x")
        r = run("dump", "tables", os.path.join(blocker, "sub"))
        self.assertEqual(r.returncode, 1)
        self.assertTrue(r.stderr.strip())


if __name__ == "__main__":
    unittest.main(argv=[sys.argv[0], "-v"])
