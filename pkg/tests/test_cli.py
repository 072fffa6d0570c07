import asyncio
import contextlib
import io
import json
import os
import tempfile
import unittest

import fixtures

from altlinkchecker import DiagramParser, cli
from altlinkchecker.serializer import serialize_diagram


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = asyncio.run(cli.async_main(list(argv)))
    return code, out.getvalue(), err.getvalue()


class TestCertifyCommand(unittest.TestCase):
    def test_torus_weave_json(self):
        code, out, _ = run("certify", fixtures.data_path("torus_weave2.dgm"), "--json")
        self.assertEqual(code, cli.EXIT_OK)
        payload = json.loads(out)
        self.assertEqual(payload["verdict"]["kind"], "Hyperbolic")
        self.assertEqual(payload["verdict"]["citation"], "Theorem 1")
        self.assertEqual(payload["surface"], {"chi": 0, "genus": 1, "orientable": True})
        self.assertEqual(payload["citations"], ["Theorem 1", "Theorem 2"])

    def test_composite_is_still_exit_zero(self):
        code, out, _ = run("certify", fixtures.data_path("granny.dgm"), "--json")
        self.assertEqual(code, cli.EXIT_OK)
        verdict = json.loads(out)["verdict"]
        self.assertEqual((verdict["kind"], verdict["failed_check"]), ("FailsHypothesis", "obviously_prime"))
        self.assertEqual(len(verdict["witness"]["edges"]), 2)

    def test_ambient_file(self):
        code, out, _ = run("certify", fixtures.data_path("torus_weave2.dgm"), "--json",
                           "--ambient", fixtures.data_path("ambient_example.env"))
        self.assertEqual(code, cli.EXIT_OK)
        extensions = json.loads(out)["extensions"]
        self.assertEqual([e["kind"] for e in extensions], ["NotCovered"])

    def test_table_output(self):
        code, out, _ = run("certify", fixtures.data_path("trefoil.dgm"))
        self.assertEqual(code, cli.EXIT_OK)
        self.assertIn("two_braid", out)

    def test_missing_file(self):
        code, out, err = run("certify", "no/such/file.dgm")
        self.assertEqual(code, cli.EXIT_INPUT)
        self.assertEqual(out, "")
        self.assertIn("no/such/file.dgm", err)


class TestOtherCommands(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name: str, text: str) -> str:
        path = os.path.join(self.tmp.name, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
        return path

    def test_check_json(self):
        code, out, _ = run("check", fixtures.data_path("klein_one.dgm"), "--json")
        self.assertEqual(code, cli.EXIT_OK)
        payload = json.loads(out)
        self.assertEqual(set(payload), {"version", "input", "surface", "checks", "verdict"})
        self.assertIsNone(payload["verdict"])
        self.assertEqual(payload["surface"], {"chi": 0, "genus": 2, "orientable": False})
        self.assertTrue(payload["checks"]["alternating"])

    def test_reduce_writes_a_document(self):
        kinked = fixtures.add_kink(fixtures.trefoil(), 1)
        source = self.write("kinked.dgm", serialize_diagram(kinked))
        target = os.path.join(self.tmp.name, "reduced.dgm")
        code, _, _ = run("reduce", source, "-o", target)
        self.assertEqual(code, cli.EXIT_OK)
        reduced, _ = DiagramParser.parse_file(target)
        self.assertEqual(reduced.crossing_count, 3)

    def test_cover(self):
        code, out, _ = run("cover", fixtures.data_path("klein_one.dgm"))
        self.assertEqual(code, cli.EXIT_OK)
        lifted, _ = DiagramParser.parse_diagram(out)
        self.assertEqual(lifted.crossing_count, 2)

    def test_weave_reports_odd_cycle(self):
        code, out, err = run("weave", fixtures.data_path("theta_torus.map"))
        self.assertEqual(code, cli.EXIT_INPUT)
        self.assertIn("odd cycle", err)

    def test_weave_four_valent(self):
        source = self.write("square.map", "vertex a: 1 2 3 4\nvertex b: 5 6 7 8\n"
                                          "edge 1 7\nedge 2 8\nedge 3 5\nedge 4 6\n")
        code, out, _ = run("weave", source, "--json")
        self.assertEqual(code, cli.EXIT_OK)
        self.assertEqual(json.loads(out)["crossing_count"], 2)

    def test_parse_error_exit_code(self):
        source = self.write("broken.dgm", "version 1\ncrossing 0: 1 2 3\n")
        code, _, err = run("check", source)
        self.assertEqual(code, cli.EXIT_INPUT)
        self.assertIn("degree 4", err)

    def test_stats(self):
        code, out, _ = run("stats", fixtures.data_path("torus_weave2.dgm"), "--json")
        self.assertEqual(code, cli.EXIT_OK)
        payload = json.loads(out)
        self.assertEqual((payload["crossings_per_fundamental_domain"], payload["component_count"]), (2, 2))

    def test_batch(self):
        listing = self.write("batch.txt", "\n".join([
            "# inputs",
            fixtures.data_path("figure_eight.dgm"),
            fixtures.data_path("two_braid4.dgm"),
            os.path.join(self.tmp.name, "missing.dgm"),
        ]) + "\n")
        code, out, err = run("certify", "--batch", listing, "--json", "--concurrency", "2")
        self.assertEqual(code, cli.EXIT_INPUT)
        payloads = json.loads(out)
        self.assertEqual([p["verdict"]["kind"] for p in payloads], ["Hyperbolic", "FailsHypothesis"])
        self.assertIn("missing.dgm", err)


if __name__ == "__main__":
    unittest.main()
