import json
import os
import tempfile
import unittest
from unittest import mock

import config
import finite_structures as fs
import harness
import matrix as mx
import utils
from exceptions import InputError, ResourceError
from scalars import QI
from star_context import MatrixStarContext


class TestKRange(unittest.TestCase):
    def test_forms(self):
        self.assertEqual(utils.parse_k_range("1..3"), [1, 2, 3])
        self.assertEqual(utils.parse_k_range("2"), [2])
        self.assertEqual(utils.parse_k_range("1,3"), [1, 3])
        self.assertEqual(utils.parse_k_range(None), [1, 2, 3])

    def test_rejects(self):
        for text in ("0..2", "a", "3..1", "1..x", "-1"):
            with self.subTest(text=text):
                with self.assertRaises(InputError):
                    utils.parse_k_range(text)


class TestStructureSpec(unittest.TestCase):
    def test_shortcuts(self):
        self.assertEqual(utils.parse_structure_spec("m2z2").describe(), "M2(Z2)")
        self.assertEqual(utils.parse_structure_spec("mat:1:3").describe(), "M1(Z3)")
        self.assertEqual(utils.parse_structure_spec("zmod:6").describe(), "Z6")
        self.assertEqual(utils.parse_structure_spec("trivial").describe(), "trivial")

    def test_matrix_contexts(self):
        ctx = utils.parse_structure_spec("matrix:3:gaussian")
        self.assertIsInstance(ctx, MatrixStarContext)
        self.assertEqual(ctx.n, 3)
        self.assertIs(ctx.involution, mx.InvolutionKind.CONJUGATE_TRANSPOSE)
        ctx = utils.parse_structure_spec("matrix:2:gaussian:transpose")
        self.assertIs(ctx.involution, mx.InvolutionKind.TRANSPOSE)
        ctx = utils.parse_structure_spec("matrix:2:zmod5")
        self.assertEqual(ctx.field.modulus, 5)
        self.assertIs(ctx.involution, mx.InvolutionKind.TRANSPOSE)

    def test_matrix_dimension_defaults_from_config(self):
        ctx = utils.parse_structure_spec("matrix:gaussian")
        self.assertEqual(ctx.n, config.DEFAULT_MATRIX_DIM)
        with mock.patch.object(config, "DEFAULT_MATRIX_DIM", 3):
            ctx = utils.parse_structure_spec("matrix:zmod3:conjugate")
        self.assertEqual(ctx.n, 3)
        self.assertIs(ctx.involution, mx.InvolutionKind.CONJUGATE_TRANSPOSE)
        with self.assertRaises(InputError):
            utils.parse_structure_spec("matrix:gaussian:transpose:extra")

    def test_table(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "t.json")
            with open(path, "w", encoding="utf-8") as f:
                json.dump({"size": 2, "one": 0, "mul": [[0, 1], [1, 1]], "star": [0, 1]}, f)
            structure = utils.parse_structure_spec(f"table:{path}")
            self.assertEqual(len(structure.elements()), 2)

    def test_rejects(self):
        for spec in ("m3z2", "mat:2", "matrix:0:gaussian", "matrix:2:zmod4", "matrix:2:reals", "zmod:x", ""):
            with self.subTest(spec=spec):
                with self.assertRaises(InputError):
                    utils.parse_structure_spec(spec)

    def test_budget(self):
        with self.assertRaises(ResourceError):
            utils.parse_structure_spec("mat:2:5", budget=100)


class TestOutputs(unittest.TestCase):
    def test_report_json_is_sorted_and_stable(self):
        report = harness.verify_theorem(fs.zmod_structure(4), "L3.4")
        payload = [report.to_dict()]
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "nested", "report.json")
            utils.write_report_json(payload, path)
            with open(path, encoding="utf-8") as f:
                text = f.read()
            self.assertEqual(json.loads(text), payload)
            utils.write_report_json(payload, path)
            with open(path, encoding="utf-8") as f:
                self.assertEqual(f.read(), text)
        self.assertLess(text.index('"context"'), text.index('"theorem"'))

    def test_summary_frame(self):
        ctx = fs.zmod_structure(3)
        reports = harness.verify_many(ctx, ["L3.4", "C3.7"])
        frame = utils.summary_frame(reports)
        self.assertEqual(list(frame.columns),
                         ["theorem", "context", "instances", "hypothesis_hits", "formula_checks", "failures",
                          "verdict"])
        self.assertEqual(frame["theorem"].tolist(), ["L3.4", "C3.7"])
        self.assertEqual(frame["verdict"].tolist(), ["PASS", "PASS"])
        self.assertEqual(frame["instances"].tolist(), [3, 9])


if __name__ == '__main__':
    unittest.main()
