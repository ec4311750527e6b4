import json
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from core.cli import run
from core.concepts import ConceptClass
from core.formats import read_concept_class, write_concept_class
from core.reports import analyze_class, render_analysis

CHAIN = ConceptClass.from_strings(["000", "001", "011", "111"])


def run_captured(argv):
    out, err = StringIO(), StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(argv)
    return code, out.getvalue(), err.getvalue()


class ReportTests(SimpleTestCase):
    def test_chain_report_is_consistent(self):
        report = analyze_class(CHAIN)
        self.assertEqual((report.vcd, report.rtd, report.td_max, report.td_min), (1, 1, 2, 1))
        self.assertEqual(report.td_min, min(report.tds))
        self.assertEqual(report.rtd, max(level['td'] for level in report.plan))
        self.assertEqual(report.profile, {1: 2, 2: 3})
        self.assertTrue(report.maximal)
        self.assertTrue(report.intersection_closed)

    def test_render_is_a_table(self):
        text = render_analysis(analyze_class(CHAIN, profile_max=3))
        self.assertIn("rtd", text)
        self.assertIn("level  td  removed", text)


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)
        self.dir = Path(self.tmp.name)
        self.chain_path = write_concept_class(self.dir / "chain.cc", CHAIN)


class AnalyzeCommandTests(CommandTestCase):
    def test_chain_json(self):
        out = StringIO()
        call_command('analyze', str(self.chain_path), '--json', stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual((data['vcd'], data['rtd'], data['td_max']), (1, 1, 2))
        self.assertEqual(data['concepts'], ["000", "001", "011", "111"])

    def test_json_round_trips(self):
        code, out, _ = run_captured(['analyze', str(self.chain_path), '--json'])
        self.assertEqual(code, 0)
        text = out.rstrip("\n")
        self.assertEqual(json.dumps(json.loads(text), indent=2), text)

    def test_duplicate_line_exits_2(self):
        path = self.dir / "dup.cc"
        path.write_text("n=2\n01\n01\n")
        code, out, err = run_captured(['analyze', str(path)])
        self.assertEqual(code, 2)
        self.assertIn("duplicate", err)
        self.assertEqual(out, "")

    def test_call_command_raises_with_returncode(self):
        path = self.dir / "bad.cc"
        path.write_text("n=2\n012\n")
        with self.assertRaises(CommandError) as ctx:
            call_command('analyze', str(path))
        self.assertEqual(ctx.exception.returncode, 2)


class BoundsCommandTests(SimpleTestCase):
    def test_d1(self):
        code, out, _ = run_captured(['bounds', '--d', '1', '--json'])
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertAlmostEqual(data['rtd_bound'], 35.7422, delta=1e-3)
        self.assertEqual(data['x_start'], 5)
        self.assertEqual(len(data['chain']), 4)

    def test_table_output(self):
        out = StringIO()
        call_command('bounds', '--d', '2', stdout=out)
        self.assertIn("rtd_bound", out.getvalue())

    def test_bad_alpha_exits_2(self):
        code, _, _ = run_captured(['bounds', '--d', '1', '--alpha', '2.5'])
        self.assertEqual(code, 2)

    def test_missing_flag_exits_2(self):
        code, _, _ = run_captured(['bounds'])
        self.assertEqual(code, 2)

    def test_unreachable_root_exits_3(self):
        code, _, _ = run_captured(['bounds', '--d', '1', '--alpha', '1.001'])
        self.assertEqual(code, 3)


class ConstructCommandTests(CommandTestCase):
    def test_trace(self):
        out = StringIO()
        call_command('construct', str(self.chain_path), '--json', stdout=out)
        data = json.loads(out.getvalue())
        self.assertLessEqual(data['trace']['ts_size'], data['trace']['rtd_bound'])
        self.assertEqual(len(data['teaching_set']['instances']), data['trace']['ts_size'])
        self.assertIn(data['concept'], CHAIN.to_strings())


class ProductCommandTests(CommandTestCase):
    def test_writes_product(self):
        output = self.dir / "square.cc"
        code, _, _ = run_captured(['product', str(self.chain_path), str(self.chain_path), '-o', str(output)])
        self.assertEqual(code, 0)
        combined = read_concept_class(output)
        self.assertEqual((combined.n, len(combined)), (6, 16))

    def test_capacity_exits_3(self):
        big = write_concept_class(self.dir / "big.cc", ConceptClass.from_strings(["0" * 20, "1" * 20]))
        code, _, err = run_captured(['product', str(big), str(big), '-o', str(self.dir / "out.cc")])
        self.assertEqual(code, 3)
        self.assertIn("ceiling", err)
