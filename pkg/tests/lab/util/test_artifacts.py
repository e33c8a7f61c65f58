import os
import json
import tempfile
import numpy as np
import pandas as pd
from unittest import TestCase

from wp.lab.config import LabConfig
from wp.lab.util import AtomicWriter, progress
from wp.lab.util.artifacts import *  # noqa: F403


class TestArtifacts(TestCase):
    def test_write_csv(self):
        df = pd.DataFrame(dict(g=[2, 3], value=[np.pi, np.e]))
        with tempfile.TemporaryDirectory() as dir:
            fn = os.path.join(dir, 'sub', 'table.csv')
            write_csv(fn, df, metadata=dict(seed=1, anchor='x'))  # noqa: F405

            with open(fn) as f:
                lines = f.readlines()
            self.assertEqual(lines[0], '# anchor: "x"\n')
            self.assertEqual(lines[1], '# seed: 1\n')

            back = read_csv(fn)  # noqa: F405
            self.assertEqual(back['g'].tolist(), [2, 3])
            self.assertAlmostEqual(back['value'][0], np.pi, places=11)

            # Reruns without timestamps are byte-identical
            first = open(fn).read()
            write_csv(fn, df, metadata=dict(seed=1, anchor='x'))  # noqa: F405
            self.assertEqual(open(fn).read(), first)

            write_csv(fn, df, metadata=dict(seed=1), timestamps=True)  # noqa: F405
            self.assertTrue(any(l.startswith('# created') for l in open(fn).readlines()))  # noqa: E741
            self.assertEqual(body_lines(fn)[0], 'g,value\n')  # noqa: F405

    def test_write_json(self):
        with tempfile.TemporaryDirectory() as dir:
            fn = os.path.join(dir, 'report.json')
            write_json(fn, dict(value=np.float64(1.5), items=np.arange(3)), metadata=dict(seed=3))  # noqa: E501,F405
            with open(fn) as f:
                doc = json.load(f)
            self.assertEqual(doc['value'], 1.5)
            self.assertEqual(doc['items'], [0, 1, 2])
            self.assertEqual(doc['metadata'], dict(seed=3))

    def test_atomic_writer_failure(self):
        with tempfile.TemporaryDirectory() as dir:
            fn = os.path.join(dir, 'out.txt')
            with AtomicWriter(fn) as f:
                f.write('old')

            with self.assertRaises(RuntimeError):
                with AtomicWriter(fn) as f:
                    f.write('new')
                    raise RuntimeError()

            self.assertEqual(open(fn).read(), 'old')
            self.assertEqual(os.listdir(dir), ['out.txt'])

    def test_artifact_metadata(self):
        config = LabConfig()
        config.command = 'bounds'
        md = artifact_metadata(config, 'anchor', extra=1)  # noqa: F405
        self.assertEqual(md['command'], 'bounds')
        self.assertEqual(md['seed'], 42)
        self.assertEqual(md['anchor'], 'anchor')
        self.assertEqual(md['extra'], 1)
        self.assertIn('version', md)

    def test_finite_or_none(self):
        self.assertIsNone(finite_or_none(np.inf))  # noqa: F405
        self.assertIsNone(finite_or_none(None))  # noqa: F405
        self.assertEqual(finite_or_none(2), 2.0)  # noqa: F405

    def test_progress(self):
        self.assertEqual(list(progress(range(3), desc='test')), [0, 1, 2])
