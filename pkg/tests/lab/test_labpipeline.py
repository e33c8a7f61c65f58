import os
import json
import tempfile
from unittest import TestCase

from wp.lab import LabPipeline, LabTrace
from wp.lab.config import LabConfig
from wp.lab.laberror import ConfigError
from wp.lab.util.artifacts import read_csv
from tests.lab.config.configs import *  # noqa: F403


class TestLabPipeline(TestCase):
    def get_test_config(self, command, outdir):
        config = LabConfig()
        config.load(TEST_CONFIG_GENUS2)  # noqa: F405
        config.command = command
        config.outdir = outdir
        config.logdir = os.path.join(outdir, 'log')
        config.figdir = os.path.join(outdir, 'fig')
        return config

    def create_test_pipeline(self, config, document=None):
        trace = LabTrace(config.figdir, plot=False)
        return LabPipeline(None, config, trace, document=document)

    def test_validate_config(self):
        with tempfile.TemporaryDirectory() as dir:
            config = self.get_test_config('bounds', dir)
            pipeline = self.create_test_pipeline(config)
            pipeline.validate_config()

            config.g_max = 1
            with self.assertRaises(ConfigError):
                pipeline.validate_config()

    def test_step_init(self):
        with tempfile.TemporaryDirectory() as dir:
            outdir = os.path.join(dir, 'out')
            config = self.get_test_config('bounds', outdir)
            pipeline = self.create_test_pipeline(config)

            pipeline._LabPipeline__step_init()
            self.assertTrue(os.path.isfile(os.path.join(outdir, 'config_bounds.yaml')))

            # The saved configuration loads back
            copy = LabConfig()
            copy.load(os.path.join(outdir, 'config_bounds.yaml'))
            self.assertEqual(copy.seed, config.seed)
            self.assertEqual(copy.bounds.g_max, config.bounds.g_max)

    def test_systole(self):
        with tempfile.TemporaryDirectory() as dir:
            config = self.get_test_config('systole', dir)
            pipeline = self.create_test_pipeline(config, document=TEST_SURFACE_GENUS2)  # noqa: F405
            pipeline.validate_config()
            self.assertTrue(pipeline.execute())
            self.assertEqual(len(pipeline.exceptions), 0)

            with open(os.path.join(dir, 'systole.json')) as f:
                doc = json.load(f)
            self.assertLessEqual(doc['systole'], 1.8 + 1e-7)
            self.assertLess(doc['relation_residual'], 1e-9)
            self.assertEqual(doc['surface']['lengths'], TEST_SURFACE_GENUS2['lengths'])  # noqa: F405

            table = read_csv(os.path.join(dir, 'systole-classes.csv'))
            self.assertEqual(len(table), len(doc['systolic_words']))

    def test_systole_l_max(self):
        with tempfile.TemporaryDirectory() as dir:
            config = self.get_test_config('systole', dir)
            config.l_max = 3.0
            pipeline = self.create_test_pipeline(config, document=TEST_SURFACE_GENUS2)  # noqa: F405
            pipeline._LabPipeline__step_systole()

            table = read_csv(os.path.join(dir, 'systole-classes.csv'))
            with open(os.path.join(dir, 'systole.json')) as f:
                doc = json.load(f)
            self.assertGreaterEqual(len(table), len(doc['systolic_words']))

    def test_bounds(self):
        with tempfile.TemporaryDirectory() as dir:
            config = self.get_test_config('bounds', dir)
            pipeline = self.create_test_pipeline(config)
            pipeline.validate_config()
            pipeline._LabPipeline__step_bounds()

            table = read_csv(os.path.join(dir, 'bounds.csv'))
            self.assertEqual(table['g'].tolist(), list(range(2, 21)))
            with open(os.path.join(dir, 'bounds.json')) as f:
                doc = json.load(f)
            self.assertTrue(doc['verdict'])
            self.assertEqual(len(doc['n_direction']), 4)

    def test_decay(self):
        with tempfile.TemporaryDirectory() as dir:
            config = self.get_test_config('decay', dir)
            pipeline = self.create_test_pipeline(config)
            pipeline.validate_config()
            pipeline._LabPipeline__step_decay()

            table = read_csv(os.path.join(dir, 'decay.csv'))
            self.assertEqual(len(table), 4)
            with open(os.path.join(dir, 'decay.json')) as f:
                doc = json.load(f)
            self.assertGreater(doc['onset'], 2**60)

    def test_path_document(self):
        with tempfile.TemporaryDirectory() as dir:
            config = self.get_test_config('path', dir)
            pipeline = self.create_test_pipeline(config, document=dict(genus=2))
            pipeline.execute()

            self.assertEqual(len(pipeline.exceptions), 1)
            self.assertIsInstance(pipeline.exceptions[0], ConfigError)
            self.assertEqual(len(pipeline.tracebacks), 1)
