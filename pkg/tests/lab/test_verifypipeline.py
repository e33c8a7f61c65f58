import os
import json
import tempfile
from unittest import TestCase

from wp.lab import VerifyPipeline
from wp.lab.config import LabConfig
from wp.lab.util.artifacts import read_csv
from tests.lab.config.configs import *  # noqa: F403


class TestVerifyPipeline(TestCase):
    def get_test_config(self, outdir):
        config = LabConfig()
        config.load(TEST_CONFIG_GENUS2)  # noqa: F405
        config.load(TEST_CONFIG_VERIFY_SMALL)  # noqa: F405
        config.command = 'verify'
        config.outdir = outdir
        config.figdir = os.path.join(outdir, 'fig')
        config.validate()
        return config

    def create_test_pipeline(self, config):
        return VerifyPipeline(None, config)

    def test_step_halfplane(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            success, _ = pipeline._VerifyPipeline__step_halfplane()

            self.assertTrue(success)
            self.assertEqual([r['check'] for r in pipeline.rows], ['sandwich', 'axis_distance_quarter'])
            self.assertEqual(pipeline.rows[0]['samples'], 200)

    def test_step_riera_limit(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            success, _ = pipeline._VerifyPipeline__step_riera_limit()
            self.assertTrue(success)

    def test_step_bounds(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            success, _ = pipeline._VerifyPipeline__step_bounds()

            self.assertTrue(success)
            self.assertTrue(all(r['passed'] for r in pipeline.rows))

    def test_step_decay(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            success, _ = pipeline._VerifyPipeline__step_decay()

            self.assertTrue(success)
            grid, onset = pipeline.rows
            self.assertTrue(grid['informational'])
            self.assertFalse(grid['passed'])
            self.assertTrue(onset['passed'])

            # Informational rows do not enter the verdict
            self.assertTrue(pipeline.verdict)

    def test_step_group_grid(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            success, _ = pipeline._VerifyPipeline__step_group_grid()

            self.assertTrue(success)
            self.assertEqual([r['check'] for r in pipeline.rows], ['relation_residual', 'pants_trace'])
            self.assertEqual(pipeline.rows[0]['samples'], 27 * 2)

    def test_step_systole_oracle(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            success, _ = pipeline._VerifyPipeline__step_systole_oracle()

            self.assertTrue(success)
            self.assertEqual(pipeline.rows[0]['check'], 'systole_oracle')
            self.assertLessEqual(pipeline.rows[0]['value'], 1e-7)

    def test_step_twist_invariance(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            success, _ = pipeline._VerifyPipeline__step_twist_invariance()

            self.assertTrue(success)
            self.assertEqual(pipeline.rows[0]['samples'], 2)

    def test_step_riera_samples(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            success, _ = pipeline._VerifyPipeline__step_riera_samples()

            self.assertTrue(success)
            self.assertEqual([r['check'] for r in pipeline.rows],
                             ['riera_positivity', 'riera_convergence', 'riera_monotone', 'lift_separation',
                              'gl_qi_stability'])

            # The samples feed the determinism rerun
            success, _ = pipeline._VerifyPipeline__step_determinism()
            self.assertTrue(success)
            self.assertEqual(pipeline.rows[-1]['check'], 'determinism')
            self.assertEqual(pipeline.rows[-1]['samples'], 1)

            pipeline.save()
            samples = read_csv(os.path.join(dir, 'verify-samples.csv'))
            self.assertEqual(len(samples), 2)
            self.assertTrue(all(samples['monotone']))
            self.assertTrue(all(samples['steps'] >= 2))

    def test_step_lipschitz(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            success, _ = pipeline._VerifyPipeline__step_lipschitz()

            self.assertTrue(success)
            self.assertEqual(pipeline.rows[0]['check'], 'lipschitz')
            self.assertEqual(pipeline.rows[0]['samples'], 1)

    def test_step_pinch_flow(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            pipeline._VerifyPipeline__step_pinch_flow()

            rows = {r['check']: r for r in pipeline.rows}
            self.assertEqual(set(rows), {'leaf_flow_length', 'flow_unit_speed', 'stratum_distance'})
            self.assertTrue(rows['leaf_flow_length']['passed'])
            self.assertTrue(rows['stratum_distance']['passed'])

    def test_step_determinism(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            success, _ = pipeline._VerifyPipeline__step_determinism()
            self.assertTrue(success)

    def test_save(self):
        with tempfile.TemporaryDirectory() as dir:
            pipeline = self.create_test_pipeline(self.get_test_config(dir))
            pipeline._VerifyPipeline__step_halfplane()
            pipeline._VerifyPipeline__step_riera_limit()
            pipeline.save()

            table = read_csv(os.path.join(dir, 'verify.csv'))
            self.assertEqual(len(table), 3)
            with open(os.path.join(dir, 'verify.json')) as f:
                doc = json.load(f)
            self.assertTrue(doc['verdict'])
            self.assertEqual(doc['metadata']['command'], 'verify')
