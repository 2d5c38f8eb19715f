# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import io
import json
import os
import shutil
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
import numpy as np
from sptrack import cli, codec, geometry
from sptrack.records import (
    CameraRecord, ClickRecord, ObjectPointRecord, ObservationRecord,
    ReportRecord, TrajectoryRecord
)
from sptrack.tests.utils import TempDirMixIn, camera_pair

MARKERS = ('toe', 'ankle', 'knee', 'hip', 'asis')


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main([str(arg) for arg in argv])
    return code, out.getvalue(), err.getvalue()


def calibration_files(directory, n_points=27):
    points = [(x, y, z) for z in (-100.0, 0.0, 100.0)
              for x in (-150.0, 0.0, 150.0)
              for y in (-120.0, 0.0, 120.0)][:n_points]
    object_csv = os.path.join(directory, 'object.csv')
    observations_csv = os.path.join(directory, 'observations.csv')
    codec.dump(object_csv, [ObjectPointRecord(idx, *p)
                            for idx, p in enumerate(points)],
               ObjectPointRecord)
    observations = []
    for camera in camera_pair():
        for idx, p in enumerate(points):
            u, v = geometry.project(camera, p)
            observations.append(ObservationRecord(idx, camera.cam_id, u, v))
    codec.dump(observations_csv, observations, ObservationRecord)
    return object_csv, observations_csv


class ParserTestCase(unittest.TestCase):

    def test_version(self):
        out = io.StringIO()
        with redirect_stdout(out):
            self.assertRaises(SystemExit, cli.main, ['--version'])
        self.assertTrue(out.getvalue().startswith('sptrack '))

    def test_command_required(self):
        with redirect_stderr(io.StringIO()):
            self.assertRaises(SystemExit, cli.main, [])

    def test_exit_code_mapping(self):
        from sptrack import exceptions
        self.assertEqual(cli.exit_code(exceptions.CalibrationError('x')), 3)
        self.assertEqual(cli.exit_code(
            exceptions.UnderdeterminedError('x')), 3)
        self.assertEqual(cli.exit_code(exceptions.SequenceError('x')), 4)
        self.assertEqual(cli.exit_code(exceptions.CoverageError('x')), 4)
        self.assertEqual(cli.exit_code(exceptions.MissingClicksError('x')), 5)
        self.assertEqual(cli.exit_code(
            exceptions.SameSuperpixelError('x')), 5)
        self.assertEqual(cli.exit_code(exceptions.FormatError('x')), 2)
        self.assertEqual(cli.exit_code(exceptions.ConfigError('k', 'x')), 2)
        self.assertRaises(KeyError, cli.exit_code, KeyError('x'))


class CalibrateTestCase(TempDirMixIn, unittest.TestCase):

    def test_calibrate(self):
        object_csv, observations_csv = calibration_files(self.tmpdir)
        out_csv = self.path('cameras.csv')
        code, out, _ = run('calibrate', object_csv, observations_csv,
                           '--out', out_csv)
        self.assertEqual(code, 0)
        self.assertTrue('camera 0: 27 points' in out)
        self.assertTrue('calibration time' in out)
        models = cli.load_cameras(out_csv)
        self.assertEqual(list(models), [0, 1])
        for camera in camera_pair():
            np.testing.assert_allclose(models[camera.cam_id].coeffs,
                                       camera.coeffs, rtol=1e-6, atol=1e-9)

    def test_five_points(self):
        object_csv, observations_csv = calibration_files(self.tmpdir, 5)
        code, _, err = run('calibrate', object_csv, observations_csv,
                           '--out', self.path('cameras.csv'))
        self.assertEqual(code, 3)
        self.assertTrue('at least 6 points' in err)
        self.assertFalse(os.path.exists(self.path('cameras.csv')))

    def test_malformed_row(self):
        object_csv, observations_csv = calibration_files(self.tmpdir)
        with open(observations_csv, 'a') as fobj:
            fobj.write('3,0,12.5\n')
        code, _, err = run('calibrate', object_csv, observations_csv,
                           '--out', self.path('cameras.csv'))
        self.assertEqual(code, 2)
        self.assertTrue('line' in err)

    def test_unknown_ball(self):
        object_csv, observations_csv = calibration_files(self.tmpdir)
        with open(observations_csv, 'a') as fobj:
            fobj.write('99,0,12.5,13.5\n')
        code, _, _ = run('calibrate', object_csv, observations_csv,
                         '--out', self.path('cameras.csv'))
        self.assertEqual(code, 2)

    def test_missing_file(self):
        code, _, _ = run('calibrate', self.path('nope.csv'),
                         self.path('nope.csv'), '--out',
                         self.path('cameras.csv'))
        self.assertEqual(code, 2)


class PipelineTestCase(unittest.TestCase):
    """synth, track and eval on one small generated trial."""

    @classmethod
    def setUpClass(cls):
        cls.tmpdir = tempfile.mkdtemp(prefix='sptrack-cli-')
        cls.trial = os.path.join(cls.tmpdir, 'trial')
        cls.config = os.path.join(cls.tmpdir, 'config.json')
        with open(cls.config, 'w') as fobj:
            json.dump({'tracker': {'init_padding': 30},
                       'slic': {'init_count': 40000,
                                'count': dict((name, 3584)
                                              for name in MARKERS)}}, fobj)
        code, _, err = run('synth', '--out', cls.trial, '--frames', 6,
                           '--width', 320, '--height', 200, '--seed', 3)
        assert code == 0, err

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.tmpdir, ignore_errors=True)

    def path(self, *parts):
        return os.path.join(self.trial, *parts)

    def out(self, name):
        return os.path.join(self.tmpdir, name)

    def track(self, *extra, **kwargs):
        cam_dirs = kwargs.get('cam_dirs') or [self.path('cam0'),
                                              self.path('cam1')]
        clicks = kwargs.get('clicks') or self.path('clicks.csv')
        return run('--config', self.config, 'track', *(
            cam_dirs + ['--clicks', clicks] + list(extra)))

    def test_synth_tree(self):
        for name in ('truth.csv', 'clicks.csv', 'cameras.csv',
                     'calibration_object.csv',
                     'calibration_observations.csv', 'scenario.json'):
            self.assertTrue(os.path.exists(self.path(name)), name)
        self.assertEqual(sorted(os.listdir(self.path('cam1'))),
                         ['cam1_%06d.png' % n for n in range(6)])
        with open(self.path('scenario.json')) as fobj:
            self.assertEqual(json.load(fobj)['seed'], 3)

    def test_synth_calibration_files(self):
        out_csv = self.out('calibrated.csv')
        code, _, _ = run('calibrate', self.path('calibration_object.csv'),
                         self.path('calibration_observations.csv'),
                         '--out', out_csv)
        self.assertEqual(code, 0)
        calibrated = cli.load_cameras(out_csv)
        truth = cli.load_cameras(self.path('cameras.csv'))
        for cam_id in (0, 1):
            np.testing.assert_allclose(calibrated[cam_id].coeffs,
                                       truth[cam_id].coeffs, rtol=1e-6,
                                       atol=1e-9)

    def test_track_3d_and_eval(self):
        trajectory = self.out('trajectory3d.csv')
        code, out, err = self.track('--cameras', self.path('cameras.csv'),
                                    '--out', trajectory)
        self.assertEqual(code, 0, err)
        self.assertTrue('segmentation' in out)
        rows = codec.load(trajectory, TrajectoryRecord)
        self.assertEqual(len(rows), 30)
        self.assertEqual([(row.frame, row.marker) for row in rows[:5]],
                         [(0, name) for name in MARKERS])
        self.assertTrue(rows[0].x is not None)

        report = self.out('report.csv')
        code, out, err = run('eval', trajectory, self.path('truth.csv'),
                             '--out', report)
        self.assertEqual(code, 0, err)
        self.assertTrue('total' in out)
        rows = codec.load(report, ReportRecord)
        self.assertEqual(rows[-1].condition, 'total')
        self.assertEqual(rows[-1].markers, 30)

        code, _, err = run('eval', trajectory, self.path('truth.csv'),
                           '--tol-px', 0)
        self.assertEqual(code, 0, err)

    def test_track_2d(self):
        trajectory = self.out('trajectory2d.csv')
        code, _, err = self.track('--mode', '2d', '--out', trajectory)
        self.assertEqual(code, 0, err)
        rows = codec.load(trajectory, TrajectoryRecord)
        self.assertEqual(len(rows), 30)
        for row in rows:
            self.assertEqual((row.x, row.y, row.z), (None, None, None))
            self.assertTrue(row.cam0_u is not None)

    def test_track_3d_needs_cameras(self):
        code, _, err = self.track('--out', self.out('unused.csv'))
        self.assertEqual(code, 2)
        self.assertTrue('--cameras' in err)

    def test_missing_clicks(self):
        clicks = self.out('clicks-frame0.csv')
        codec.dump(clicks, [rec for rec in
                            codec.load(self.path('clicks.csv'), ClickRecord)
                            if rec.frame == 0], ClickRecord)
        code, _, err = self.track('--cameras', self.path('cameras.csv'),
                                  '--out', self.out('unused.csv'),
                                  clicks=clicks)
        self.assertEqual(code, 5)
        self.assertTrue('frame 1' in err)

    def test_length_mismatch(self):
        short = self.out('short-cam1')
        os.makedirs(short)
        for n in range(4):
            name = 'cam1_%06d.png' % n
            shutil.copy(self.path('cam1', name), os.path.join(short, name))
        code, _, _ = self.track('--cameras', self.path('cameras.csv'),
                                '--out', self.out('unused.csv'),
                                cam_dirs=[self.path('cam0'), short])
        self.assertEqual(code, 4)

    def test_eval_coverage_mismatch(self):
        trajectory = self.out('partial.csv')
        rows = [TrajectoryRecord(frame=0, marker='toe', status='tracked',
                                 cam0_u=1.0, cam0_v=1.0, cam1_u=1.0,
                                 cam1_v=1.0)]
        codec.dump(trajectory, rows, TrajectoryRecord)
        code, _, _ = run('eval', trajectory, self.path('truth.csv'))
        self.assertEqual(code, 4)

    def test_bad_scenario(self):
        scenario = self.out('bad-scenario.json')
        with open(scenario, 'w') as fobj:
            json.dump({'n_frames': 3, 'markers': [], 'wind': 1}, fobj)
        code, _, err = run('synth', scenario, '--out', self.out('bad'))
        self.assertEqual(code, 2)
        self.assertTrue('wind' in err)

    def test_bad_config(self):
        config = self.out('bad-config.json')
        with open(config, 'w') as fobj:
            json.dump({'tracker': {'moed': '2d'}}, fobj)
        code, _, err = run('--config', config, 'eval',
                           self.out('x.csv'), self.path('truth.csv'))
        self.assertEqual(code, 2)
        self.assertTrue('tracker.moed' in err)


if __name__ == '__main__':
    unittest.main()
