# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import math
import unittest
import numpy as np
from sptrack import synth, tracker
from sptrack.config import Config
from sptrack.constants import (
    COASTING, LOST, MARKERS, MAX_DISPLACEMENT, MAX_RESIDUAL, MODE_2D,
    TRACKED
)
from sptrack.exceptions import (
    MissingClicksError, SameSuperpixelError, SequenceError
)
from sptrack.geometry import Point2, Point3, triangulate
from sptrack.kalman3d import KalmanState
from sptrack.synth import Event, Scenario, default_cameras
from sptrack.tracker import (
    Clicks, MarkerRecord, StageTimer, Trajectory, Tracker, TrackerConfig
)
from sptrack.tests.utils import TempDirMixIn, disc_frame, solid_frame

WIDTH, HEIGHT = 480, 280
#: Frame-level count giving 25 superpixels in a 100 x 100 ROI.
ROI_COUNT_25 = 3584


def tracking_config(names, **overrides):
    data = {'tracker': {'markers': list(names), 'init_padding': 30},
            'slic': {'init_count': 40000,
                     'count': dict((name, ROI_COUNT_25) for name in names)}}
    return TrackerConfig(Config(data), **overrides)


def small_trial(n_frames=20, names=None, events=(), seed=1):
    scene = synth.default_scenario(n_frames, seed, WIDTH, HEIGHT)
    markers = [marker for marker in scene.markers
               if names is None or marker.name in names]
    scenario = Scenario(n_frames, markers, default_cameras(WIDTH, HEIGHT),
                        WIDTH, HEIGHT, events, noise=2.0, seed=seed)
    return synth.generate(scenario)


def pixel_error(point, truth, record, cam):
    target = truth.point(record, cam)
    return math.hypot(point[0] - target.u, point[1] - target.v)


class TrackerConfigTestCase(unittest.TestCase):

    def test_defaults(self):
        cfg = TrackerConfig()
        self.assertEqual(cfg.n_markers, 5)
        self.assertEqual(cfg.roi, (100, 100))
        self.assertEqual(cfg.mode, '3d')
        self.assertEqual(cfg.gate.max_jump, 50.0)
        self.assertEqual(cfg.gate.max_jump, MAX_DISPLACEMENT)
        self.assertEqual(cfg.max_residual, MAX_RESIDUAL)

    def test_overrides(self):
        cfg = TrackerConfig(mode=MODE_2D, markers=['knee'])
        self.assertEqual(cfg.mode, MODE_2D)
        self.assertEqual(cfg.markers, ['knee'])

    def test_fail_unknown_override(self):
        self.assertRaises(TypeError, TrackerConfig, roi_size=(10, 10))

    def test_fail_no_markers(self):
        self.assertRaises(ValueError, TrackerConfig, markers=[])

    def test_marker_count(self):
        cfg = TrackerConfig(Config({'slic': {'count': {'knee': 7000}}}))
        self.assertEqual(cfg.marker_count('knee', 287), 7000)
        self.assertEqual(cfg.marker_count('toe', 287), 9990)


class RecordTestCase(TempDirMixIn, unittest.TestCase):

    def test_coasting_record_has_no_position(self):
        rec = MarkerRecord(5, 'knee', [Point2(1.0, 2.0), Point2(3.0, 4.0)],
                           [False, True], None, 0.4, COASTING)
        row = rec.to_record()
        self.assertEqual((row.x, row.y, row.z), (None, None, None))
        self.assertEqual((row.cam0_u, row.cam1_v), (1.0, 4.0))
        back = MarkerRecord.from_record(row)
        self.assertEqual(back.points, rec.points)
        self.assertEqual(back.status, COASTING)
        self.assertEqual(back.point3, None)

    def test_single_camera_record(self):
        rec = MarkerRecord(3, 'toe', [Point2(1.0, 2.0)], [True])
        row = rec.to_record()
        self.assertEqual(row.cam1_u, None)
        self.assertEqual(MarkerRecord.from_record(row).points,
                         [Point2(1.0, 2.0)])

    def test_trajectory_dump_load(self):
        path = self.path('trajectory.csv')
        trajectory = Trajectory([
            MarkerRecord(2, 'toe', [Point2(1.0, 2.0), Point2(3.0, 4.0)],
                         [True, True], Point3(1.0, 2.0, 3.0), 0.5),
            MarkerRecord(2, 'hip', [Point2(5.0, 6.0), Point2(7.0, 8.0)],
                         [False, False], None, 2.0, LOST)])
        trajectory.dump(path)
        back = Trajectory.load(path)
        self.assertEqual(len(back), 2)
        self.assertEqual(list(back.index()), [(2, 'toe'), (2, 'hip')])
        self.assertEqual(back.index()[(2, 'toe')].point3, (1.0, 2.0, 3.0))
        self.assertEqual(back.index()[(2, 'hip')].status, LOST)
        self.assertEqual(back.frames, [2])

    def test_clicks_dump_load(self):
        path = self.path('clicks.csv')
        clicks = Clicks({(0, 0, 'toe'): Point2(1.0, 2.0),
                         (1, 0, 'toe'): Point2(1.5, 2.5)})
        clicks.dump(path)
        self.assertEqual(Clicks.load(path).points, clicks.points)

    def test_clicks_check(self):
        clicks = Clicks({(0, 0, 'toe'): Point2(1.0, 2.0)})
        self.assertRaises(MissingClicksError, clicks.check, [0], ['toe'])


class StageTimerTestCase(unittest.TestCase):

    def test_format(self):
        timer = StageTimer()
        with timer.stage('matching'):
            pass
        timer.frames, timer.wall = 10, 2.0
        text = timer.format()
        for name in StageTimer.STAGES:
            self.assertTrue(name in text, name)
        self.assertTrue('camera calibration time excluded' in text)
        self.assertTrue('200.000' in text)


class InitializeTestCase(unittest.TestCase):

    def setUp(self):
        self.config = TrackerConfig(
            Config({'slic': {'init_count': 30}}), mode=MODE_2D,
            markers=['toe', 'ankle'])
        self.frame = solid_frame(200, 200)

    def clicks(self, toe, ankle, frames=(0, 1)):
        points = {}
        for n in frames:
            points[(n, 0, 'toe')] = Point2(*toe)
            points[(n, 0, 'ankle')] = Point2(*ankle)
        return Clicks(points)

    def test_fail_same_superpixel(self):
        self.assertRaises(SameSuperpixelError,
                          Tracker([], self.config).initialize,
                          [self.frame], [self.frame],
                          self.clicks((100, 100), (106, 100)))

    def test_fail_missing_clicks(self):
        self.assertRaises(MissingClicksError,
                          Tracker([], self.config).initialize,
                          [self.frame], [self.frame],
                          self.clicks((50, 50), (150, 150), frames=(0,)))

    def test_fail_click_outside_frame(self):
        self.assertRaises(ValueError, Tracker([], self.config).initialize,
                          [self.frame], [self.frame],
                          self.clicks((50, 50), (250, 150)))

    def test_fail_camera_count(self):
        config = tracking_config(['toe'])
        self.assertRaises(SequenceError, Tracker([], config).initialize,
                          [self.frame], [self.frame],
                          self.clicks((50, 50), (150, 150)))

    def test_separate_markers(self):
        frame0 = disc_frame(200, 200, [(60, 60), (140, 140)])
        frame1 = disc_frame(200, 200, [(60, 60), (140, 140)], index=1)
        config = TrackerConfig(
            Config({'slic': {'init_count': 20000}}), mode=MODE_2D,
            markers=['toe', 'ankle'])
        records = Tracker([], config).initialize(
            [frame0], [frame1], self.clicks((60, 60), (140, 140)))
        self.assertEqual([(rec.frame, rec.marker) for rec in records],
                         [(0, 'toe'), (0, 'ankle'), (1, 'toe'),
                          (1, 'ankle')])
        for rec in records:
            self.assertEqual(rec.status, TRACKED)
            self.assertEqual(rec.point3, None)


class RunTestCase(unittest.TestCase):

    def test_fail_length_mismatch(self):
        frames = [solid_frame(120, 120, index=n) for n in range(3)]
        self.assertRaises(SequenceError, Tracker([], TrackerConfig(
            mode=MODE_2D)).run, [frames, frames[:2]], Clicks())

    def test_fail_single_frame(self):
        frames = [solid_frame(120, 120)]
        self.assertRaises(SequenceError, Tracker([], TrackerConfig(
            mode=MODE_2D)).run, [frames], Clicks())

    def test_fail_index_mismatch(self):
        first = [solid_frame(120, 120, index=n) for n in range(3)]
        second = [solid_frame(120, 120, index=n) for n in (0, 1, 5)]
        clicks = Clicks(dict(((n, cam, 'knee'), Point2(60.0, 60.0))
                             for n in (0, 1) for cam in (0, 1)))
        config = TrackerConfig(Config({'slic': {'init_count': 30}}),
                               mode=MODE_2D, markers=['knee'])
        self.assertRaises(SequenceError, Tracker([], config).run,
                          [first, second], clicks)


class ThresholdSegmentTestCase(unittest.TestCase):

    def test_disc_and_rest(self):
        frame = disc_frame(60, 60, [(30, 30)])
        seg = tracker.threshold_segment(frame, 0.0)
        self.assertEqual(len(seg), 2)
        disc = seg.superpixels[seg.label_at(30, 30)]
        self.assertTrue(disc.mean_s > 0.7)
        self.assertEqual(seg.label_at(2, 2), 0)


class TrackingTestCase(unittest.TestCase):
    """Full pipeline runs on small synthetic trials."""

    @classmethod
    def setUpClass(cls):
        cls.trial = small_trial()
        cls.names = cls.trial.scenario.marker_names

    def test_3d(self):
        trial = self.trial
        trajectory, timer = tracker.run(trial.sequences, trial.clicks,
                                        trial.cameras,
                                        tracking_config(self.names))
        self.assertEqual(len(trajectory), 20 * 5)
        self.assertEqual(timer.frames, 20)
        self.assertTrue(timer.totals['segmentation'] > 0)
        report = synth.evaluate(trajectory, trial.truth)
        self.assertTrue(report.percentage() >= 90, report.format())
        tracked = [rec for rec in trajectory if rec.status == TRACKED]
        self.assertTrue(len(tracked) >= 90)
        for rec in tracked:
            self.assertTrue(rec.point3 is not None)
        truth = trial.truth.index()
        for rec in tracked[10:]:
            want = truth[(rec.frame, rec.marker)]
            self.assertTrue(math.sqrt((rec.point3.x - want.x) ** 2 +
                                      (rec.point3.y - want.y) ** 2 +
                                      (rec.point3.z - want.z) ** 2) < 10,
                            rec)

    def test_2d_baseline(self):
        trial = self.trial
        trajectory, _ = tracker.run_2d_baseline(
            trial.sequences, trial.clicks, tracking_config(self.names))
        for rec in trajectory:
            self.assertEqual(rec.point3, None)
            row = rec.to_record()
            self.assertEqual((row.x, row.y, row.z), (None, None, None))
        report = synth.evaluate(trajectory, trial.truth)
        self.assertTrue(report.percentage() >= 90, report.format())

    def test_2d_single_camera(self):
        trial = self.trial
        trajectory, _ = tracker.run_2d_baseline(
            [trial.sequences[0]], trial.clicks, tracking_config(self.names),
            cam_ids=[0])
        truth = trial.truth.index()
        errors = [pixel_error(rec.points[0], trial.truth,
                              truth[(rec.frame, rec.marker)], 0)
                  for rec in trajectory]
        self.assertEqual(len(errors), 100)
        self.assertTrue(sum(err <= 10 for err in errors) >= 90)
        for rec in trajectory:
            self.assertEqual(len(rec.points), 1)


class SingleMarkerTestCase(unittest.TestCase):

    def test_threshold_segmenter(self):
        trial = small_trial(12, ['knee'])
        trajectory, _ = tracker.run_2d_baseline(
            trial.sequences, trial.clicks, tracking_config(['knee']),
            segmenter='threshold')
        report = synth.evaluate(trajectory, trial.truth)
        self.assertTrue(report.percentage() >= 90, report.format())

    def test_workers_do_not_change_results(self):
        trial = small_trial(8, ['knee', 'hip'])
        results = []
        for workers in (1, 3):
            trajectory, _ = tracker.run(
                trial.sequences, trial.clicks, trial.cameras,
                tracking_config(['knee', 'hip'], workers=workers))
            results.append([rec.to_record() for rec in trajectory])
        self.assertEqual(results[0], results[1])

    def test_coasts_through_occlusion(self):
        event = Event('occlusion_full', 'knee', 8, 11, [0])
        trial = small_trial(20, ['knee'], [event])
        trajectory, _ = tracker.run(trial.sequences, trial.clicks,
                                    trial.cameras, tracking_config(['knee']))
        records = trajectory.index()
        truth = trial.truth.index()
        for n in range(8, 12):
            rec = records[(n, 'knee')]
            self.assertEqual(rec.status, COASTING, rec)
            self.assertEqual(rec.point3, None)
            self.assertEqual(rec.accepted[0], False)
            # the occluded view reports the projected prediction
            self.assertTrue(pixel_error(rec.points[0], trial.truth,
                                        truth[(n, 'knee')], 0) < 30)
        self.assertEqual(records[(14, 'knee')].status, TRACKED)
        report = synth.evaluate(trajectory, trial.truth)
        self.assertEqual(report.row('occluded').markers, 4)
        self.assertEqual(report.reacquisition_rate, 1.0)

    def test_lost_after_threshold(self):
        event = Event('occlusion_full', 'knee', 6, 10)
        trial = small_trial(16, ['knee'], [event])
        trajectory, _ = tracker.run(
            trial.sequences, trial.clicks, trial.cameras,
            tracking_config(['knee'], loss_threshold=2))
        statuses = [rec.status for rec in trajectory]
        self.assertEqual(statuses[6:11], [COASTING, COASTING, LOST, LOST,
                                          LOST])
        self.assertEqual(statuses[13], TRACKED)

    def test_coasting_follows_kalman_extrapolation(self):
        event = Event('occlusion_full', 'knee', 8, 11, [0])
        trial = small_trial(20, ['knee'], [event])
        sequences = trial.sequences
        tracking = Tracker(trial.cameras, tracking_config(['knee']))
        tracking.initialize([seq[0] for seq in sequences],
                            [seq[1] for seq in sequences], trial.clicks)
        for n in range(2, 8):
            rec, = tracking.step([seq[n] for seq in sequences])
        self.assertEqual(rec.status, TRACKED, rec)
        state = tracking.tracks[0].kalman
        expected = state
        for k, n in enumerate(range(8, 12), 1):
            rec, = tracking.step([seq[n] for seq in sequences])
            self.assertEqual(rec.status, COASTING, rec)
            position, expected = tracking.filter.predict(expected)
            self.assertEqual(rec.predicted3, position)
            np.testing.assert_allclose(
                rec.predicted3, state.mean[:3] + k * state.mean[3:],
                atol=1e-9)

    def test_prediction_outside_frame(self):
        trial = small_trial(4, ['knee'])
        sequences = trial.sequences
        tracking = Tracker(trial.cameras, tracking_config(['knee']))
        tracking.initialize([seq[0] for seq in sequences],
                            [seq[1] for seq in sequences], trial.clicks)
        state = tracking.tracks[0].kalman
        mean = state.mean.copy()
        mean[0] += 2000.0
        tracking.tracks[0].kalman = KalmanState(mean, state.covariance)
        rec, = tracking.step([seq[2] for seq in sequences])
        self.assertEqual(rec.status, COASTING)
        self.assertEqual(rec.accepted, [False, False])
        self.assertEqual(rec.point3, None)
        for point, frame in zip(rec.points, [seq[2] for seq in sequences]):
            self.assertFalse(frame.contains(*point))

    def test_inconsistent_views_coast(self):
        trial = small_trial(8, ['knee'])
        trajectory, _ = tracker.run(
            trial.sequences, trial.clicks, trial.cameras,
            tracking_config(['knee'], max_residual=1e-6))
        for rec in list(trajectory)[2:]:
            self.assertNotEqual(rec.status, TRACKED, rec)
            self.assertEqual(rec.point3, None)
            self.assertTrue(sum(rec.accepted) <= 1, rec)


class OcclusionTrialTestCase(unittest.TestCase):
    """Five marker trial with full occlusions in one camera."""

    @classmethod
    def setUpClass(cls):
        cls.trial = synth.generate(
            synth.occlusion_scenario(40, 1, 640, 320, n_events=2))
        config = tracking_config(MARKERS)
        cls.trajectory, _ = tracker.run(cls.trial.sequences,
                                        cls.trial.clicks, cls.trial.cameras,
                                        config)
        cls.baseline, _ = tracker.run_2d_baseline(cls.trial.sequences,
                                                  cls.trial.clicks, config)

    def test_tracked_views_agree(self):
        for rec in self.trajectory:
            if rec.status != TRACKED:
                continue
            _, residual = triangulate(list(zip(self.trial.cameras,
                                               rec.points)))
            self.assertTrue(residual <= MAX_RESIDUAL, rec)

    def test_hidden_view_not_tracked_on_neighbour(self):
        truth = self.trial.truth.index()
        for rec in self.trajectory:
            if rec.status != TRACKED:
                continue
            want = truth[(rec.frame, rec.marker)]
            for cam in (0, 1):
                if not self.trial.truth.visible(want, cam):
                    continue
                self.assertTrue(pixel_error(rec.points[cam], self.trial.truth,
                                            want, cam) < 20, rec)

    def test_3d_not_worse_than_2d(self):
        report = synth.evaluate(self.trajectory, self.trial.truth)
        baseline = synth.evaluate(self.baseline, self.trial.truth)
        self.assertTrue(report.percentage() >= baseline.percentage(),
                        '%s\n%s' % (report.format(), baseline.format()))
        self.assertTrue(report.reacquisition_rate >= 0.8, report.format())


if __name__ == '__main__':
    unittest.main()
