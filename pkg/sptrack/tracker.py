# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Marker tracking pipeline.

Initialization takes two clicked frames per camera. Every following frame
runs, for each marker::

    predict 3D -> project into each camera -> ROI -> superpixels
        -> features / normalize / select -> gate
        -> triangulate -> Kalman update            (every camera accepted)
        -> Kalman predict only (coasting)          (any camera rejected)

The 2D baseline replaces the 3D prediction by a per-camera constant
velocity estimate and never triangulates.
"""

import copy
import logging
import threading
import time
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
import numpy as np
from skimage import measure
from . import codec
from .config import Config
from .constants import (
    COASTING, DISTANCE_FEATURE, LOST, MODE_2D, MODE_3D, TRACKED
)
from .exceptions import (
    DegenerateGeometry, MissingClicksError,
    PointAtInfinity, SameSuperpixelError, SegmentationError, SequenceError
)
from .geometry import Point2, Point3, project, triangulate
from .imgproc import Roi, extract_roi, threshold_hue
from .kalman3d import ConstantVelocityFilter
from .matcher import (
    MarkerAppearance, feature_matrix, normalize, nslic, roi_count,
    score_gate, select
)
from .records import ClickRecord, TrajectoryRecord
from .slic import Segmentation, segment, superpixel_stats

log = logging.getLogger(__name__)

__all__ = ['TrackerConfig', 'MarkerTrack', 'MarkerRecord', 'Trajectory',
           'Clicks', 'StageTimer', 'Tracker', 'initialize', 'step', 'run',
           'run_2d_baseline']

#: Hue tolerance of the threshold segmenter.
THRESHOLD_HUE_TOL = 0.05
#: Minimal saturation of the threshold segmenter.
THRESHOLD_MIN_SATURATION = 0.3


class TrackerConfig(object):
    """Everything the pipeline needs besides frames, clicks and cameras.

    Build it from a :class:`~sptrack.config.Config` with
    :meth:`from_config`; the plain constructor uses the defaults.
    """

    def __init__(self, config=None, **overrides):
        self.config = config or Config()
        tracker = self.config.sections['tracker']
        self.markers = list(tracker.markers)
        self.roi = tuple(tracker.roi)
        self.init_padding = tracker.init_padding
        self.loss_threshold = tracker.loss_threshold
        self.max_residual = tracker.max_residual_px
        self.mode = tracker.mode
        self.segmenter = tracker.segmenter
        self.workers = tracker.workers
        self.frame_size = tuple(tracker.frame_size)
        self.init_count = self.config.sections['slic'].init_count
        self.weights = self.config.weights
        self.gate = self.config.gate
        self.kalman = self.config.kalman
        for key, value in overrides.items():
            if not hasattr(self, key):
                raise TypeError('Unknown tracker option %r' % key)
            setattr(self, key, value)
        if not self.markers:
            raise ValueError('At least one marker is needed')
        if min(self.roi) < 2 * self.gate.max_jump:
            log.warning('ROI %r is smaller than twice the largest accepted '
                        'jump (%g px)', self.roi, self.gate.max_jump)

    @classmethod
    def from_config(cls, config, **overrides):
        return cls(config, **overrides)

    @property
    def n_markers(self):
        return len(self.markers)

    def slic_params(self, n_superpixels):
        return self.config.slic_params(n_superpixels)

    def marker_count(self, name, marker_pixels):
        """Frame-level superpixel count of marker `name`."""
        override = self.config.marker_count(name)
        if override is not None:
            return override
        return nslic(max(int(round(marker_pixels)), 1), *self.frame_size)


class MarkerTrack(object):
    """Tracking state of one marker.

    Per-camera lists are indexed by camera position in the sequence, not by
    camera id.
    """

    def __init__(self, marker_id, name, n_cameras):
        self.marker_id = marker_id
        self.name = name
        self.kalman = None
        self.appearance_initial = [None] * n_cameras
        self.appearance_prev = [None] * n_cameras
        self.last_2d = [None] * n_cameras
        self.velocity_2d = [None] * n_cameras
        self.coasting_2d = [0] * n_cameras
        self.status = TRACKED
        self.count = None

    def __repr__(self):
        return '<MarkerTrack %d %s %s>' % (self.marker_id, self.name,
                                           self.status)


class MarkerRecord(object):
    """Result of one marker in one frame.

    :ivar points: 2D point per camera: the accepted detection, or the
                  projected prediction when that camera was rejected.
    :ivar accepted: Per camera gate decision.
    :ivar point3: Triangulated point when every camera accepted, else
                  :const:`None`.
    :ivar predicted3: Kalman position used for this frame (3D mode).
    """

    __slots__ = ('frame', 'marker', 'points', 'accepted', 'point3', 'score',
                 'status', 'predicted3')

    def __init__(self, frame, marker, points, accepted, point3=None,
                 score=None, status=TRACKED, predicted3=None):
        self.frame = frame
        self.marker = marker
        self.points = points
        self.accepted = accepted
        self.point3 = point3
        self.score = score
        self.status = status
        self.predicted3 = predicted3

    def to_record(self):
        values = dict(frame=self.frame, marker=self.marker,
                      score=self.score, status=self.status)
        for cam, point in enumerate(self.points[:2]):
            if point is not None:
                values['cam%d_u' % cam], values['cam%d_v' % cam] = point
        if self.point3 is not None:
            values['x'], values['y'], values['z'] = self.point3
        return TrajectoryRecord(**values)

    @classmethod
    def from_record(cls, record):
        points = []
        for cam in range(2):
            u = getattr(record, 'cam%d_u' % cam)
            v = getattr(record, 'cam%d_v' % cam)
            points.append(None if u is None or v is None else Point2(u, v))
        while len(points) > 1 and points[-1] is None:
            points.pop()
        point3 = None
        if record.x is not None:
            point3 = Point3(record.x, record.y, record.z)
        return cls(record.frame, record.marker, points,
                   [record.status == TRACKED] * len(points), point3,
                   record.score, record.status)

    def __repr__(self):
        return '<MarkerRecord %d %s %s %r>' % (self.frame, self.marker,
                                               self.status, self.points)


class Trajectory(object):
    """Per frame, per marker tracking results in frame-then-marker order."""

    def __init__(self, records=None):
        self.records = list(records or [])

    def append(self, record):
        self.records.append(record)

    def extend(self, records):
        self.records.extend(records)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def index(self):
        """Records keyed by ``(frame, marker)``."""
        return OrderedDict(((rec.frame, rec.marker), rec)
                           for rec in self.records)

    @property
    def frames(self):
        return sorted(set(rec.frame for rec in self.records))

    def dump(self, path):
        codec.dump(path, [rec.to_record() for rec in self.records],
                   TrajectoryRecord)

    @classmethod
    def load(cls, path):
        return cls(MarkerRecord.from_record(rec)
                   for rec in codec.load(path, TrajectoryRecord))


class Clicks(object):
    """Initialization clicks keyed by ``(frame, cam_id, marker_name)``."""

    def __init__(self, points=None):
        self.points = dict(points or {})

    @classmethod
    def load(cls, path):
        return cls(((rec.frame, rec.cam_id, rec.marker_name),
                    Point2(rec.u, rec.v))
                   for rec in codec.load(path, ClickRecord))

    def dump(self, path):
        records = [ClickRecord(frame, cam_id, name, point.u, point.v)
                   for (frame, cam_id, name), point
                   in sorted(self.points.items())]
        codec.dump(path, records, ClickRecord)

    def get(self, frame, cam_id, marker):
        try:
            return self.points[(frame, cam_id, marker)]
        except KeyError:
            raise MissingClicksError('no click for marker %r in camera %r, '
                                     'frame %d' % (marker, cam_id, frame))

    def check(self, cam_ids, markers):
        """Verifies that frames 0 and 1 are clicked for every camera and
        marker."""
        for frame in (0, 1):
            for cam_id in cam_ids:
                for marker in markers:
                    self.get(frame, cam_id, marker)


class StageTimer(object):
    """Wall time accumulated per pipeline stage."""

    STAGES = ('segmentation', 'matching', 'geometry', 'filtering')

    def __init__(self):
        self.totals = OrderedDict((name, 0.0) for name in self.STAGES)
        self.frames = 0
        self.wall = 0.0
        self._lock = threading.Lock()

    @contextmanager
    def stage(self, name):
        start = time.perf_counter()
        try:
            yield
        finally:
            elapsed = time.perf_counter() - start
            with self._lock:
                self.totals[name] = self.totals.get(name, 0.0) + elapsed

    def format(self):
        """Plain text stage table."""
        lines = ['%-14s %10s %8s' % ('stage', 'seconds', 'share'),
                 '-' * 34]
        busy = sum(self.totals.values()) or 1.0
        for name, seconds in self.totals.items():
            lines.append('%-14s %10.3f %7.1f%%'
                         % (name, seconds, 100.0 * seconds / busy))
        lines.append('-' * 34)
        lines.append('%-14s %10.3f' % ('wall', self.wall))
        lines.append('%-14s %10d' % ('frames', self.frames))
        if self.frames:
            lines.append('%-14s %10.3f' % ('per 1000 fr.',
                                           1000.0 * self.wall / self.frames))
        lines.append('camera calibration time excluded')
        return '\n'.join(lines)


class Match(object):
    """Best candidate of one marker in one camera."""

    __slots__ = ('superpixel', 'features', 'score', 'accepted', 'point')

    def __init__(self, superpixel, features, score, accepted):
        self.superpixel = superpixel
        self.features = features
        self.score = score
        self.accepted = accepted
        self.point = Point2(*superpixel.frame_centroid)


def _best_score(matches):
    scores = [match.score for match in matches if match is not None]
    return min(scores) if scores else None


def threshold_segment(image, hue):
    """Segments `image` into connected components of the pixels whose hue
    is close to `hue`, plus the rest as label 0."""
    mask = threshold_hue(image, hue, THRESHOLD_HUE_TOL,
                         THRESHOLD_MIN_SATURATION)
    components = measure.label(mask, connectivity=1, background=0)
    _, label_map = np.unique(components, return_inverse=True)
    segmentation = Segmentation(label_map.reshape(mask.shape), [])
    segmentation.superpixels = superpixel_stats(segmentation, image)
    return segmentation


class Tracker(object):
    """Pipeline state.

    :param cameras: :class:`~sptrack.geometry.CameraModel` per camera, in
                    sequence order. Only used in 3D mode.
    :param config: :class:`TrackerConfig`.
    """

    def __init__(self, cameras, config=None):
        self.config = config or TrackerConfig()
        self.cameras = list(cameras)
        self.filter = ConstantVelocityFilter(self.config.kalman)
        self.timer = StageTimer()
        self.tracks = []
        self.cam_ids = []
        self.frame_sizes = []

    @property
    def mode(self):
        return self.config.mode

    def _map(self, func, items):
        if self.config.workers > 1 and len(items) > 1:
            with ThreadPoolExecutor(max_workers=self.config.workers) as pool:
                return list(pool.map(func, items))
        return [func(item) for item in items]

    def initialize(self, frames_f0, frames_f1, clicks, cam_ids=None):
        """Starts tracking from two clicked frames per camera.

        :param frames_f0: Frame 0 of every camera.
        :param frames_f1: Frame 1 of every camera.
        :param clicks: :class:`Clicks` for frames 0 and 1.
        :param cam_ids: Camera ids used in `clicks`; defaults to the camera
                        models ids in 3D mode and to ``0..K-1`` otherwise.

        :return: Records of frames 0 and 1.
        :rtype: list of :class:`MarkerRecord`

        :raises:
            * :exc:`~sptrack.exceptions.MissingClicksError`
            * :exc:`ValueError` for clicks outside the frame.
            * :exc:`~sptrack.exceptions.SameSuperpixelError` when two
              markers fall into one superpixel.
            * :exc:`~sptrack.exceptions.DegenerateGeometry`
        """
        cfg = self.config
        n_cams = len(frames_f0)
        if len(frames_f1) != n_cams:
            raise SequenceError('frame 0 and frame 1 camera counts differ')
        if self.mode == MODE_3D and len(self.cameras) != n_cams:
            raise SequenceError('%d camera models for %d frame sources'
                                % (len(self.cameras), n_cams))
        if cam_ids is None:
            if self.mode == MODE_3D:
                cam_ids = [camera.cam_id for camera in self.cameras]
            else:
                cam_ids = list(range(n_cams))
        self.cam_ids = list(cam_ids)
        self.frame_sizes = [(frame.width, frame.height) for frame in frames_f0]
        clicks.check(self.cam_ids, cfg.markers)
        self.tracks = [MarkerTrack(idx, name, n_cams)
                       for idx, name in enumerate(cfg.markers)]
        pixels = [[] for _ in self.tracks]
        for cam, cam_id in enumerate(self.cam_ids):
            for n, frame in enumerate((frames_f0[cam], frames_f1[cam])):
                points = [clicks.get(n, cam_id, name) for name in cfg.markers]
                superpixels = self._clicked_superpixels(frame, points,
                                                        cam_id)
                for track, point, sp in zip(self.tracks, points, superpixels):
                    appearance = MarkerAppearance.of(sp)
                    if n == 0:
                        track.appearance_initial[cam] = appearance
                        pixels[track.marker_id].append(sp.pixel_count)
                    else:
                        track.appearance_prev[cam] = appearance
                    track.last_2d[cam] = point
        for track in self.tracks:
            marker_pixels = float(np.mean(pixels[track.marker_id]))
            track.count = cfg.marker_count(track.name, marker_pixels)
            log.debug('marker %s: %.0f px, %d superpixels per frame',
                      track.name, marker_pixels, track.count)

        records = []
        for n in (0, 1):
            for track in self.tracks:
                points = [clicks.get(n, cam_id, track.name)
                          for cam_id in self.cam_ids]
                point3 = None
                if self.mode == MODE_3D:
                    point3, residual = triangulate(list(zip(self.cameras,
                                                            points)))
                    log.debug('marker %s frame %d at %r (residual %.3g px)',
                              track.name, n, point3, residual)
                records.append(MarkerRecord(
                    frames_f0[0].index if n == 0 else frames_f1[0].index,
                    track.name, points, [True] * n_cams, point3, 0.0,
                    TRACKED, point3))
        for track in self.tracks:
            first, second = [rec for rec in records
                             if rec.marker == track.name]
            if self.mode == MODE_3D:
                track.kalman = self.filter.init(first.point3, second.point3)
            for cam in range(n_cams):
                track.velocity_2d[cam] = Point2(
                    second.points[cam].u - first.points[cam].u,
                    second.points[cam].v - first.points[cam].v)
        log.info('initialized %d markers in %d cameras (%s mode)',
                 len(self.tracks), n_cams, self.mode)
        return records

    def _clicked_superpixels(self, frame, points, cam_id):
        cfg = self.config
        for name, (u, v) in zip(cfg.markers, points):
            if not frame.contains(u, v):
                raise ValueError('click of marker %r at (%g, %g) is outside '
                                 'the %dx%d frame of camera %r'
                                 % (name, u, v, frame.width, frame.height,
                                    cam_id))
        roi = Roi.bounding(points, cfg.init_padding, frame.width,
                           frame.height)
        sub = frame.crop(roi)
        count = roi_count(cfg.init_count, roi.w, roi.h, *cfg.frame_size)
        with self.timer.stage('segmentation'):
            seg = segment(sub, cfg.slic_params(count))
        labels = [seg.label_at(u - roi.x0, v - roi.y0) for u, v in points]
        seen = {}
        for name, label in zip(cfg.markers, labels):
            if label in seen:
                raise SameSuperpixelError(
                    'markers %r and %r of camera %r fall into one superpixel;'
                    ' markers closer than about 10 px cannot be separated'
                    % (seen[label], name, cam_id))
            seen[label] = name
        return [seg.superpixels[label] for label in labels]

    def _segment(self, track, cam, sub):
        cfg = self.config
        if cfg.segmenter == 'threshold':
            return threshold_segment(sub, track.appearance_initial[cam].mean_h)
        count = roi_count(track.count, sub.width, sub.height,
                          *cfg.frame_size)
        return segment(sub, cfg.slic_params(count))

    def _detect(self, task):
        """Best candidate of one marker in one camera, or :const:`None`
        when the prediction leaves the frame or segmentation fails."""
        track, cam, frame, predicted = task
        cfg = self.config
        if predicted is None or not frame.contains(*predicted):
            log.warning('frame %d: prediction %r of marker %s is outside '
                        'camera %r', frame.index, predicted, track.name,
                        self.cam_ids[cam])
            return None
        _, sub = extract_roi(frame, predicted, *cfg.roi)
        try:
            with self.timer.stage('segmentation'):
                seg = self._segment(track, cam, sub)
        except SegmentationError as err:
            log.warning('frame %d: marker %s camera %r: %s', frame.index,
                        track.name, self.cam_ids[cam], err)
            return None
        with self.timer.stage('matching'):
            candidates = seg.superpixels
            raw = feature_matrix(candidates, track.appearance_initial[cam],
                                 track.appearance_prev[cam], predicted)
            labels = [sp.label for sp in candidates]
            best, score = select(normalize(raw), cfg.weights, raw, labels)
            accepted = score_gate(raw[best], cfg.gate)
        log.debug('frame %d: marker %s camera %r -> superpixel %d score '
                  '%.3f f=%s %s', frame.index, track.name, self.cam_ids[cam],
                  candidates[best].label, score, np.round(raw[best], 3),
                  'accepted' if accepted else 'rejected')
        return Match(candidates[best], raw[best], score, accepted)

    def _status(self, frames_since_update):
        if frames_since_update > self.config.loss_threshold:
            return LOST
        return COASTING

    def step(self, frames):
        """Tracks every marker in the next frame of every camera.

        :param frames: Frame per camera, all with the same index.
        :rtype: list of :class:`MarkerRecord`
        """
        if len(frames) != len(self.cam_ids):
            raise SequenceError('%d frames for %d cameras'
                                % (len(frames), len(self.cam_ids)))
        if self.mode == MODE_2D:
            return self._step_2d(frames)
        return self._step_3d(frames)

    def _step_3d(self, frames):
        n = frames[0].index
        predictions = []
        tasks = []
        for track in self.tracks:
            with self.timer.stage('filtering'):
                predicted3, state = self.filter.predict(track.kalman)
            points = []
            with self.timer.stage('geometry'):
                for camera in self.cameras:
                    try:
                        points.append(project(camera, predicted3))
                    except PointAtInfinity:
                        points.append(None)
            predictions.append((predicted3, state, points))
            tasks.extend((track, cam, frames[cam], points[cam])
                         for cam in range(len(frames)))
        matches = self._map(self._detect, tasks)
        records = []
        for idx, track in enumerate(self.tracks):
            predicted3, state, predicted2 = predictions[idx]
            found = matches[idx * len(frames):(idx + 1) * len(frames)]
            accepted = [match is not None and match.accepted
                        for match in found]
            points = [match.point if ok else predicted2[cam]
                      for cam, (match, ok) in enumerate(zip(found, accepted))]
            score = _best_score(found)
            point3 = None
            if all(accepted):
                try:
                    with self.timer.stage('geometry'):
                        point3, residual = triangulate(
                            list(zip(self.cameras, points)))
                except DegenerateGeometry as err:
                    log.warning('frame %d: marker %s: %s', n, track.name, err)
                if point3 is not None and residual > self.config.max_residual:
                    worst = max(range(len(found)),
                                key=lambda cam: found[cam].features[
                                    DISTANCE_FEATURE])
                    log.debug('frame %d: marker %s: residual %.3g px, '
                              'dropping camera %r', n, track.name, residual,
                              self.cam_ids[worst])
                    accepted[worst] = False
                    points[worst] = predicted2[worst]
                    point3 = None
            if point3 is not None:
                with self.timer.stage('filtering'):
                    track.kalman = self.filter.update(state, point3)
                track.status = TRACKED
                for cam, match in enumerate(found):
                    track.appearance_prev[cam] = \
                        MarkerAppearance.of(match.superpixel)
                    track.last_2d[cam] = match.point
            else:
                track.kalman = state
                status = self._status(state.frames_since_update)
                if status == LOST and track.status != LOST:
                    log.warning('frame %d: marker %s lost after %d frames '
                                'without detection', n, track.name,
                                state.frames_since_update)
                track.status = status
                for cam, point in enumerate(points):
                    if point is not None:
                        track.last_2d[cam] = point
            records.append(MarkerRecord(n, track.name, points, accepted,
                                        point3, score, track.status,
                                        predicted3))
        return records

    def _step_2d(self, frames):
        n = frames[0].index
        tasks = []
        predictions = []
        for track in self.tracks:
            points = []
            for cam in range(len(frames)):
                last, vel = track.last_2d[cam], track.velocity_2d[cam]
                points.append(Point2(last.u + vel.u, last.v + vel.v))
            predictions.append(points)
            tasks.extend((track, cam, frames[cam], points[cam])
                         for cam in range(len(frames)))
        matches = self._map(self._detect, tasks)
        records = []
        for idx, track in enumerate(self.tracks):
            predicted2 = predictions[idx]
            found = matches[idx * len(frames):(idx + 1) * len(frames)]
            points = []
            accepted = []
            for cam, match in enumerate(found):
                if match is not None and match.accepted:
                    last = track.last_2d[cam]
                    track.velocity_2d[cam] = Point2(match.point.u - last.u,
                                                    match.point.v - last.v)
                    track.last_2d[cam] = match.point
                    track.appearance_prev[cam] = \
                        MarkerAppearance.of(match.superpixel)
                    track.coasting_2d[cam] = 0
                    points.append(match.point)
                    accepted.append(True)
                else:
                    track.last_2d[cam] = predicted2[cam]
                    track.coasting_2d[cam] += 1
                    points.append(predicted2[cam])
                    accepted.append(False)
            if all(accepted):
                track.status = TRACKED
            else:
                track.status = self._status(max(track.coasting_2d))
            score = _best_score(found)
            records.append(MarkerRecord(n, track.name, points, accepted,
                                        None, score, track.status))
        return records

    def run(self, sequences, clicks, cam_ids=None):
        """Tracks whole sequences.

        :param sequences: Frame sequence per camera, indexable.
        :param clicks: :class:`Clicks`.

        :return: ``(trajectory, timer)``
        :rtype: tuple

        :raises: :exc:`~sptrack.exceptions.SequenceError` for sequences of
                 different length or shorter than two frames.
        """
        lengths = [len(seq) for seq in sequences]
        if not lengths:
            raise SequenceError('no frame sequences given')
        if len(set(lengths)) != 1:
            raise SequenceError('camera sequences differ in length: %r'
                                % lengths)
        if lengths[0] < 2:
            raise SequenceError('initialization needs 2 frames, got %d'
                                % lengths[0])
        start = time.perf_counter()
        trajectory = Trajectory()
        trajectory.extend(self.initialize([seq[0] for seq in sequences],
                                          [seq[1] for seq in sequences],
                                          clicks, cam_ids))
        for idx in range(2, lengths[0]):
            frames = [seq[idx] for seq in sequences]
            indices = set(frame.index for frame in frames)
            if len(indices) != 1:
                raise SequenceError('frame indices differ across cameras: %r'
                                    % sorted(indices))
            trajectory.extend(self.step(frames))
        self.timer.frames = lengths[0]
        self.timer.wall = time.perf_counter() - start
        statuses = [rec.status for rec in trajectory]
        log.info('tracked %d frames in %.1f s: %d tracked, %d coasting, '
                 '%d lost', lengths[0], self.timer.wall,
                 statuses.count(TRACKED), statuses.count(COASTING),
                 statuses.count(LOST))
        return trajectory, self.timer


def initialize(frames_f0, frames_f1, clicks, cameras, config=None):
    """Builds a :class:`Tracker` and initializes it from clicks.

    :return: ``(tracker, records)``
    :rtype: tuple
    """
    tracker = Tracker(cameras, config)
    records = tracker.initialize(frames_f0, frames_f1, clicks)
    return tracker, records


def step(tracker, frames):
    """Advances `tracker` by one frame; see :meth:`Tracker.step`."""
    return tracker.step(frames)


def run(sequences, clicks, cameras, config=None):
    """Tracks sequences in the configured mode.

    :return: ``(trajectory, timer)``
    """
    return Tracker(cameras, config).run(sequences, clicks)


def run_2d_baseline(sequences, clicks, config=None, cam_ids=None,
                    segmenter=None):
    """Tracks each camera independently with a 2D constant velocity
    prediction. One camera is enough.

    :param segmenter: ``'slic'`` or ``'threshold'``; defaults to the
                      configured one.

    :return: ``(trajectory, timer)``
    """
    config = copy.copy(config or TrackerConfig())
    config.mode = MODE_2D
    if segmenter is not None:
        config.segmenter = segmenter
    return Tracker([], config).run(sequences, clicks, cam_ids)
