# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Synthetic two-camera marker scenes and tracking evaluation.

A scenario file is JSON::

    {
        "n_frames": 200, "width": 2048, "height": 700,
        "seed": 42, "noise": 2.0, "background": [90, 90, 90],
        "cameras": [
            {"position": [-300, -1000, 0], "target": [0, 0, 0],
             "focal": 1000},
            {"coeffs": [L1, ..., L11]}
        ],
        "markers": [
            {"name": "toe", "radius": 6, "color": [220, 40, 40],
             "motion": "gait", "start": [-200, 0, -120],
             "velocity": [2, 0, 0], "amplitude": 12, "period": 40,
             "phase": 0.0}
        ],
        "events": [
            {"type": "occlusion_full", "marker": "knee",
             "start": 50, "end": 57, "cameras": [0]}
        ]
    }

Every key except ``n_frames`` and ``markers`` is optional. Events name their
marker by name or index and span frames ``start..end`` inclusive; without
``cameras`` they hit both views.

Frames are rendered on demand, so a long full-size trial never sits in
memory as a whole.
"""

import json
import logging
import math
import os
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
import numpy as np
from . import codec
from .constants import (
    BAD_MARKER, CONDITIONS, CONDITION_PRECEDENCE, EVENTS,
    EVENT_BAD_MARKER, EVENT_MISSING_START, EVENT_OCCLUSION_FULL,
    EVENT_OCCLUSION_PARTIAL, MARKERS, MISSING_START, OCCLUDED,
    PARTIALLY_OCCLUDED, PERFECT, REFERENCE_2D, REFERENCE_3D, REFERENCE_FRAME,
    REFERENCE_THRE_2D, REFERENCE_TIME, TRACKED
)
from .exceptions import CoverageError, ScenarioError
from .geometry import (
    CameraModel, Point2, Point3, camera_from_pinhole, project
)
from .imgproc import Frame, frame_name, write_frame
from .records import (
    CameraRecord, ObjectPointRecord, ObservationRecord, ReportRecord,
    TruthRecord
)
from .tracker import Clicks

log = logging.getLogger(__name__)

__all__ = ['MarkerSpec', 'Event', 'Scenario', 'GroundTruth',
           'RenderedSequence', 'SyntheticTrial', 'EvaluationReport',
           'default_cameras', 'default_scenario', 'occlusion_scenario',
           'build_truth', 'clicks_from_truth', 'draw_disc', 'render_frame',
           'generate', 'write_trial',
           'calibration_object', 'evaluate']

#: Default marker colors, saturated and far apart in hue.
MARKER_COLORS = OrderedDict([
    ('toe', (220, 40, 40)),
    ('ankle', (40, 190, 60)),
    ('knee', (50, 90, 230)),
    ('hip', (230, 200, 40)),
    ('asis', (200, 50, 200)),
])
BACKGROUND = (90, 90, 90)
#: Color of partial occluders.
OCCLUDER = (150, 150, 150)
#: Sub-samples per pixel side used for anti-aliasing.
SUPERSAMPLE = 4
#: Contrast and size left to a poorly painted marker.
BAD_CONTRAST = 0.45
BAD_SIZE = 0.75
#: Occluder radius relative to the marker radius.
FULL_OCCLUDER_SIZE = 1.6
#: Coasted points within this many marker radii of truth count as correct.
COAST_RADII = 5.0
#: Frames after reappearance within which a marker must be re-acquired.
REACQUIRE_FRAMES = 3
#: Distance accepted as re-acquired, pixels.
REACQUIRE_TOL = 10.0

MOTIONS = ('constant', 'gait')


def _vector(value, size, name):
    try:
        vector = tuple(float(item) for item in value)
    except TypeError:
        raise ScenarioError('%s should be a list of %d numbers, got %r'
                            % (name, size, value))
    if len(vector) != size or not all(map(math.isfinite, vector)):
        raise ScenarioError('%s should be a list of %d finite numbers, '
                            'got %r' % (name, size, value))
    return vector


def _color(value, name):
    color = _vector(value, 3, name)
    if not all(0 <= item <= 255 for item in color):
        raise ScenarioError('%s values should be in [0, 255], got %r'
                            % (name, value))
    return color


class MarkerSpec(object):
    """One painted marker and its object space trajectory.

    :param motion: ``'constant'`` velocity or ``'gait'``: constant velocity
                   plus a vertical sinusoid of `amplitude` and `period`
                   frames.
    """

    def __init__(self, name, radius, color, start, velocity=(0, 0, 0),
                 motion='constant', amplitude=0.0, period=40.0, phase=0.0):
        if motion not in MOTIONS:
            raise ScenarioError('marker %r: unknown motion %r, expected one '
                                'of %r' % (name, motion, MOTIONS))
        if not radius > 0:
            raise ScenarioError('marker %r: radius should be positive'
                                % name)
        if not period > 0:
            raise ScenarioError('marker %r: period should be positive'
                                % name)
        self.name = name
        self.radius = float(radius)
        self.color = _color(color, 'marker %r color' % name)
        self.start = _vector(start, 3, 'marker %r start' % name)
        self.velocity = _vector(velocity, 3, 'marker %r velocity' % name)
        self.motion = motion
        self.amplitude = float(amplitude)
        self.period = float(period)
        self.phase = float(phase)

    def position(self, n):
        """True object point at frame `n`."""
        x, y, z = [s + v * n for s, v in zip(self.start, self.velocity)]
        if self.motion == 'gait':
            z += self.amplitude * math.sin(2 * math.pi * n / self.period +
                                           self.phase)
        return Point3(x, y, z)

    def to_dict(self):
        return OrderedDict([
            ('name', self.name), ('radius', self.radius),
            ('color', list(self.color)), ('motion', self.motion),
            ('start', list(self.start)), ('velocity', list(self.velocity)),
            ('amplitude', self.amplitude), ('period', self.period),
            ('phase', self.phase)])


class Event(object):
    """Difficulty event of one marker over frames ``start..end``."""

    def __init__(self, kind, marker, start, end, cameras=None):
        if kind not in EVENTS:
            raise ScenarioError('unknown event type %r, expected one of %r'
                                % (kind, EVENTS))
        self.kind = kind
        self.marker = marker
        self.start = int(start)
        self.end = int(end)
        self.cameras = None if cameras is None else tuple(cameras)

    def active(self, n, cam=None):
        if not self.start <= n <= self.end:
            return False
        return cam is None or self.cameras is None or cam in self.cameras

    def to_dict(self):
        data = OrderedDict([('type', self.kind), ('marker', self.marker),
                            ('start', self.start), ('end', self.end)])
        if self.cameras is not None:
            data['cameras'] = list(self.cameras)
        return data

    def __repr__(self):
        return '<Event %s %s %d..%d cams=%r>' % (
            self.kind, self.marker, self.start, self.end, self.cameras)


class Scenario(object):
    """Synthetic trial description.

    :raises: :exc:`~sptrack.exceptions.ScenarioError` for events that name
             unknown markers, frames or cameras. Markers leaving a view are
             caught later, by :func:`build_truth`.
    """

    def __init__(self, n_frames, markers, cameras=None,
                 width=REFERENCE_FRAME[0], height=REFERENCE_FRAME[1],
                 events=(), noise=2.0, seed=0, background=BACKGROUND):
        if n_frames < 2:
            raise ScenarioError('at least 2 frames are needed, got %r'
                                % n_frames)
        if width < 1 or height < 1:
            raise ScenarioError('frame size should be positive, got %rx%r'
                                % (width, height))
        if noise < 0:
            raise ScenarioError('noise should be non-negative')
        self.n_frames = int(n_frames)
        self.width = int(width)
        self.height = int(height)
        self.markers = list(markers)
        if not self.markers:
            raise ScenarioError('at least one marker is needed')
        names = [marker.name for marker in self.markers]
        if len(set(names)) != len(names):
            raise ScenarioError('marker names should be unique, got %r'
                                % names)
        self.cameras = list(cameras or default_cameras(self.width,
                                                       self.height))
        if len(self.cameras) != 2:
            raise ScenarioError('a camera pair is needed, got %d cameras'
                                % len(self.cameras))
        for cam_id, camera in enumerate(self.cameras):
            camera.cam_id = cam_id
        self.events = [self._resolve(event) for event in events]
        self.noise = float(noise)
        self.seed = int(seed)
        self.background = _color(background, 'background')

    def _resolve(self, event):
        names = [marker.name for marker in self.markers]
        marker = event.marker
        if isinstance(marker, int) and not isinstance(marker, bool):
            if not 0 <= marker < len(names):
                raise ScenarioError('%r: no marker #%d' % (event, marker))
            event.marker = names[marker]
        elif marker not in names:
            raise ScenarioError('%r: unknown marker, expected one of %r'
                                % (event, names))
        if not 0 <= event.start <= event.end < self.n_frames:
            raise ScenarioError('%r: frames outside 0..%d'
                                % (event, self.n_frames - 1))
        if event.cameras is not None and \
                not set(event.cameras) <= set(range(len(self.cameras))):
            raise ScenarioError('%r: unknown camera' % event)
        if event.kind == EVENT_MISSING_START and event.start != 0:
            raise ScenarioError('%r: missing start events begin at frame 0'
                                % event)
        return event

    @property
    def marker_names(self):
        return [marker.name for marker in self.markers]

    def events_of(self, name, n, cam=None):
        return [event for event in self.events
                if event.marker == name and event.active(n, cam)]

    def hidden(self, name, n, cam):
        """Checks whether an event takes marker `name` out of camera `cam`
        at frame `n`."""
        return any(event.kind in (EVENT_OCCLUSION_FULL, EVENT_MISSING_START)
                   for event in self.events_of(name, n, cam))

    def condition(self, name, n):
        kinds = set(event.kind for event in self.events_of(name, n))
        present = set()
        if EVENT_MISSING_START in kinds:
            present.add(MISSING_START)
        if EVENT_OCCLUSION_FULL in kinds:
            present.add(OCCLUDED)
        if EVENT_OCCLUSION_PARTIAL in kinds:
            present.add(PARTIALLY_OCCLUDED)
        if EVENT_BAD_MARKER in kinds:
            present.add(BAD_MARKER)
        for condition in CONDITION_PRECEDENCE:
            if condition in present:
                return condition
        return PERFECT

    @classmethod
    def from_dict(cls, data):
        if not isinstance(data, dict):
            raise ScenarioError('JSON object expected')
        known = set(['n_frames', 'width', 'height', 'seed', 'noise',
                     'background', 'cameras', 'markers', 'events'])
        unknown = sorted(set(data) - known)
        if unknown:
            raise ScenarioError('unknown scenario keys %r' % unknown)
        try:
            markers = [MarkerSpec(**item) for item in data['markers']]
            events = [Event(item.pop('type'), **item)
                      for item in [dict(e) for e in data.get('events', ())]]
            cameras = None
            if 'cameras' in data:
                cameras = [_camera_from_dict(
                    item, idx, data.get('width', REFERENCE_FRAME[0]),
                    data.get('height', REFERENCE_FRAME[1]))
                    for idx, item in enumerate(data['cameras'])]
            return cls(data['n_frames'], markers, cameras,
                       data.get('width', REFERENCE_FRAME[0]),
                       data.get('height', REFERENCE_FRAME[1]),
                       events, data.get('noise', 2.0), data.get('seed', 0),
                       data.get('background', BACKGROUND))
        except KeyError as err:
            raise ScenarioError('missing scenario key %s' % err)
        except (TypeError, ValueError) as err:
            raise ScenarioError(str(err))

    @classmethod
    def load(cls, path):
        with open(path, 'r') as fobj:
            try:
                data = json.load(fobj)
            except ValueError as err:
                raise ScenarioError('%s: invalid JSON: %s' % (path, err))
        return cls.from_dict(data)

    def to_dict(self):
        return OrderedDict([
            ('n_frames', self.n_frames), ('width', self.width),
            ('height', self.height), ('seed', self.seed),
            ('noise', self.noise), ('background', list(self.background)),
            ('cameras', [{'coeffs': camera.coeffs.tolist()}
                         for camera in self.cameras]),
            ('markers', [marker.to_dict() for marker in self.markers]),
            ('events', [event.to_dict() for event in self.events])])


def _camera_from_dict(data, cam_id, width, height):
    if 'coeffs' in data:
        return CameraModel(data['coeffs'], cam_id)
    return camera_from_pinhole(data['position'], data.get('target', (0, 0, 0)),
                               data.get('focal', 1000.0),
                               data.get('principal',
                                        ((width - 1) / 2.0,
                                         (height - 1) / 2.0)),
                               cam_id)


def default_cameras(width=REFERENCE_FRAME[0], height=REFERENCE_FRAME[1],
                    focal=1000.0, distance=1000.0, baseline=600.0):
    """Two pinhole cameras `baseline` apart, `distance` in front of the
    scene origin and looking at it, principal point at the frame center."""
    principal = ((width - 1) / 2.0, (height - 1) / 2.0)
    return [camera_from_pinhole((side * baseline / 2.0, -distance, 0.0),
                                (0.0, 0.0, 0.0), focal, principal, cam_id)
            for cam_id, side in enumerate((-1, 1))]


def default_scenario(n_frames=200, seed=0, width=REFERENCE_FRAME[0],
                     height=REFERENCE_FRAME[1], radius=6.0, noise=2.0,
                     events=()):
    """Five gait-like markers stacked toe to hip moving across both views.

    Spacing, travel and sway adapt to the frame size so that small test
    frames keep the markers apart and inside the views.
    """
    spacing = min(60.0, height / 7.0)
    travel = min(3.0 * n_frames, 0.4 * width)
    speed = travel / max(n_frames - 1, 1)
    amplitude = min(12.0, spacing / 4.0)
    markers = []
    for idx, name in enumerate(MARKERS):
        stagger = 15.0 if idx % 2 else -15.0
        markers.append(MarkerSpec(
            name, radius, MARKER_COLORS[name],
            start=(-travel / 2.0 + stagger, 0.0, (idx - 2) * spacing),
            velocity=(speed, 0.0, 0.0), motion='gait', amplitude=amplitude,
            period=40.0, phase=0.6 * idx))
    return Scenario(n_frames, markers, default_cameras(width, height),
                    width, height, events, noise, seed)


def occlusion_scenario(n_frames=60, seed=0, width=REFERENCE_FRAME[0],
                       height=REFERENCE_FRAME[1], n_events=2):
    """:func:`default_scenario` with `n_events` seeded full occlusions of
    5 to 10 frames, each in one camera."""
    rng = np.random.default_rng(seed)
    events = []
    names = list(MARKERS)
    for idx in range(n_events):
        length = int(rng.integers(5, 11))
        start = int(rng.integers(5, max(n_frames - length - 6, 6)))
        events.append(Event(EVENT_OCCLUSION_FULL,
                            names[int(rng.integers(len(names)))], start,
                            min(start + length - 1, n_frames - 1),
                            [int(rng.integers(2))]))
    return default_scenario(n_frames, seed, width, height, events=events)


class GroundTruth(object):
    """Per frame, per marker truth as :data:`~sptrack.records.TruthRecord`
    rows, in frame-then-marker order."""

    def __init__(self, records):
        self.records = list(records)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def index(self):
        return OrderedDict(((rec.frame, rec.marker), rec)
                           for rec in self.records)

    @property
    def frames(self):
        return sorted(set(rec.frame for rec in self.records))

    def point(self, record, cam):
        return Point2(getattr(record, 'cam%d_u' % cam),
                      getattr(record, 'cam%d_v' % cam))

    def visible(self, record, cam):
        return bool(getattr(record, 'cam%d_visible' % cam))

    def dump(self, path):
        codec.dump(path, self.records, TruthRecord)

    @classmethod
    def load(cls, path):
        return cls(codec.load(path, TruthRecord))


def _in_view(point, radius, width, height):
    u, v = point
    return radius <= u <= width - 1 - radius and \
        radius <= v <= height - 1 - radius


def build_truth(scenario):
    """Projects every marker of every frame into both cameras.

    :raises: :exc:`~sptrack.exceptions.ScenarioError` when a marker leaves
             a view and no event covers it.
    """
    records = []
    for n in range(scenario.n_frames):
        for marker in scenario.markers:
            p = marker.position(n)
            values = dict(frame=n, marker=marker.name, x=p.x, y=p.y, z=p.z,
                          condition=scenario.condition(marker.name, n),
                          radius=marker.radius)
            for cam, camera in enumerate(scenario.cameras):
                q = project(camera, p)
                hidden = scenario.hidden(marker.name, n, cam)
                if not hidden and not _in_view(q, marker.radius,
                                               scenario.width,
                                               scenario.height):
                    raise ScenarioError(
                        'marker %r leaves the view of camera %d at frame %d '
                        '(%.1f, %.1f) and no event declares it'
                        % (marker.name, cam, n, q.u, q.v))
                values['cam%d_u' % cam] = q.u
                values['cam%d_v' % cam] = q.v
                values['cam%d_visible' % cam] = int(not hidden)
            records.append(TruthRecord(**values))
    return GroundTruth(records)


def draw_disc(rgb, center, radius, color, supersample=SUPERSAMPLE):
    """Blends an anti-aliased disc into `rgb` in place. Pixel ``(row, col)``
    covers ``[col - 0.5, col + 0.5] x [row - 0.5, row + 0.5]``."""
    height, width = rgb.shape[:2]
    cu, cv = center
    x0 = max(int(math.floor(cu - radius)) - 1, 0)
    x1 = min(int(math.ceil(cu + radius)) + 2, width)
    y0 = max(int(math.floor(cv - radius)) - 1, 0)
    y1 = min(int(math.ceil(cv + radius)) + 2, height)
    if x0 >= x1 or y0 >= y1:
        return
    offsets = (np.arange(supersample) + 0.5) / supersample - 0.5
    dx2 = (np.arange(x0, x1)[:, None] + offsets[None, :] - cu) ** 2
    dy2 = (np.arange(y0, y1)[:, None] + offsets[None, :] - cv) ** 2
    inside = dy2[:, None, :, None] + dx2[None, :, None, :] <= radius ** 2
    coverage = inside.mean(axis=(2, 3))[..., None]
    patch = rgb[y0:y1, x0:x1]
    patch += coverage * (np.asarray(color, dtype=np.float64) - patch)


def render_frame(scenario, truth, cam, n):
    """Renders frame `n` of camera `cam`.

    :param truth: Index of :meth:`GroundTruth.index`.
    :rtype: :class:`~sptrack.imgproc.Frame`
    """
    rgb = np.empty((scenario.height, scenario.width, 3))
    rgb[...] = scenario.background
    occluders = []
    for marker in scenario.markers:
        record = truth[(n, marker.name)]
        center = (getattr(record, 'cam%d_u' % cam),
                  getattr(record, 'cam%d_v' % cam))
        kinds = set(event.kind
                    for event in scenario.events_of(marker.name, n, cam))
        if EVENT_MISSING_START in kinds:
            continue
        color = np.array(marker.color)
        radius = marker.radius
        if EVENT_BAD_MARKER in kinds:
            color = scenario.background + \
                BAD_CONTRAST * (color - scenario.background)
            radius *= BAD_SIZE
        draw_disc(rgb, center, radius, color)
        if EVENT_OCCLUSION_FULL in kinds:
            occluders.append((center, FULL_OCCLUDER_SIZE * marker.radius,
                              scenario.background))
        elif EVENT_OCCLUSION_PARTIAL in kinds:
            occluders.append(((center[0] + marker.radius, center[1]),
                              marker.radius, OCCLUDER))
    for center, radius, color in occluders:
        draw_disc(rgb, center, radius, color)
    if scenario.noise > 0:
        rng = np.random.default_rng([scenario.seed, cam, n])
        rgb += rng.normal(0.0, scenario.noise, rgb.shape)
    return Frame(np.clip(rgb, 0, 255), n)


class RenderedSequence(object):
    """Lazily rendered frames of one camera."""

    def __init__(self, scenario, truth, cam):
        self.scenario = scenario
        self.cam = cam
        self._truth = truth.index()

    def __len__(self):
        return self.scenario.n_frames

    def __getitem__(self, n):
        if n < 0:
            n += len(self)
        if not 0 <= n < len(self):
            raise IndexError('frame %d out of range' % n)
        return render_frame(self.scenario, self._truth, self.cam, n)

    def __iter__(self):
        for n in range(len(self)):
            yield self[n]


class SyntheticTrial(object):
    """Generated trial: frame sequences, truth, clicks and cameras."""

    def __init__(self, scenario, sequences, truth, clicks):
        self.scenario = scenario
        self.sequences = sequences
        self.truth = truth
        self.clicks = clicks

    @property
    def cameras(self):
        return self.scenario.cameras


def clicks_from_truth(truth):
    """Initialization clicks at the true centroids of frames 0 and 1."""
    points = {}
    for record in truth:
        if record.frame > 1:
            continue
        for cam in (0, 1):
            points[(record.frame, cam, record.marker)] = truth.point(record,
                                                                     cam)
    return Clicks(points)


def generate(scenario):
    """Builds truth, lazy frame sequences and clicks of `scenario`.

    Output is deterministic for a fixed scenario seed.

    :rtype: :class:`SyntheticTrial`
    :raises: :exc:`~sptrack.exceptions.ScenarioError`
    """
    truth = build_truth(scenario)
    sequences = [RenderedSequence(scenario, truth, cam)
                 for cam in range(len(scenario.cameras))]
    log.info('generated %d frames of %d markers, %d events (seed %d)',
             scenario.n_frames, len(scenario.markers), len(scenario.events),
             scenario.seed)
    return SyntheticTrial(scenario, sequences, truth,
                          clicks_from_truth(truth))


def calibration_object(size=200.0):
    """25 calibration balls: a 5 x 5 grid over ``x`` and ``z`` spread over
    three depths, with one corner ball at the origin."""
    steps = np.linspace(0.0, size, 5)
    points = []
    for i, z in enumerate(steps):
        for j, x in enumerate(steps):
            points.append(Point3(float(x), ((i * 5 + j) % 3) * size / 5.0,
                                 float(z)))
    return points


def write_trial(trial, directory, workers=1):
    """Writes `trial` as ``cam0/``, ``cam1/`` frame directories plus
    ``truth.csv``, ``clicks.csv``, ``cameras.csv``, ``scenario.json`` and
    the calibration object files.

    Frames are rendered with `workers` threads and written in index order.
    """
    scenario = trial.scenario
    for cam, sequence in enumerate(trial.sequences):
        cam_dir = os.path.join(directory, 'cam%d' % cam)
        if not os.path.isdir(cam_dir):
            os.makedirs(cam_dir)

        def write(n, cam=cam, cam_dir=cam_dir, sequence=sequence):
            write_frame(os.path.join(cam_dir, frame_name(cam, n)),
                        sequence[n])

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                list(pool.map(write, range(len(sequence))))
        else:
            for n in range(len(sequence)):
                write(n)
    trial.truth.dump(os.path.join(directory, 'truth.csv'))
    trial.clicks.dump(os.path.join(directory, 'clicks.csv'))
    codec.dump(os.path.join(directory, 'cameras.csv'),
               [CameraRecord(camera.cam_id, *camera.coeffs.tolist())
                for camera in scenario.cameras], CameraRecord)
    balls = calibration_object()
    codec.dump(os.path.join(directory, 'calibration_object.csv'),
               [ObjectPointRecord(idx, *p) for idx, p in enumerate(balls)],
               ObjectPointRecord)
    observations = []
    for camera in scenario.cameras:
        for idx, p in enumerate(balls):
            q = project(camera, p)
            observations.append(ObservationRecord(idx, camera.cam_id,
                                                  q.u, q.v))
    codec.dump(os.path.join(directory, 'calibration_observations.csv'),
               observations, ObservationRecord)
    with open(os.path.join(directory, 'scenario.json'), 'w') as fobj:
        json.dump(scenario.to_dict(), fobj, indent=2)
    log.info('wrote %d frames per camera to %s', scenario.n_frames,
             directory)


class EvaluationReport(object):
    """Per condition correctness.

    :ivar rows: :data:`~sptrack.records.ReportRecord` per condition plus
                ``total``; the total leaves out missing start marker-frames.
    :ivar reacquisitions: ``(marker, start, end, frame)`` per full
                          occlusion, `frame` being the first re-acquired
                          frame or :const:`None`.
    """

    def __init__(self, rows, reacquisitions, tol_px):
        self.rows = rows
        self.reacquisitions = reacquisitions
        self.tol_px = tol_px

    def row(self, condition):
        for row in self.rows:
            if row.condition == condition:
                return row
        raise KeyError(condition)

    def percentage(self, condition='total'):
        return self.row(condition).percentage

    @property
    def reacquisition_rate(self):
        if not self.reacquisitions:
            return None
        hits = sum(1 for item in self.reacquisitions if item[3] is not None)
        return float(hits) / len(self.reacquisitions)

    def dump(self, path):
        codec.dump(path, self.rows, ReportRecord)

    def format(self):
        def pct(value):
            return '%7.2f' % value if value is not None else '      -'
        lines = ['%-20s %8s %8s %8s %11s %11s %11s'
                 % ('condition', 'marker-fr', 'correct', 'percent',
                    'ref Thre+2D', 'ref SLIC+2D', 'ref SLIC+3D'),
                 '-' * 82]
        for row in self.rows:
            lines.append('%-20s %8d %8d %8s %11s %11s %11s'
                         % (row.condition, row.markers, row.correct,
                            pct(row.percentage), pct(row.reference_thre_2d),
                            pct(row.reference_2d), pct(row.reference_3d)))
        lines.append('-' * 82)
        lines.append('tolerance: %g px' % self.tol_px)
        rate = self.reacquisition_rate
        if rate is not None:
            lines.append('re-acquired within %d frames after full occlusion: '
                         '%d of %d (%.0f%%)'
                         % (REACQUIRE_FRAMES,
                            sum(1 for item in self.reacquisitions
                                if item[3] is not None),
                            len(self.reacquisitions), 100 * rate))
        lines.append('reference columns and the published %d +/- %d s per '
                     '1000 frames come from real rat recordings and are not '
                     'pass/fail targets' % REFERENCE_TIME)
        return '\n'.join(lines)


def _correct(record, truth_record, truth, tol_px):
    """Scores one marker-frame against truth in every camera."""
    for cam in (0, 1):
        target = truth.point(truth_record, cam)
        point = record.points[cam] if cam < len(record.points) else None
        if truth.visible(truth_record, cam):
            if point is None or \
                    math.hypot(point[0] - target.u, point[1] - target.v) \
                    > tol_px:
                return False
        else:
            if record.status == TRACKED:
                return False
            limit = COAST_RADII * truth_record.radius
            if point is not None and \
                    math.hypot(point[0] - target.u, point[1] - target.v) \
                    > limit:
                return False
    return True


def _reacquired(record, truth_record, truth):
    cams = [cam for cam in (0, 1) if truth.visible(truth_record, cam)]
    if not cams:
        return False
    for cam in cams:
        point = record.points[cam] if cam < len(record.points) else None
        target = truth.point(truth_record, cam)
        if point is None or math.hypot(point[0] - target.u,
                                       point[1] - target.v) > REACQUIRE_TOL:
            return False
    return True


def evaluate(trajectory, truth, tol_px=10.0):
    """Scores `trajectory` against `truth`.

    A marker-frame is correct when its 2D point lies within `tol_px` of
    truth in every camera that sees the marker, and in every camera that
    does not see it the track is coasting within five marker radii of truth.

    :param trajectory: :class:`~sptrack.tracker.Trajectory`.
    :param truth: :class:`GroundTruth`.

    :rtype: :class:`EvaluationReport`

    :raises: :exc:`~sptrack.exceptions.CoverageError` when trajectory and
             truth do not cover the same frames and markers.
    """
    if tol_px < 0:
        raise ValueError('Tolerance should be non-negative, got %r' % tol_px)
    found = trajectory.index()
    expected = truth.index()
    if set(found) != set(expected):
        missing = sorted(set(expected) - set(found))
        extra = sorted(set(found) - set(expected))
        raise CoverageError('trajectory covers %d marker-frames, truth %d; '
                            'missing %r, unexpected %r'
                            % (len(found), len(expected), missing[:5],
                               extra[:5]))
    counts = OrderedDict((condition, [set(), 0, 0])
                         for condition in CONDITIONS)
    correct = {}
    for key, truth_record in expected.items():
        ok = _correct(found[key], truth_record, truth, tol_px)
        correct[key] = ok
        bucket = counts[truth_record.condition]
        bucket[0].add(truth_record.frame)
        bucket[1] += 1
        bucket[2] += int(ok)

    rows = []
    total = [set(), 0, 0]
    for condition, (frames, markers, hits) in counts.items():
        rows.append(ReportRecord(
            condition, len(frames), markers, hits,
            100.0 * hits / markers if markers else None,
            REFERENCE_THRE_2D[condition], REFERENCE_2D[condition],
            REFERENCE_3D[condition]))
        if condition != MISSING_START:
            total[0] |= frames
            total[1] += markers
            total[2] += hits
    rows.append(ReportRecord(
        'total', len(total[0]), total[1], total[2],
        100.0 * total[2] / total[1] if total[1] else None,
        REFERENCE_THRE_2D['total'], REFERENCE_2D['total'],
        REFERENCE_3D['total']))

    reacquisitions = []
    n_frames = max(truth.frames) + 1
    for name, start, end in _full_occlusions(truth):
        reacquired = None
        for n in range(end + 1, min(end + 1 + REACQUIRE_FRAMES, n_frames)):
            if _reacquired(found[(n, name)], expected[(n, name)], truth):
                reacquired = n
                break
        reacquisitions.append((name, start, end, reacquired))
    report = EvaluationReport(rows, reacquisitions, tol_px)
    log.info('evaluated %d marker-frames: %.2f%% correct',
             len(expected), report.percentage() or 0.0)
    return report


def _full_occlusions(truth):
    """``(marker, first, last)`` of every run of occluded frames followed by
    an unoccluded one."""
    runs = []
    by_marker = OrderedDict()
    for record in truth:
        by_marker.setdefault(record.marker, []).append(record)
    for name, records in by_marker.items():
        start = None
        for record in sorted(records, key=lambda rec: rec.frame):
            if record.condition == OCCLUDED:
                if start is None:
                    start = record.frame
                end = record.frame
            elif start is not None:
                runs.append((name, start, end))
                start = None
    return runs
