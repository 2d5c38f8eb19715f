# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Command line interface.

::

    sptrack calibrate OBJECT_CSV OBSERVATIONS_CSV --out cameras.csv
    sptrack synth [SCENARIO_JSON] --out DIR [--seed N] [--frames N]
    sptrack track CAM_DIR [CAM_DIR ...] --cameras cameras.csv \\
        --clicks clicks.csv --out trajectory.csv [--mode 3d|2d]
    sptrack eval TRAJECTORY_CSV TRUTH_CSV [--tol-px N] [--out report.csv]

Exit codes:

    ==  ====================================================
    0   success
    2   unreadable input, configuration or scenario
    3   degenerate or underdetermined camera geometry
    4   sequence length or evaluation coverage mismatch
    5   missing or unusable initialization clicks
    ==  ====================================================
"""

import argparse
import logging
import sys
import time
from collections import OrderedDict
from . import codec
from . import config as configlib
from .version import __version__
from .constants import (
    EXIT_CLICKS, EXIT_GEOMETRY, EXIT_MISMATCH, EXIT_OK, EXIT_PARSE, MODE_2D,
    MODE_3D
)
from .exceptions import (
    CalibrationError, ConfigError, CoverageError, FormatError,
    MissingClicksError, SameSuperpixelError, ScenarioError, SequenceError
)
from .geometry import CalibrationSet, CameraModel, calibrate
from .imgproc import FrameSequence
from .records import CameraRecord, ObjectPointRecord, ObservationRecord
from .synth import GroundTruth, Scenario, default_scenario, evaluate, \
    generate, write_trial
from .tracker import Clicks, Trajectory, Tracker, TrackerConfig

log = logging.getLogger(__name__)

__all__ = ['main', 'cmd_calibrate', 'cmd_synth', 'cmd_track', 'cmd_eval']

#: Exception classes and the exit code each one maps to, checked in order.
EXIT_CODES = (
    (MissingClicksError, EXIT_CLICKS),
    (SameSuperpixelError, EXIT_CLICKS),
    (CalibrationError, EXIT_GEOMETRY),
    (SequenceError, EXIT_MISMATCH),
    (CoverageError, EXIT_MISMATCH),
    (ConfigError, EXIT_PARSE),
    (FormatError, EXIT_PARSE),
    (ScenarioError, EXIT_PARSE),
    (ValueError, EXIT_PARSE),
    (OSError, EXIT_PARSE),
)


def load_cameras(path):
    """Reads ``cameras.csv`` into camera models keyed by camera id."""
    return OrderedDict((rec.cam_id, CameraModel(list(rec)[1:], rec.cam_id))
                       for rec in codec.load(path, CameraRecord))


def cmd_calibrate(args, config):
    """Calibrates every camera found in the observations file."""
    balls = dict((rec.ball_id, (rec.x, rec.y, rec.z))
                 for rec in codec.load(args.object_csv, ObjectPointRecord))
    pairs = OrderedDict()
    for rec in codec.load(args.observations_csv, ObservationRecord):
        if rec.ball_id not in balls:
            raise FormatError('ball %d is not in %s'
                              % (rec.ball_id, args.object_csv),
                              None, args.observations_csv)
        pairs.setdefault(rec.cam_id, []).append((balls[rec.ball_id],
                                                 (rec.u, rec.v)))
    if not pairs:
        raise FormatError('no observations', None, args.observations_csv)
    start = time.perf_counter()
    cameras = []
    for cam_id, items in sorted(pairs.items()):
        camera, report = calibrate(CalibrationSet(items, cam_id))
        cameras.append(camera)
        print('camera %d: %d points, rms %.3g px' % (cam_id, len(items),
                                                    report.rms))
    print('calibration time %.3f s' % (time.perf_counter() - start))
    codec.dump(args.out, [CameraRecord(camera.cam_id, *camera.coeffs.tolist())
                          for camera in cameras], CameraRecord)
    return EXIT_OK


def cmd_synth(args, config):
    """Generates a synthetic trial directory."""
    seed = config.get('synth.seed')
    if args.scenario:
        scenario = Scenario.load(args.scenario)
        if args.seed is not None:
            scenario.seed = seed
    else:
        scenario = default_scenario(args.frames, seed, args.width,
                                    args.height)
    trial = generate(scenario)
    write_trial(trial, args.out, args.workers)
    print('wrote %d frames x %d cameras, %d markers to %s'
          % (scenario.n_frames, len(trial.sequences),
             len(scenario.markers), args.out))
    return EXIT_OK


def cmd_track(args, config):
    """Tracks markers through the given camera directories."""
    tracker_config = TrackerConfig.from_config(config)
    sequences = [FrameSequence(directory, pattern=args.bayer)
                 for directory in args.cam_dirs]
    cam_ids = []
    for directory, sequence in zip(args.cam_dirs, sequences):
        if sequence.cam_id is None:
            raise SequenceError('no frames found in %s' % directory)
        cam_ids.append(sequence.cam_id)
    if len(set(cam_ids)) != len(cam_ids):
        raise SequenceError('camera ids repeat across directories: %r'
                            % cam_ids)
    cameras = []
    if tracker_config.mode == MODE_3D:
        if not args.cameras:
            raise ConfigError('--cameras', 'required in 3d mode')
        models = load_cameras(args.cameras)
        for cam_id in cam_ids:
            if cam_id not in models:
                raise FormatError('no model for camera %d' % cam_id,
                                  None, args.cameras)
            cameras.append(models[cam_id])
    clicks = Clicks.load(args.clicks)
    tracker = Tracker(cameras, tracker_config)
    trajectory, timer = tracker.run(sequences, clicks, cam_ids)
    trajectory.dump(args.out)
    print('wrote %d records to %s' % (len(trajectory), args.out))
    print(timer.format())
    return EXIT_OK


def cmd_eval(args, config):
    """Scores a trajectory against ground truth."""
    report = evaluate(Trajectory.load(args.trajectory),
                      GroundTruth.load(args.truth),
                      config.get('synth.tol_px'))
    print(report.format())
    if args.out:
        report.dump(args.out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog='sptrack',
        description='Superpixel marker tracking with two calibrated cameras.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('--config', metavar='PATH',
                        help='JSON configuration file')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='more log output, repeat for debug')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    sub = commands.add_parser('calibrate', help='compute DLT coefficients')
    sub.add_argument('object_csv')
    sub.add_argument('observations_csv')
    sub.add_argument('--out', required=True, metavar='PATH')
    sub.set_defaults(func=cmd_calibrate)

    sub = commands.add_parser('synth', help='generate a synthetic trial')
    sub.add_argument('scenario', nargs='?',
                     help='scenario JSON; the default scene otherwise')
    sub.add_argument('--out', required=True, metavar='DIR')
    sub.add_argument('--seed', type=int)
    sub.add_argument('--frames', type=int, default=200)
    sub.add_argument('--width', type=int, default=2048)
    sub.add_argument('--height', type=int, default=700)
    sub.add_argument('--workers', type=int, default=1)
    sub.set_defaults(func=cmd_synth)

    sub = commands.add_parser('track', help='track markers')
    sub.add_argument('cam_dirs', nargs='+', metavar='CAM_DIR')
    sub.add_argument('--cameras', metavar='PATH',
                     help='camera models, required in 3d mode')
    sub.add_argument('--clicks', required=True, metavar='PATH')
    sub.add_argument('--out', required=True, metavar='PATH')
    sub.add_argument('--mode', choices=(MODE_3D, MODE_2D))
    sub.add_argument('--bayer', metavar='PATTERN',
                     help='treat single plane frames as raw Bayer mosaics')
    sub.set_defaults(func=cmd_track)

    sub = commands.add_parser('eval', help='score a trajectory')
    sub.add_argument('trajectory')
    sub.add_argument('truth')
    sub.add_argument('--tol-px', type=float)
    sub.add_argument('--out', metavar='PATH')
    sub.set_defaults(func=cmd_eval)
    return parser


def load_config(args):
    config = configlib.load(args.config) if args.config else \
        configlib.Config()
    for flag, key in (('mode', 'tracker.mode'), ('tol_px', 'synth.tol_px'),
                      ('seed', 'synth.seed')):
        value = getattr(args, flag, None)
        if value is not None:
            config.set(key, value)
    return config


def exit_code(err):
    for klass, code in EXIT_CODES:
        if isinstance(err, klass):
            return code
    raise err


def main(argv=None):
    args = build_parser().parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose,
                                                              2)]
    logging.basicConfig(level=level,
                        format='%(asctime)s %(levelname)s %(name)s: '
                               '%(message)s')
    try:
        return args.func(args, load_config(args))
    except Exception as err:
        code = exit_code(err)
        log.debug('%s failed', args.command, exc_info=True)
        print('sptrack %s: error: %s' % (args.command, err), file=sys.stderr)
        return code
