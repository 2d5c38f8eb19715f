# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

from .version import __version__, __version_info__
from .exceptions import BaseTrackingError
from .codec import decode, decode_record, encode, encode_record
from .config import Config
from .geometry import (
    CameraModel, CalibrationSet, calibrate, project, triangulate
)
from .imgproc import Frame, FrameSequence, Roi, extract_roi
from .kalman3d import ConstantVelocityFilter, KalmanConfig
from .slic import SlicParams, segment
from .tracker import Tracker, TrackerConfig, run, run_2d_baseline
from .synth import Scenario, evaluate, generate

import logging
log = logging.getLogger(__name__)
log.addHandler(logging.NullHandler())
