# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

#: Luma weights used for the gray plane.
GRAY_WEIGHTS = (0.299, 0.587, 0.114)

#: Supported Bayer layouts, read row-major over the 2x2 tile.
BAYER_PATTERNS = ('RGGB', 'BGGR', 'GRBG', 'GBRG')

#: Default ROI extent (width, height) in pixels.
ROI_SIZE = (100, 100)
#: Padding added around the clicked markers by the initial tracker.
INIT_PADDING = 100
#: Largest expected marker displacement between frames, in pixels.
MAX_DISPLACEMENT = 50

#: Feature weights, one per mismatch feature f1..f7.
WEIGHTS = (3, 1, 3, 2, 2, 1, 3)
#: Number of mismatch features.
N_FEATURES = 7
#: Feature column holding the distance to the predicted point.
DISTANCE_FEATURE = 6
#: Feature column holding the saturation mismatch against the previous
#: detection.
APPEARANCE_FEATURE = 0

#: Default gate: maximum accepted jump from the prediction, pixels.
GATE_MAX_JUMP = float(MAX_DISPLACEMENT)
#: Default gate: maximum accepted saturation mismatch.
GATE_MAX_APPEARANCE = 0.35
#: Largest RMS reprojection residual of an accepted 3D detection, pixels.
MAX_RESIDUAL = 8.0

#: Reference frame size used by the superpixel count rule.
REFERENCE_FRAME = (2048, 700)
#: Bounds of the superpixel count rule.
NSLIC_MIN = 16

#: Marker names, distal to proximal.
MARKERS = ('toe', 'ankle', 'knee', 'hip', 'asis')
#: Frame-level superpixel counts used for the rat markers.
MARKER_COUNTS = {
    'toe': 10000,
    'ankle': 10000,
    'knee': 7000,
    'hip': 3000,
    'asis': 3000,
}

#: Track status values.
TRACKED = 'tracked'
COASTING = 'coasting'
LOST = 'lost'
STATUSES = (TRACKED, COASTING, LOST)

#: Consecutive coasting frames after which a track is flagged lost.
LOSS_THRESHOLD = 25

#: Tracking modes.
MODE_3D = '3d'
MODE_2D = '2d'

#: Evaluation conditions, in report order.
BAD_MARKER = 'bad_marker'
MISSING_START = 'missing_start'
PARTIALLY_OCCLUDED = 'partially_occluded'
OCCLUDED = 'occluded'
PERFECT = 'perfect'
CONDITIONS = (BAD_MARKER, MISSING_START, PARTIALLY_OCCLUDED, OCCLUDED,
              PERFECT)
#: Precedence used when several conditions apply to one marker-frame.
CONDITION_PRECEDENCE = (MISSING_START, OCCLUDED, PARTIALLY_OCCLUDED,
                        BAD_MARKER, PERFECT)

#: Scenario event types.
EVENT_OCCLUSION_FULL = 'occlusion_full'
EVENT_OCCLUSION_PARTIAL = 'occlusion_partial'
EVENT_BAD_MARKER = 'bad_marker'
EVENT_MISSING_START = 'missing_start'
EVENTS = (EVENT_OCCLUSION_FULL, EVENT_OCCLUSION_PARTIAL, EVENT_BAD_MARKER,
          EVENT_MISSING_START)

#: Published percentages of correctly tracked markers per condition for the
#: superpixel + 2D and superpixel + 3D arms. Reference only; they came from
#: a rat dataset that is not available here.
REFERENCE_2D = {
    BAD_MARKER: 15.87,
    MISSING_START: 2.95,
    PARTIALLY_OCCLUDED: 17.36,
    OCCLUDED: 14.47,
    PERFECT: 99.90,
    'total': 79.09,
}
REFERENCE_3D = {
    BAD_MARKER: 85.79,
    MISSING_START: 11.99,
    PARTIALLY_OCCLUDED: 94.28,
    OCCLUDED: 89.36,
    PERFECT: 99.99,
    'total': 95.01,
}
#: Same for the hue threshold + 2D arm.
REFERENCE_THRE_2D = {
    BAD_MARKER: 2.88,
    MISSING_START: 1.75,
    PARTIALLY_OCCLUDED: 0.8,
    OCCLUDED: 0.67,
    PERFECT: 98.11,
    'total': 60.50,
}
#: Published seconds per 1,000-frame trial (mean, std) for the 3D arm.
REFERENCE_TIME = (149, 18)

#: CLI exit codes.
EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GEOMETRY = 3
EXIT_MISMATCH = 4
EXIT_CLICKS = 5
