# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import os
import shutil
import tempfile
import numpy as np
from sptrack.geometry import camera_from_pinhole
from sptrack.imgproc import Frame
from sptrack.slic import Superpixel


def camera_pair(width=640, height=320, focal=1000.0):
    """Two converging pinhole cameras 600 units apart, 1000 units in front
    of the origin."""
    principal = ((width - 1) / 2.0, (height - 1) / 2.0)
    return [camera_from_pinhole((x, -1000.0, 0.0), (0, 0, 0), focal,
                                principal, cam_id)
            for cam_id, x in enumerate((-300.0, 300.0))]


def solid_frame(width, height, color=(90, 90, 90), index=0):
    rgb = np.empty((height, width, 3))
    rgb[...] = color
    return Frame(rgb, index)


def two_region_frame(width=64, height=48, split=29, left=(40, 40, 40),
                     right=(200, 200, 200), noise=0.0, seed=0):
    """Frame split vertically at column `split`, plus its truth label map."""
    rgb = np.empty((height, width, 3))
    rgb[:, :split] = left
    rgb[:, split:] = right
    if noise:
        rng = np.random.default_rng(seed)
        rgb = np.clip(rgb + rng.normal(0, noise, rgb.shape), 0, 255)
    truth = np.zeros((height, width), dtype=int)
    truth[:, split:] = 1
    return Frame(rgb), truth


def disc_frame(width, height, centers, radius=6, color=(220, 40, 40),
               background=(90, 90, 90), index=0):
    """Frame with hard edged discs at `centers`."""
    rgb = np.empty((height, width, 3))
    rgb[...] = background
    rows, cols = np.indices((height, width))
    for cu, cv in centers:
        rgb[(cols - cu) ** 2 + (rows - cv) ** 2 <= radius ** 2] = color
    return Frame(rgb, index)


def superpixel(label, u, v, s=0.5, h=0.5, g=0.5, count=100):
    return Superpixel(label, count, (u, v), (0, 0), s, h, g)


class TempDirMixIn(object):

    def setUp(self):
        super(TempDirMixIn, self).setUp()
        self.tmpdir = tempfile.mkdtemp(prefix='sptrack-test-')

    def tearDown(self):
        shutil.rmtree(self.tmpdir, ignore_errors=True)
        super(TempDirMixIn, self).tearDown()

    def path(self, *parts):
        return os.path.join(self.tmpdir, *parts)
