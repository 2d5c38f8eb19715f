# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Frames, colour planes and regions of interest.

A :class:`Frame` wraps one camera image as an immutable ``height x width x 3``
array of R, G, B intensities in ``[0, 255]``. The HSV and gray planes, both in
``[0, 1]``, are derived on first access.
"""

import logging
import math
import os
import re
import numpy as np
from scipy import ndimage
from skimage import color, io
from .constants import BAYER_PATTERNS, GRAY_WEIGHTS, ROI_SIZE

log = logging.getLogger(__name__)

__all__ = ['Frame', 'Roi', 'rgb_to_hsv', 'to_gray', 'demosaic',
           'extract_roi', 'threshold_hue', 'read_frame', 'write_frame',
           'FrameSequence', 'frame_name']

#: Per-camera frame file name: ``cam<K>_<NNNNNN>.<ext>``.
FRAME_NAME_RE = re.compile(r'^cam(\d+)_(\d{6})\.(png|ppm|pgm)$', re.I)


class Frame(object):
    """One camera image.

    :param rgb: ``height x width x 3`` array with values in ``[0, 255]``.
    :type rgb: array_like

    :param index: Frame number, 0-based.
    :type index: int

    :param origin: Pixel offset ``(x0, y0)`` of this image inside its parent
                   frame; ``(0, 0)`` for full frames.
    :type origin: tuple
    """

    def __init__(self, rgb, index=0, origin=(0, 0)):
        rgb = np.array(rgb, dtype=np.float64)
        if rgb.ndim != 3 or rgb.shape[2] != 3:
            raise ValueError('height x width x 3 array expected, got shape %r'
                             % (rgb.shape,))
        if rgb.shape[0] < 1 or rgb.shape[1] < 1:
            raise ValueError('Empty frame')
        if not np.all(np.isfinite(rgb)):
            raise ValueError('RGB values should be finite')
        if rgb.min() < 0 or rgb.max() > 255:
            raise ValueError('RGB values out of [0, 255]')
        rgb.setflags(write=False)
        self._rgb = rgb
        self._hsv = None
        self._gray = None
        self.index = index
        self.origin = tuple(origin)

    @classmethod
    def _view(cls, parent, roi):
        obj = cls.__new__(cls)
        window = (slice(roi.y0, roi.y0 + roi.h), slice(roi.x0, roi.x0 + roi.w))
        obj._rgb = parent._rgb[window]
        obj._hsv = None if parent._hsv is None else parent._hsv[window]
        obj._gray = None if parent._gray is None else parent._gray[window]
        obj.index = parent.index
        obj.origin = (parent.origin[0] + roi.x0, parent.origin[1] + roi.y0)
        return obj

    @property
    def width(self):
        return self._rgb.shape[1]

    @property
    def height(self):
        return self._rgb.shape[0]

    @property
    def shape(self):
        return self._rgb.shape[:2]

    @property
    def rgb(self):
        return self._rgb

    @property
    def hsv(self):
        """HSV planes, each in ``[0, 1]``; hue is the angle scaled to
        ``[0, 1)``."""
        if self._hsv is None:
            hsv = color.rgb2hsv(self._rgb / 255.0)
            hsv.setflags(write=False)
            self._hsv = hsv
        return self._hsv

    @property
    def gray(self):
        if self._gray is None:
            gray = np.dot(self._rgb, GRAY_WEIGHTS) / 255.0
            gray.setflags(write=False)
            self._gray = gray
        return self._gray

    def crop(self, roi):
        """Returns sub-image view covered by `roi`."""
        if roi.x0 + roi.w > self.width or roi.y0 + roi.h > self.height:
            raise ValueError('%r does not fit into %dx%d frame'
                             % (roi, self.width, self.height))
        return self._view(self, roi)

    def contains(self, u, v):
        """Checks that image point lies inside this frame."""
        return 0 <= u <= self.width - 1 and 0 <= v <= self.height - 1

    def to_uint8(self):
        return np.clip(np.rint(self._rgb), 0, 255).astype(np.uint8)

    def __repr__(self):
        return '<Frame #%d %dx%d at %r>' % (self.index, self.width,
                                            self.height, self.origin)


class Roi(object):
    """Rectangular window ``[x0, x0 + w) x [y0, y0 + h)`` inside a frame."""

    __slots__ = ('x0', 'y0', 'w', 'h')

    def __init__(self, x0, y0, w, h):
        if w < 1 or h < 1:
            raise ValueError('ROI extent should be positive, got %dx%d'
                             % (w, h))
        if x0 < 0 or y0 < 0:
            raise ValueError('ROI origin should be non-negative, got (%d, %d)'
                             % (x0, y0))
        self.x0, self.y0, self.w, self.h = int(x0), int(y0), int(w), int(h)

    @classmethod
    def around(cls, center, w, h, width, height):
        """Builds `w` x `h` window centered at `center` and shifted inward so
        that it fits into a `width` x `height` frame.

        :raises: :exc:`ValueError` if the window is larger than the frame or
                 the center is not finite.
        """
        cu, cv = center
        if not (math.isfinite(cu) and math.isfinite(cv)):
            raise ValueError('Finite ROI center expected, got %r' % (center,))
        if w < 1 or h < 1:
            raise ValueError('ROI extent should be positive, got %dx%d'
                             % (w, h))
        if w > width or h > height:
            raise ValueError('ROI %dx%d does not fit into %dx%d frame'
                             % (w, h, width, height))
        x0 = int(round(cu)) - w // 2
        y0 = int(round(cv)) - h // 2
        x0 = min(max(x0, 0), width - w)
        y0 = min(max(y0, 0), height - h)
        return cls(x0, y0, w, h)

    @classmethod
    def bounding(cls, points, padding, width, height):
        """Smallest window holding all `points` expanded by `padding` pixels
        on every side, clipped to the frame."""
        us = [p[0] for p in points]
        vs = [p[1] for p in points]
        x0 = max(int(math.floor(min(us))) - padding, 0)
        y0 = max(int(math.floor(min(vs))) - padding, 0)
        x1 = min(int(math.ceil(max(us))) + padding + 1, width)
        y1 = min(int(math.ceil(max(vs))) + padding + 1, height)
        return cls(x0, y0, x1 - x0, y1 - y0)

    def __eq__(self, other):
        return (self.x0, self.y0, self.w, self.h) == \
               (other.x0, other.y0, other.w, other.h)

    def __repr__(self):
        return 'Roi(x0=%d, y0=%d, w=%d, h=%d)' % (self.x0, self.y0,
                                                 self.w, self.h)


def rgb_to_hsv(r, g, b):
    """Converts one RGB triplet in ``[0, 255]`` to HSV in ``[0, 1]``.

    :return: ``(h, s, v)``; gray-axis inputs have ``s == 0`` and ``h == 0``.
    :rtype: tuple
    """
    pixel = np.array([[[r, g, b]]], dtype=np.float64) / 255.0
    h, s, v = color.rgb2hsv(pixel)[0, 0]
    return float(h), float(s), float(v)


def to_gray(r, g, b):
    """Luminance of one RGB triplet, normalized to ``[0, 1]``."""
    wr, wg, wb = GRAY_WEIGHTS
    return (wr * r + wg * g + wb * b) / 255.0


_RB_KERNEL = np.array([[1., 2., 1.], [2., 4., 2.], [1., 2., 1.]])
_G_KERNEL = np.array([[0., 1., 0.], [1., 4., 1.], [0., 1., 0.]])


def bayer_masks(shape, pattern):
    """Boolean site masks ``(R, G, B)`` of a Bayer `pattern` over `shape`."""
    pattern = pattern.upper()
    if pattern not in BAYER_PATTERNS:
        raise ValueError('Unknown Bayer pattern %r, expected one of %r'
                         % (pattern, BAYER_PATTERNS))
    height, width = shape
    masks = dict((channel, np.zeros(shape, dtype=bool)) for channel in 'RGB')
    for idx, channel in enumerate(pattern):
        dy, dx = divmod(idx, 2)
        masks[channel][dy:height:2, dx:width:2] = True
    return masks['R'], masks['G'], masks['B']


def demosaic(plane, pattern='RGGB', index=0):
    """Bilinear demosaicing of a single-plane Bayer mosaic.

    Each missing sample is the mean of the same-colour samples in its 3x3
    neighbourhood. The interpolation is computed as a normalized convolution,
    so frame borders average only the samples that exist.

    :param plane: ``height x width`` raw mosaic, values in ``[0, 255]``.
    :param pattern: One of :const:`~sptrack.constants.BAYER_PATTERNS`.
    :param index: Frame number of the result.

    :rtype: :class:`Frame`

    :raises: :exc:`ValueError` on odd plane dimensions or unknown pattern.
    """
    plane = np.asarray(plane, dtype=np.float64)
    if plane.ndim != 2:
        raise ValueError('Single plane expected, got shape %r'
                         % (plane.shape,))
    if plane.shape[0] % 2 or plane.shape[1] % 2:
        raise ValueError('Bayer plane dimensions should be even, got %dx%d'
                         % (plane.shape[1], plane.shape[0]))
    channels = []
    for mask, kernel in zip(bayer_masks(plane.shape, pattern),
                            (_RB_KERNEL, _G_KERNEL, _RB_KERNEL)):
        weight = mask.astype(np.float64)
        total = ndimage.correlate(plane * weight, kernel, mode='constant')
        norm = ndimage.correlate(weight, kernel, mode='constant')
        channels.append(np.where(mask, plane, total / norm))
    rgb = np.clip(np.dstack(channels), 0, 255)
    return Frame(rgb, index)


def extract_roi(frame, center, w=ROI_SIZE[0], h=ROI_SIZE[1]):
    """Extracts `w` x `h` window centered at `center`. Near a border the
    window shifts inward rather than shrinking.

    :return: ``(roi, sub_frame)``
    :rtype: tuple
    """
    roi = Roi.around(center, w, h, frame.width, frame.height)
    return roi, frame.crop(roi)


def threshold_hue(frame, hue, tol=0.05, min_saturation=0.3):
    """Binary mask of pixels whose hue is within `tol` (circular) of `hue`
    and whose saturation is at least `min_saturation`."""
    hsv = frame.hsv
    delta = np.abs(hsv[..., 0] - hue)
    delta = np.minimum(delta, 1.0 - delta)
    return (delta <= tol) & (hsv[..., 1] >= min_saturation)


def frame_name(cam_id, index, ext='png'):
    return 'cam%d_%06d.%s' % (cam_id, index, ext)


def read_frame(path, index=0, pattern=None):
    """Reads PNG or portable pixmap image as :class:`Frame`.

    Single plane images are treated as raw Bayer mosaics when `pattern` is
    given and as gray otherwise.
    """
    data = io.imread(path)
    if data.dtype == np.uint16:
        data = data / 257.0
    if data.ndim == 2:
        if pattern is not None:
            return demosaic(data, pattern, index)
        data = np.dstack([data] * 3)
    elif data.shape[2] == 4:
        data = data[..., :3]
    return Frame(data, index)


def write_frame(path, frame):
    """Writes frame as 8-bit image, format taken from the file extension."""
    io.imsave(path, frame.to_uint8(), check_contrast=False)


class FrameSequence(object):
    """Frames of one camera stored in a directory as
    ``cam<K>_<NNNNNN>.<ext>`` files. Frames are read lazily, in index order.

    :param directory: Directory to scan.
    :param cam_id: Camera number ``K``; :const:`None` accepts the single
                   camera found in the directory.
    :param pattern: Bayer pattern for raw single plane files.
    """

    def __init__(self, directory, cam_id=None, pattern=None):
        self.directory = directory
        self.pattern = pattern
        entries = []
        for name in sorted(os.listdir(directory)):
            match = FRAME_NAME_RE.match(name)
            if match is None:
                continue
            cam, index = int(match.group(1)), int(match.group(2))
            if cam_id is not None and cam != cam_id:
                continue
            entries.append((cam, index, os.path.join(directory, name)))
        cams = set(cam for cam, _, _ in entries)
        if len(cams) > 1:
            raise ValueError('Several cameras %r found in %s, select one'
                             % (sorted(cams), directory))
        self.cam_id = cams.pop() if cams else cam_id
        self._entries = sorted((index, path) for _, index, path in entries)
        log.debug('found %d frames of camera %r in %s',
                  len(self._entries), self.cam_id, directory)

    def __len__(self):
        return len(self._entries)

    def __getitem__(self, idx):
        index, path = self._entries[idx]
        return read_frame(path, index, self.pattern)

    def __iter__(self):
        for idx in range(len(self)):
            yield self[idx]

    @property
    def indices(self):
        return [index for index, _ in self._entries]
