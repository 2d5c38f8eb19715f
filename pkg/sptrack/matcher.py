# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Superpixel to marker matching.

Every candidate superpixel of a marker ROI gets seven mismatch features:

    ===  =====================================================
    f1   saturation mismatch against the previous detection
    f2   saturation mismatch against the initial detection
    f3   hue mismatch (circular) against the previous detection
    f4   hue mismatch (circular) against the initial detection
    f5   gray mismatch against the previous detection
    f6   gray mismatch against the initial detection
    f7   centroid distance to the predicted image point, pixels
    ===  =====================================================

Features are min-max normalized per column across the candidates, weighted
and summed. The candidate with the *smallest* weighted mismatch is the
marker: a zero mismatch is a perfect match, so this is the best match.
"""

import logging
import math
import numpy as np
from .constants import (
    APPEARANCE_FEATURE, DISTANCE_FEATURE, GATE_MAX_APPEARANCE, GATE_MAX_JUMP,
    N_FEATURES, NSLIC_MIN, REFERENCE_FRAME, WEIGHTS
)

log = logging.getLogger(__name__)

__all__ = ['MarkerAppearance', 'Weights', 'Gate', 'hue_distance',
           'extract_features', 'feature_matrix', 'normalize', 'select',
           'score_gate', 'nslic', 'roi_count']


class MarkerAppearance(object):
    """Channel means of a detected marker superpixel, all in ``[0, 1]``."""

    __slots__ = ('mean_s', 'mean_h', 'mean_g')

    def __init__(self, mean_s, mean_h, mean_g):
        for name, value in (('mean_s', mean_s), ('mean_h', mean_h),
                            ('mean_g', mean_g)):
            if not 0.0 <= value <= 1.0:
                raise ValueError('%s should be in [0, 1], got %r'
                                 % (name, value))
        self.mean_s = float(mean_s)
        self.mean_h = float(mean_h)
        self.mean_g = float(mean_g)

    @classmethod
    def of(cls, superpixel):
        return cls(min(max(superpixel.mean_s, 0.0), 1.0),
                   min(max(superpixel.mean_h, 0.0), 1.0),
                   min(max(superpixel.mean_g, 0.0), 1.0))

    def __eq__(self, other):
        return (self.mean_s, self.mean_h, self.mean_g) == \
               (other.mean_s, other.mean_h, other.mean_g)

    def __repr__(self):
        return 'MarkerAppearance(s=%.4f, h=%.4f, g=%.4f)' % (
            self.mean_s, self.mean_h, self.mean_g)


class Weights(object):
    """Feature weights, seven strictly positive numbers."""

    def __init__(self, values=WEIGHTS):
        values = np.array(values, dtype=np.float64)
        if values.shape != (N_FEATURES,):
            raise ValueError('%d weights expected, got %r'
                             % (N_FEATURES, values.tolist()))
        if not np.all(values > 0):
            raise ValueError('Weights should be positive, got %r'
                             % values.tolist())
        values.setflags(write=False)
        self.values = values

    @property
    def total(self):
        return float(self.values.sum())


class Gate(object):
    """Acceptance thresholds of the best candidate. Both bounds are
    inclusive.

    :param max_jump: Largest accepted distance to the prediction, pixels.
    :param max_appearance: Largest accepted saturation mismatch against the
                           previous detection.
    """

    def __init__(self, max_jump=GATE_MAX_JUMP,
                 max_appearance=GATE_MAX_APPEARANCE):
        self.max_jump = float(max_jump)
        self.max_appearance = float(max_appearance)


def hue_distance(a, b):
    """Circular distance of two hues on ``[0, 1)``, in ``[0, 0.5]``."""
    delta = np.abs(np.asarray(a, dtype=np.float64) - b) % 1.0
    return np.minimum(delta, 1.0 - delta)


def extract_features(superpixel, initial, previous, predicted):
    """Mismatch features of one superpixel.

    :param superpixel: Candidate with statistics; its centroid is taken in
                       frame coordinates.
    :type superpixel: :class:`~sptrack.slic.Superpixel`

    :param initial: Appearance at initialization.
    :param previous: Appearance at the last accepted detection.
    :param predicted: Predicted image point ``(u, v)``, frame coordinates.

    :rtype: :class:`numpy.ndarray` of 7 floats
    """
    return feature_matrix([superpixel], initial, previous, predicted)[0]


def feature_matrix(superpixels, initial, previous, predicted):
    """Mismatch features of all candidates as ``n x 7`` matrix."""
    if not (math.isfinite(predicted[0]) and math.isfinite(predicted[1])):
        raise ValueError('Finite predicted point expected, got %r'
                         % (predicted,))
    sat = np.array([sp.mean_s for sp in superpixels], dtype=np.float64)
    hue = np.array([sp.mean_h for sp in superpixels], dtype=np.float64)
    gray = np.array([sp.mean_g for sp in superpixels], dtype=np.float64)
    centroids = np.array([sp.frame_centroid for sp in superpixels],
                         dtype=np.float64).reshape(-1, 2)
    features = np.empty((len(superpixels), N_FEATURES))
    features[:, 0] = np.abs(sat - previous.mean_s)
    features[:, 1] = np.abs(sat - initial.mean_s)
    features[:, 2] = hue_distance(hue, previous.mean_h)
    features[:, 3] = hue_distance(hue, initial.mean_h)
    features[:, 4] = np.abs(gray - previous.mean_g)
    features[:, 5] = np.abs(gray - initial.mean_g)
    features[:, 6] = np.hypot(centroids[:, 0] - predicted[0],
                              centroids[:, 1] - predicted[1])
    return features


def normalize(features):
    """Min-max scales every feature column to ``[0, 1]`` across the
    candidates. Columns with no spread map to zero.

    :raises: :exc:`ValueError` for an empty candidate set.
    """
    features = np.asarray(features, dtype=np.float64)
    if features.ndim != 2 or features.shape[0] == 0:
        raise ValueError('At least one candidate expected')
    low = features.min(axis=0)
    spread = features.max(axis=0) - low
    safe = np.where(spread > 0, spread, 1.0)
    normalized = np.where(spread > 0, (features - low) / safe, 0.0)
    return np.clip(normalized, 0.0, 1.0)


def select(normalized, weights=None, raw=None, labels=None):
    """Selects the candidate with the smallest weighted mismatch.

    Ties are broken by the smaller raw distance to the prediction, then by
    the lower superpixel label.

    :param normalized: ``n x 7`` normalized features.
    :param weights: :class:`Weights`, defaults to ``[3, 1, 3, 2, 2, 1, 3]``.
    :param raw: Raw features for the distance tie break; defaults to
                `normalized`.
    :param labels: Superpixel labels for the last tie break; defaults to row
                   order.

    :return: ``(index, score)``
    :rtype: tuple
    """
    normalized = np.asarray(normalized, dtype=np.float64)
    if normalized.ndim != 2 or normalized.shape[0] == 0:
        raise ValueError('At least one candidate expected')
    weights = weights or Weights()
    scores = normalized.dot(weights.values)
    raw = normalized if raw is None else np.asarray(raw)
    if labels is None:
        labels = np.arange(len(scores))
    order = np.lexsort((np.asarray(labels), raw[:, DISTANCE_FEATURE], scores))
    best = int(order[0])
    return best, float(scores[best])


def score_gate(features, gate=None):
    """Decides whether the best candidate is the marker.

    :param features: Raw features of the selected candidate.
    :return: :const:`True` to accept, :const:`False` to coast.
    """
    gate = gate or Gate()
    return bool(features[DISTANCE_FEATURE] <= gate.max_jump and
                features[APPEARANCE_FEATURE] <= gate.max_appearance)


def nslic(marker_pixels, frame_w=REFERENCE_FRAME[0],
          frame_h=REFERENCE_FRAME[1]):
    """Frame-level superpixel count for a marker of `marker_pixels` pixels.

    The count makes a superpixel half the marker area, the size range SLIC
    can still resolve, clamped to ``[16, frame pixels / 4]``.

    :raises: :exc:`ValueError` if `marker_pixels` is less than one.
    """
    if marker_pixels < 1:
        raise ValueError('Marker pixel count should be >= 1, got %r'
                         % marker_pixels)
    pixels = frame_w * frame_h
    count = int(round(2.0 * pixels / marker_pixels))
    return min(max(count, NSLIC_MIN), pixels // 4)


def roi_count(count, roi_w, roi_h, frame_w=REFERENCE_FRAME[0],
              frame_h=REFERENCE_FRAME[1]):
    """Scales frame-level superpixel `count` to a `roi_w` x `roi_h` window,
    keeping the superpixel area."""
    scaled = int(round(count * float(roi_w * roi_h) / (frame_w * frame_h)))
    return min(max(scaled, 1), roi_w * roi_h)
