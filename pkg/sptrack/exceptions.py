# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

class BaseTrackingError(Exception):
    """Base sptrack error."""


class ConfigError(BaseTrackingError):
    """Configuration file or flag is not acceptable. The message names the
    offending key."""

    def __init__(self, key, message):
        super(ConfigError, self).__init__('%s: %s' % (key, message))
        self.key = key


class FormatError(BaseTrackingError, ValueError):
    """CSV data could not be decoded."""

    def __init__(self, message, line=None, source=None):
        where = ''
        if source is not None:
            where += '%s:' % source
        if line is not None:
            where += 'line %d: ' % line
        elif where:
            where += ' '
        super(FormatError, self).__init__(where + message)
        self.line = line
        self.source = source


class CalibrationError(BaseTrackingError):
    """Camera calibration failed."""


class UnderdeterminedError(CalibrationError):
    """Not enough correspondences to solve for the 11 DLT coefficients."""


class DegenerateGeometry(CalibrationError):
    """Linear system is rank deficient or too badly conditioned.

    :param condition: Condition estimate of the offending system.
    """

    def __init__(self, message, condition=None):
        if condition is not None:
            message = '%s (condition estimate %.3g)' % (message, condition)
        super(DegenerateGeometry, self).__init__(message)
        self.condition = condition


class PointAtInfinity(BaseTrackingError):
    """Projection denominator vanishes for the requested point."""


class SegmentationError(BaseTrackingError):
    """Superpixel segmentation could not be computed."""


class SameSuperpixelError(SegmentationError):
    """Two clicked markers fell into one superpixel."""


class SequenceError(BaseTrackingError):
    """Frame sequences are too short or of different length."""


class MissingClicksError(BaseTrackingError):
    """Initialization clicks are incomplete."""


class ScenarioError(BaseTrackingError):
    """Synthetic scenario is inconsistent."""


class CoverageError(BaseTrackingError):
    """Trajectory and ground truth do not cover the same frames/markers."""
