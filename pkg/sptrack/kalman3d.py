# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Constant velocity Kalman filter in object space.

State is ``(X, Y, Z, Vx, Vy, Vz)`` with velocities in object units per
frame. The axes do not interact: transition, process noise and measurement
model are all block diagonal over ``X``, ``Y`` and ``Z``.
"""

import logging
import numpy as np
from .geometry import Point3

log = logging.getLogger(__name__)

__all__ = ['KalmanConfig', 'KalmanState', 'ConstantVelocityFilter']

_I3 = np.eye(3)
_Z3 = np.zeros((3, 3))
#: One frame constant velocity transition.
TRANSITION = np.block([[_I3, _I3], [_Z3, _I3]])
#: Position-only measurement model.
MEASUREMENT = np.hstack([_I3, _Z3])


class KalmanConfig(object):
    """Noise model.

    :param process_noise: ``q``, added to every state variance per frame.
    :param measurement_noise: ``r``, variance of a triangulated position.
    :param init_pos_var: Initial position variance.
    :param init_vel_var: Initial velocity variance.
    """

    def __init__(self, process_noise=0.05, measurement_noise=0.5,
                 init_pos_var=0.5, init_vel_var=1.0):
        for name, value in (('process_noise', process_noise),
                            ('measurement_noise', measurement_noise),
                            ('init_pos_var', init_pos_var),
                            ('init_vel_var', init_vel_var)):
            if not value > 0:
                raise ValueError('%s should be positive, got %r'
                                 % (name, value))
        self.process_noise = float(process_noise)
        self.measurement_noise = float(measurement_noise)
        self.init_pos_var = float(init_pos_var)
        self.init_vel_var = float(init_vel_var)


class KalmanState(object):
    """Filter state. Instances are never modified in place; every step
    returns a new one."""

    __slots__ = ('mean', 'covariance', 'frames_since_update')

    def __init__(self, mean, covariance, frames_since_update=0):
        self.mean = np.array(mean, dtype=np.float64)
        self.covariance = np.array(covariance, dtype=np.float64)
        self.frames_since_update = frames_since_update

    @property
    def position(self):
        return Point3(*self.mean[:3])

    @property
    def velocity(self):
        return Point3(*self.mean[3:])

    def __repr__(self):
        return '<KalmanState pos=%r vel=%r since_update=%d>' % (
            tuple(self.mean[:3]), tuple(self.mean[3:]),
            self.frames_since_update)


def _finite(point):
    point = np.asarray(point, dtype=np.float64)
    if point.shape != (3,) or not np.all(np.isfinite(point)):
        raise ValueError('Finite 3D point expected, got %r' % (point,))
    return point


class ConstantVelocityFilter(object):
    """Per-marker filter operations. The filter itself is stateless and may
    be shared; each marker owns its :class:`KalmanState`."""

    def __init__(self, config=None):
        self.config = config or KalmanConfig()

    def init(self, p0, p1):
        """Starts a track from two consecutive positions.

        :return: State with position `p1` and velocity ``p1 - p0``.
        :rtype: :class:`KalmanState`
        """
        p0, p1 = _finite(p0), _finite(p1)
        cfg = self.config
        covariance = np.diag([cfg.init_pos_var] * 3 + [cfg.init_vel_var] * 3)
        return KalmanState(np.concatenate([p1, p1 - p0]), covariance)

    def predict(self, state):
        """Advances `state` by one frame.

        :return: ``(predicted_position, new_state)``
        :rtype: tuple
        """
        mean = state.mean.copy()
        mean[:3] = mean[:3] + mean[3:]
        covariance = TRANSITION.dot(state.covariance).dot(TRANSITION.T)
        covariance += self.config.process_noise * np.eye(6)
        covariance = (covariance + covariance.T) / 2
        new = KalmanState(mean, covariance, state.frames_since_update + 1)
        return new.position, new

    def update(self, state, measurement):
        """Corrects `state` with a measured position.

        :raises: :exc:`ValueError` for non-finite measurements; callers
                 should coast instead.
        """
        z = _finite(measurement)
        P = state.covariance
        R = self.config.measurement_noise * _I3
        innovation = z - state.mean[:3]
        S = MEASUREMENT.dot(P).dot(MEASUREMENT.T) + R
        K = np.linalg.solve(S, MEASUREMENT.dot(P)).T
        mean = state.mean + K.dot(innovation)
        IKH = np.eye(6) - K.dot(MEASUREMENT)
        covariance = IKH.dot(P).dot(IKH.T) + K.dot(R).dot(K.T)
        covariance = (covariance + covariance.T) / 2
        return KalmanState(mean, covariance, 0)

    def coast(self, state, frames):
        """Prediction after `frames` steps without measurements."""
        for _ in range(frames):
            _, state = self.predict(state)
        return state
