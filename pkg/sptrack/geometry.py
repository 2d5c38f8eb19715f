# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Direct linear transform.

A camera is described by eleven coefficients ``L1..L11``::

    u = (L1 X + L2 Y + L3 Z + L4) / (L9 X + L10 Y + L11 Z + 1)
    v = (L5 X + L6 Y + L7 Z + L8) / (L9 X + L10 Y + L11 Z + 1)

Calibration solves these equations for ``L`` from known object/image
correspondences; triangulation solves them for ``(X, Y, Z)`` from the image
points of two or more calibrated cameras. Both are linear least squares.
"""

import logging
import math
from collections import namedtuple
import numpy as np
from scipy import linalg
from .exceptions import (
    DegenerateGeometry, PointAtInfinity, UnderdeterminedError
)

log = logging.getLogger(__name__)

__all__ = ['Point2', 'Point3', 'CameraModel', 'CalibrationSet',
           'CalibrationReport', 'calibrate', 'project', 'triangulate',
           'camera_from_pinhole']

#: Denominators closer to zero than this are points at infinity.
DENOMINATOR_TOL = 1e-12
#: Calibration design matrices worse conditioned than this are rejected.
MAX_CONDITION = 1e10
#: Relative singular value below which triangulation is rank deficient.
RANK_TOL = 1e-10

Point2 = namedtuple('Point2', 'u v')
Point3 = namedtuple('Point3', 'x y z')


class CameraModel(object):
    """DLT coefficients of one camera.

    :param coeffs: ``L1..L11``.
    :param cam_id: Camera index.
    """

    def __init__(self, coeffs, cam_id=0):
        coeffs = np.array(coeffs, dtype=np.float64).ravel()
        if coeffs.size != 11:
            raise ValueError('11 DLT coefficients expected, got %d'
                             % coeffs.size)
        if not np.all(np.isfinite(coeffs)):
            raise ValueError('DLT coefficients should be finite')
        coeffs.setflags(write=False)
        self.coeffs = coeffs
        self.cam_id = cam_id

    @property
    def matrix(self):
        """Coefficients as 3 x 4 projection matrix with ``P[2, 3] == 1``."""
        return np.append(self.coeffs, 1.0).reshape(3, 4)

    def denominator(self, p):
        L = self.coeffs
        return L[8] * p[0] + L[9] * p[1] + L[10] * p[2] + 1.0

    def __eq__(self, other):
        return isinstance(other, CameraModel) \
            and self.cam_id == other.cam_id \
            and np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self):
        return 'CameraModel(cam_id=%r, coeffs=%r)' % (self.cam_id,
                                                     self.coeffs.tolist())


class CalibrationSet(object):
    """Object/image correspondences of one camera.

    :param pairs: Sequence of ``(Point3, Point2)``.
    """

    def __init__(self, pairs, cam_id=0):
        self.pairs = [(Point3(*p), Point2(*q)) for p, q in pairs]
        self.cam_id = cam_id

    def __len__(self):
        return len(self.pairs)

    def arrays(self):
        obj = np.array([p for p, _ in self.pairs], dtype=np.float64)
        img = np.array([q for _, q in self.pairs], dtype=np.float64)
        return obj.reshape(-1, 3), img.reshape(-1, 2)


class CalibrationReport(object):
    """Per-point reprojection errors of a calibration.

    :ivar errors: Reprojection error of every pair, pixels.
    :ivar rms: Root mean square of `errors`.
    :ivar condition: Condition number of the normalized design matrix.
    """

    def __init__(self, errors, condition):
        self.errors = errors
        self.rms = float(np.sqrt(np.mean(np.square(errors))))
        self.condition = condition

    def __repr__(self):
        return '<CalibrationReport rms=%.3g px over %d points>' % (
            self.rms, len(self.errors))


def _normalizer(points):
    """Similarity that moves the centroid to the origin and scales the mean
    distance to ``sqrt(dim)``."""
    dim = points.shape[1]
    centroid = points.mean(axis=0)
    spread = np.sqrt(((points - centroid) ** 2).sum(axis=1)).mean()
    scale = math.sqrt(dim) / spread if spread > 0 else 1.0
    T = np.eye(dim + 1)
    T[:dim, :dim] *= scale
    T[:dim, dim] = -scale * centroid
    return T


def _apply(T, points):
    homo = np.hstack([points, np.ones((points.shape[0], 1))])
    return homo.dot(T.T)[:, :-1]


def calibrate(calset):
    """Computes DLT coefficients of one camera.

    Coordinates are conditioned (centroid at origin, unit mean spread) before
    the linear solve and the result is mapped back, which changes nothing in
    exact arithmetic but keeps the system well scaled.

    :param calset: Correspondences of one camera.
    :type calset: :class:`CalibrationSet`

    :return: ``(camera, report)``
    :rtype: tuple

    :raises:
        * :exc:`~sptrack.exceptions.UnderdeterminedError` with fewer than
          six pairs.
        * :exc:`~sptrack.exceptions.DegenerateGeometry` for coplanar or
          otherwise degenerate object points.
    """
    if len(calset) < 6:
        raise UnderdeterminedError(
            'camera %r: %d correspondences give %d equations for 11 unknowns,'
            ' at least 6 points are needed'
            % (calset.cam_id, len(calset), 2 * len(calset)))
    obj, img = calset.arrays()
    if not (np.all(np.isfinite(obj)) and np.all(np.isfinite(img))):
        raise ValueError('Calibration points should be finite')
    T3, T2 = _normalizer(obj), _normalizer(img)
    X, x = _apply(T3, obj), _apply(T2, img)
    n = len(X)
    A = np.zeros((2 * n, 11))
    b = np.empty(2 * n)
    A[0::2, 0:3] = X
    A[0::2, 3] = 1
    A[0::2, 8:11] = -x[:, :1] * X
    A[1::2, 4:7] = X
    A[1::2, 7] = 1
    A[1::2, 8:11] = -x[:, 1:] * X
    b[0::2] = x[:, 0]
    b[1::2] = x[:, 1]
    condition = np.linalg.cond(A)
    if not np.isfinite(condition) or condition > MAX_CONDITION:
        raise DegenerateGeometry(
            'camera %r: degenerate calibration object configuration'
            % calset.cam_id, condition)
    Ln, _, _, _ = linalg.lstsq(A, b)
    P = np.linalg.inv(T2).dot(np.append(Ln, 1.0).reshape(3, 4)).dot(T3)
    if abs(P[2, 3]) < DENOMINATOR_TOL:
        raise DegenerateGeometry(
            'camera %r: object origin lies on the camera focal plane'
            % calset.cam_id)
    camera = CameraModel((P / P[2, 3]).ravel()[:11], calset.cam_id)
    errors = np.array([math.hypot(*np.subtract(project(camera, p), q))
                       for p, q in calset.pairs])
    report = CalibrationReport(errors, condition)
    log.info('camera %r calibrated from %d points, rms %.3g px',
             calset.cam_id, n, report.rms)
    return camera, report


def project(camera, p):
    """Projects object point into the image plane of `camera`.

    :rtype: :class:`Point2`

    :raises: :exc:`~sptrack.exceptions.PointAtInfinity` if the denominator
             is within ``1e-12`` of zero.
    """
    L = camera.coeffs
    x, y, z = p
    den = L[8] * x + L[9] * y + L[10] * z + 1.0
    if abs(den) < DENOMINATOR_TOL:
        raise PointAtInfinity('point %r projects to infinity in camera %r'
                              % (tuple(p), camera.cam_id))
    return Point2((L[0] * x + L[1] * y + L[2] * z + L[3]) / den,
                  (L[4] * x + L[5] * y + L[6] * z + L[7]) / den)


def triangulate(observations):
    """Reconstructs object point from its image points in two or more
    cameras.

    :param observations: Sequence of ``(CameraModel, Point2)``.

    :return: ``(point, residual)``, residual being the RMS reprojection
             error over the views, pixels.
    :rtype: tuple

    :raises: :exc:`~sptrack.exceptions.DegenerateGeometry` with fewer than
             two views or rank deficient geometry.
    """
    if len(observations) < 2:
        raise DegenerateGeometry('at least two views are needed, got %d'
                                 % len(observations))
    A = []
    b = []
    for camera, (u, v) in observations:
        L = camera.coeffs
        A.append([L[0] - u * L[8], L[1] - u * L[9], L[2] - u * L[10]])
        A.append([L[4] - v * L[8], L[5] - v * L[9], L[6] - v * L[10]])
        b.append(u - L[3])
        b.append(v - L[7])
    A = np.array(A)
    b = np.array(b)
    if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
        raise ValueError('Image points should be finite')
    sv = np.linalg.svd(A, compute_uv=False)
    if sv[-1] <= RANK_TOL * sv[0]:
        raise DegenerateGeometry('rank deficient views',
                                 sv[0] / sv[-1] if sv[-1] else np.inf)
    xyz, _, _, _ = linalg.lstsq(A, b)
    point = Point3(*map(float, xyz))
    errors = [np.subtract(project(camera, point), q)
              for camera, q in observations]
    residual = float(np.sqrt(np.mean(np.square(errors).sum(axis=1))))
    return point, residual


def camera_from_pinhole(position, target, focal, principal, cam_id=0,
                        up=(0.0, 0.0, 1.0)):
    """DLT model of an ideal pinhole camera at `position` looking at
    `target`, with image ``u`` to the right and ``v`` downward.

    :param focal: Focal length in pixels.
    :param principal: Principal point ``(cu, cv)`` in pixels.
    """
    position = np.asarray(position, dtype=np.float64)
    forward = np.asarray(target, dtype=np.float64) - position
    forward /= np.linalg.norm(forward)
    right = np.cross(forward, up)
    norm = np.linalg.norm(right)
    if norm == 0:
        raise ValueError('Viewing direction is parallel to the up vector')
    right /= norm
    down = np.cross(forward, right)
    R = np.vstack([right, down, forward])
    K = np.array([[focal, 0.0, principal[0]],
                  [0.0, focal, principal[1]],
                  [0.0, 0.0, 1.0]])
    P = K.dot(np.hstack([R, -R.dot(position)[:, None]]))
    if abs(P[2, 3]) < DENOMINATOR_TOL:
        raise ValueError('Object origin lies on the camera focal plane')
    return CameraModel((P / P[2, 3]).ravel()[:11], cam_id)
