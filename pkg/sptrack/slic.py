# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""SLIC superpixels.

Simple linear iterative clustering over the joint colour + position space.
Cluster centers start on a regular grid with interval
``S = sqrt(pixels / N)``, move to the lowest gradient position of their 3x3
neighbourhood and are then refined k-means style; every center only competes
for the pixels inside its ``2S x 2S`` window. The distance is::

    D = sqrt((Dc / Nc) ** 2 + (Dp / Np) ** 2)

with ``Nc`` the compactness and ``Np = S``. A connectivity pass finally
merges fragments smaller than ``min_region`` pixels into their largest
neighbour.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
import numpy as np
from scipy import ndimage
from skimage import io, measure, segmentation as skseg
from .exceptions import SegmentationError

log = logging.getLogger(__name__)

__all__ = ['SlicParams', 'Superpixel', 'Segmentation', 'color_distance',
           'spatial_distance', 'combined_distance', 'segment',
           'superpixel_stats', 'boundary_recall', 'save_label_map',
           'save_overlay']

COLOR_SPACES = ('rgb', 'hsv')


class SlicParams(object):
    """Segmentation parameters.

    :param n_superpixels: Requested superpixel count ``N``.
    :param compactness: Colour normalizer ``Nc`` (``m``).
    :param max_iters: Iteration cap.
    :param min_region: Fragments below this size are merged; :const:`None`
                       selects ``S ** 2 / 16``.
    :param color_space: ``'rgb'`` (intensities in [0, 255]) or ``'hsv'``
                        (planes scaled to the same range).
    :param workers: Threads used for the assignment step. Labels never
                    depend on it.
    """

    def __init__(self, n_superpixels, compactness=10.0, max_iters=10,
                 min_region=None, color_space='rgb', workers=1):
        if int(n_superpixels) < 1:
            raise ValueError('n_superpixels should be >= 1, got %r'
                             % n_superpixels)
        if compactness <= 0:
            raise ValueError('compactness should be > 0, got %r' % compactness)
        if int(max_iters) < 1:
            raise ValueError('max_iters should be >= 1, got %r' % max_iters)
        if color_space not in COLOR_SPACES:
            raise ValueError('Unknown color space %r' % color_space)
        self.n_superpixels = int(n_superpixels)
        self.compactness = float(compactness)
        self.max_iters = int(max_iters)
        self.min_region = min_region
        self.color_space = color_space
        self.workers = max(int(workers), 1)

    def replace(self, **kwargs):
        values = dict(n_superpixels=self.n_superpixels,
                      compactness=self.compactness,
                      max_iters=self.max_iters,
                      min_region=self.min_region,
                      color_space=self.color_space,
                      workers=self.workers)
        values.update(kwargs)
        return type(self)(**values)

    def __repr__(self):
        return ('SlicParams(n_superpixels=%d, compactness=%r, max_iters=%d, '
                'min_region=%r, color_space=%r)'
                % (self.n_superpixels, self.compactness, self.max_iters,
                   self.min_region, self.color_space))


class Superpixel(object):
    """Per-superpixel statistics.

    Centroid is ``(u, v)`` in the coordinates of the segmented image; use
    :attr:`frame_centroid` for full frame coordinates.
    """

    __slots__ = ('label', 'pixel_count', 'centroid', 'origin',
                 'mean_s', 'mean_h', 'mean_g', 'mean_r', 'mean_gr', 'mean_b')

    def __init__(self, label, pixel_count, centroid, origin=(0, 0),
                 mean_s=0.0, mean_h=0.0, mean_g=0.0,
                 mean_r=0.0, mean_gr=0.0, mean_b=0.0):
        self.label = label
        self.pixel_count = pixel_count
        self.centroid = centroid
        self.origin = origin
        self.mean_s = mean_s
        self.mean_h = mean_h
        self.mean_g = mean_g
        self.mean_r = mean_r
        self.mean_gr = mean_gr
        self.mean_b = mean_b

    @property
    def frame_centroid(self):
        return (self.centroid[0] + self.origin[0],
                self.centroid[1] + self.origin[1])

    def __repr__(self):
        return ('<Superpixel %d: %d px at (%.2f, %.2f) S=%.3f H=%.3f G=%.3f>'
                % (self.label, self.pixel_count, self.centroid[0],
                   self.centroid[1], self.mean_s, self.mean_h, self.mean_g))


class Segmentation(object):
    """Label map plus per-label statistics.

    :ivar label_map: ``height x width`` integer array, labels ``0..K-1``.
    :ivar superpixels: List of :class:`Superpixel`, indexed by label.
    :ivar objective: Sum of squared combined distances after every
                     assignment step.
    """

    def __init__(self, label_map, superpixels, objective=None):
        self.label_map = label_map
        self.superpixels = superpixels
        self.objective = objective or []

    def __len__(self):
        return len(self.superpixels)

    def label_at(self, u, v):
        """Label of the pixel holding image point ``(u, v)``."""
        row = min(max(int(round(v)), 0), self.label_map.shape[0] - 1)
        col = min(max(int(round(u)), 0), self.label_map.shape[1] - 1)
        return int(self.label_map[row, col])


def color_distance(p, q):
    """Euclidean distance of two RGB pixels."""
    return math.sqrt(sum((float(a) - float(b)) ** 2 for a, b in zip(p, q)))


def spatial_distance(p, q):
    """Planar Euclidean distance of two pixel positions."""
    return math.hypot(float(p[0]) - float(q[0]), float(p[1]) - float(q[1]))


def combined_distance(dc, dp, nc, np_):
    """Scale normalized colour + position distance.

    :raises: :exc:`ValueError` for non-positive normalizers.
    """
    if nc <= 0 or np_ <= 0:
        raise ValueError('Normalizers should be positive, got nc=%r, np=%r'
                         % (nc, np_))
    return math.sqrt((dc / nc) ** 2 + (dp / np_) ** 2)


def _color_planes(image, color_space):
    if color_space == 'hsv':
        return image.hsv * 255.0
    return image.rgb


def _gradient(planes):
    padded = np.pad(planes, ((1, 1), (1, 1), (0, 0)), mode='edge')
    dx = padded[1:-1, 2:] - padded[1:-1, :-2]
    dy = padded[2:, 1:-1] - padded[:-2, 1:-1]
    return (dx ** 2).sum(axis=2) + (dy ** 2).sum(axis=2)


def _grid_centers(height, width, n_superpixels):
    step = math.sqrt(height * width / float(n_superpixels))
    nx = math.sqrt(n_superpixels * width / float(height))
    nx = int(math.ceil(nx - 1e-9))
    nx = max(1, min(width, nx))
    ny = max(1, min(height, int(round(n_superpixels / float(nx)))))
    ys = [int((i + 0.5) * height / ny) for i in range(ny)]
    xs = [int((j + 0.5) * width / nx) for j in range(nx)]
    return step, [(y, x) for y in ys for x in xs]


# (0, 0) first: ties keep the grid position.
_NEIGHBOURHOOD = [(0, 0)] + [(dy, dx) for dy in (-1, 0, 1) for dx in (-1, 0, 1)
                             if (dy, dx) != (0, 0)]


def _perturb(centers, gradient):
    height, width = gradient.shape
    moved = []
    for y, x in centers:
        best = None
        for dy, dx in _NEIGHBOURHOOD:
            yy, xx = y + dy, x + dx
            if 0 <= yy < height and 0 <= xx < width:
                if best is None or gradient[yy, xx] < best[0]:
                    best = (gradient[yy, xx], yy, xx)
        moved.append((best[1], best[2]))
    return moved


def _assign_rows(r0, r1, planes, centers, step, compactness):
    """Assigns rows ``[r0, r1)`` to the nearest center inside its window.

    Centers are visited in label order and only strictly smaller distances
    replace the current label, so equal distances keep the lowest label.
    """
    width = planes.shape[1]
    labels = np.full((r1 - r0, width), -1, dtype=np.int64)
    dist = np.full((r1 - r0, width), np.inf)
    inv_c = 1.0 / compactness ** 2
    inv_p = 1.0 / step ** 2
    for k, center in enumerate(centers):
        cy, cx = center[0], center[1]
        y0 = max(int(math.ceil(cy - step)), r0)
        y1 = min(int(math.floor(cy + step)) + 1, r1)
        x0 = max(int(math.ceil(cx - step)), 0)
        x1 = min(int(math.floor(cx + step)) + 1, width)
        if y0 >= y1 or x0 >= x1:
            continue
        window = planes[y0:y1, x0:x1]
        dc = ((window - center[2:]) ** 2).sum(axis=2)
        ys = np.arange(y0, y1)[:, None] - cy
        xs = np.arange(x0, x1)[None, :] - cx
        d = dc * inv_c + (ys ** 2 + xs ** 2) * inv_p
        region = dist[y0 - r0:y1 - r0, x0:x1]
        closer = d < region
        region[closer] = d[closer]
        labels[y0 - r0:y1 - r0, x0:x1][closer] = k
    orphans = np.nonzero(labels < 0)
    if orphans[0].size:
        # nobody's window reached these pixels, fall back to all centers
        rows, cols = orphans[0] + r0, orphans[1]
        cs = np.asarray(centers)
        dc = ((planes[rows, cols][:, None, :] - cs[None, :, 2:]) ** 2).sum(2)
        dp = (rows[:, None] - cs[None, :, 0]) ** 2 + \
             (cols[:, None] - cs[None, :, 1]) ** 2
        d = dc * inv_c + dp * inv_p
        nearest = np.argmin(d, axis=1)
        labels[orphans] = nearest
        dist[orphans] = d[np.arange(nearest.size), nearest]
    return labels, dist


def _assign(planes, centers, step, compactness, workers):
    height = planes.shape[0]
    if workers <= 1 or height < 2 * workers:
        return _assign_rows(0, height, planes, centers, step, compactness)
    bounds = np.linspace(0, height, workers + 1).astype(int)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(
            lambda band: _assign_rows(band[0], band[1], planes, centers,
                                      step, compactness),
            zip(bounds[:-1], bounds[1:])))
    labels = np.vstack([part[0] for part in parts])
    dist = np.vstack([part[1] for part in parts])
    return labels, dist


def _update_centers(labels, planes, centers):
    count = len(centers)
    flat = labels.ravel()
    sizes = np.bincount(flat, minlength=count).astype(np.float64)
    rows, cols = np.indices(labels.shape)
    features = [rows.ravel(), cols.ravel()] + \
               [planes[..., c].ravel() for c in range(planes.shape[2])]
    updated = np.array(centers, dtype=np.float64)
    occupied = sizes > 0
    for idx, values in enumerate(features):
        sums = np.bincount(flat, weights=values, minlength=count)
        updated[occupied, idx] = sums[occupied] / sizes[occupied]
    return updated


def _enforce_connectivity(labels, min_region):
    """Splits labels into 4-connected components and merges components
    smaller than `min_region` into their largest adjacent component."""
    components = measure.label(labels + 1, connectivity=1, background=0)
    components -= 1
    count = int(components.max()) + 1
    sizes = np.bincount(components.ravel(), minlength=count)
    small = np.nonzero(sizes < min_region)[0]
    if count == 1 or not small.size:
        return components
    pairs = np.concatenate([
        np.stack([components[:, :-1].ravel(), components[:, 1:].ravel()], 1),
        np.stack([components[:-1, :].ravel(), components[1:, :].ravel()], 1),
    ])
    pairs = pairs[pairs[:, 0] != pairs[:, 1]]
    pairs = np.unique(np.vstack([pairs, pairs[:, ::-1]]), axis=0)
    neighbours = {}
    for a, b in pairs:
        neighbours.setdefault(int(a), []).append(int(b))
    parent = np.arange(count)
    size = sizes.copy()

    def find(idx):
        while parent[idx] != idx:
            parent[idx] = parent[parent[idx]]
            idx = parent[idx]
        return idx

    for comp in small:
        root = find(comp)
        if size[root] >= min_region:
            continue
        best = None
        for other in neighbours.get(int(comp), ()):
            other = find(other)
            if other == root:
                continue
            if best is None or size[other] > size[best] or \
                    (size[other] == size[best] and other < best):
                best = other
        if best is None:
            continue
        parent[root] = best
        size[best] += size[root]
    roots = np.array([find(idx) for idx in range(count)])
    return roots[components]


def segment(image, params):
    """Segments `image` into superpixels.

    :param image: Frame or sub-image view.
    :type image: :class:`~sptrack.imgproc.Frame`

    :param params: Segmentation parameters.
    :type params: :class:`SlicParams`

    :rtype: :class:`Segmentation`

    :raises: :exc:`~sptrack.exceptions.SegmentationError` if more
             superpixels than pixels are requested.
    """
    height, width = image.shape
    if params.n_superpixels > height * width:
        raise SegmentationError('%d superpixels requested for %d pixels'
                                % (params.n_superpixels, height * width))
    planes = _color_planes(image, params.color_space)
    step, grid = _grid_centers(height, width, params.n_superpixels)
    grid = _perturb(grid, _gradient(planes))
    centers = np.array([[y, x] + list(planes[y, x]) for y, x in grid],
                       dtype=np.float64)

    labels = None
    objective = []
    for iteration in range(params.max_iters):
        new_labels, dist = _assign(planes, centers, step,
                                   params.compactness, params.workers)
        objective.append(float(dist.sum()))
        if labels is not None and np.array_equal(labels, new_labels):
            break
        labels = new_labels
        centers = _update_centers(labels, planes, centers)

    min_region = params.min_region
    if min_region is None:
        min_region = step * step / 16.0
    components = _enforce_connectivity(labels, min_region)
    _, label_map = np.unique(components, return_inverse=True)
    label_map = label_map.reshape(components.shape)
    log.debug('segmented %dx%d image into %d superpixels (requested %d) '
              'in %d iterations', width, height, label_map.max() + 1,
              params.n_superpixels, len(objective))
    segmentation = Segmentation(label_map, [], objective)
    segmentation.superpixels = superpixel_stats(segmentation, image)
    return segmentation


def superpixel_stats(segmentation, frame):
    """Computes centroid and channel means of every superpixel.

    Hue is averaged on the circle, so ``{0.95, 0.05}`` averages to ``0``.

    :rtype: list of :class:`Superpixel`
    """
    label_map = segmentation.label_map
    if label_map.shape != frame.shape:
        raise ValueError('Label map %r does not match frame %r'
                         % (label_map.shape, frame.shape))
    flat = label_map.ravel()
    count = int(flat.max()) + 1
    sizes = np.bincount(flat, minlength=count).astype(np.float64)

    def mean(values):
        return np.bincount(flat, weights=values.ravel(),
                           minlength=count) / np.maximum(sizes, 1)

    rows, cols = np.indices(label_map.shape)
    hsv = frame.hsv
    angle = 2 * np.pi * hsv[..., 0]
    hue = np.arctan2(mean(np.sin(angle)), mean(np.cos(angle))) / (2 * np.pi)
    hue = np.mod(hue, 1.0)
    hue[hue >= 1.0 - 1e-12] = 0.0
    us, vs = mean(cols), mean(rows)
    sat, gray = mean(hsv[..., 1]), mean(frame.gray)
    red, green, blue = [mean(frame.rgb[..., c]) for c in range(3)]
    return [Superpixel(label, int(sizes[label]), (us[label], vs[label]),
                       frame.origin, sat[label], hue[label], gray[label],
                       red[label], green[label], blue[label])
            for label in range(count) if sizes[label] > 0]


def boundary_recall(label_map, truth_map, tol=1):
    """Fraction of ground truth boundary pixels that lie within `tol`
    pixels (chessboard distance) of a superpixel boundary."""
    truth = skseg.find_boundaries(truth_map, mode='inner')
    found = skseg.find_boundaries(label_map, mode='thick')
    if not truth.any():
        return 1.0
    if tol > 0:
        found = ndimage.binary_dilation(found, iterations=tol,
                                        structure=np.ones((3, 3), bool))
    return float((truth & found).sum()) / truth.sum()


def save_label_map(path, segmentation):
    """Writes label map as 16-bit grayscale PNG."""
    io.imsave(path, segmentation.label_map.astype(np.uint16),
              check_contrast=False)


def save_overlay(path, segmentation, frame):
    """Writes frame with superpixel boundaries drawn over it."""
    overlay = skseg.mark_boundaries(frame.rgb / 255.0, segmentation.label_map,
                                    color=(1, 1, 0))
    io.imsave(path, (overlay * 255).round().astype(np.uint8),
              check_contrast=False)
