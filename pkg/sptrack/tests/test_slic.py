# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import math
import os
import unittest
import numpy as np
from hypothesis import given, settings, strategies as st
from skimage import io, measure
from sptrack import slic
from sptrack.exceptions import SegmentationError
from sptrack.imgproc import Frame, Roi
from sptrack.slic import SlicParams, Segmentation
from sptrack.tests.utils import (
    TempDirMixIn, disc_frame, solid_frame, two_region_frame
)


def noise_frame(width, height, seed=0):
    rng = np.random.default_rng(seed)
    return Frame(rng.integers(0, 256, (height, width, 3)).astype(float))


class DistanceTestCase(unittest.TestCase):

    def test_color(self):
        self.assertAlmostEqual(slic.color_distance((10, 20, 30),
                                                   (60, 20, 90)),
                               78.102, places=3)
        self.assertAlmostEqual(slic.color_distance((0, 0, 0), (6, 8, 0)), 10)

    def test_spatial(self):
        self.assertEqual(slic.spatial_distance((0, 0), (3, 4)), 5.0)
        self.assertAlmostEqual(slic.spatial_distance((5, 5), (17, 13)),
                               14.422, places=3)

    def test_combined(self):
        self.assertAlmostEqual(slic.combined_distance(10, 20, 10, 20),
                               math.sqrt(2))
        self.assertAlmostEqual(slic.combined_distance(20, 40, 10, 20),
                               2.828, places=3)
        self.assertEqual(slic.combined_distance(0, 0, 10, 20), 0.0)

    def test_fail_non_positive_normalizer(self):
        self.assertRaises(ValueError, slic.combined_distance, 1, 1, 0, 1)
        self.assertRaises(ValueError, slic.combined_distance, 1, 1, 1, -2)


class ParamsTestCase(unittest.TestCase):

    def test_defaults(self):
        params = SlicParams(100)
        self.assertEqual(params.compactness, 10.0)
        self.assertEqual(params.max_iters, 10)
        self.assertEqual(params.color_space, 'rgb')

    def test_fail_bad_values(self):
        self.assertRaises(ValueError, SlicParams, 0)
        self.assertRaises(ValueError, SlicParams, 10, compactness=0)
        self.assertRaises(ValueError, SlicParams, 10, max_iters=0)
        self.assertRaises(ValueError, SlicParams, 10, color_space='lab')

    def test_replace(self):
        params = SlicParams(100, compactness=20).replace(n_superpixels=7)
        self.assertEqual(params.n_superpixels, 7)
        self.assertEqual(params.compactness, 20.0)


class SegmentTestCase(unittest.TestCase):

    def test_uniform_image_gives_grid(self):
        seg = slic.segment(solid_frame(100, 100), SlicParams(4))
        self.assertEqual(len(seg), 4)
        for sp in seg.superpixels:
            self.assertTrue(2300 <= sp.pixel_count <= 2700, sp)
        centroids = sorted((round(sp.centroid[0]), round(sp.centroid[1]))
                           for sp in seg.superpixels)
        for (u, v), (eu, ev) in zip(centroids, [(25, 25), (25, 75),
                                                (75, 25), (75, 75)]):
            self.assertTrue(abs(u - eu) <= 1 and abs(v - ev) <= 1,
                            centroids)

    def test_two_regions_split_at_edge(self):
        frame, truth = two_region_frame(100, 100, split=50, left=(0, 0, 0),
                                        right=(255, 255, 255))
        seg = slic.segment(frame, SlicParams(2))
        self.assertEqual(len(seg), 2)
        left = seg.label_map[:, 0:1] == seg.label_map
        wrong = (left != (truth == 0)).sum()
        self.assertTrue(wrong <= 100, wrong)

    def test_marker_isolated(self):
        frame = disc_frame(200, 100, [(100, 50)], radius=6)
        seg = slic.segment(frame, SlicParams(350))
        sp = seg.superpixels[seg.label_at(100, 50)]
        self.assertTrue(sp.mean_s > 0.6, sp)
        self.assertTrue(math.hypot(sp.centroid[0] - 100,
                                   sp.centroid[1] - 50) < 6, sp)

    def test_fail_more_superpixels_than_pixels(self):
        self.assertRaises(SegmentationError, slic.segment,
                          solid_frame(4, 3), SlicParams(13))

    def test_single_superpixel(self):
        seg = slic.segment(noise_frame(12, 9), SlicParams(1))
        self.assertEqual(len(seg), 1)
        self.assertEqual(seg.superpixels[0].pixel_count, 108)

    def test_sub_image_reports_frame_centroid(self):
        frame = solid_frame(40, 30).crop(Roi(10, 5, 20, 20))
        seg = slic.segment(frame, SlicParams(1))
        u, v = seg.superpixels[0].frame_centroid
        self.assertAlmostEqual(u, 10 + 9.5)
        self.assertAlmostEqual(v, 5 + 9.5)

    def test_deterministic_across_workers(self):
        frame = noise_frame(60, 40, seed=5)
        single = slic.segment(frame, SlicParams(30, workers=1))
        pooled = slic.segment(frame, SlicParams(30, workers=3))
        np.testing.assert_array_equal(single.label_map, pooled.label_map)
        self.assertEqual(single.objective, pooled.objective)

    def test_objective_does_not_grow(self):
        frame, _ = two_region_frame(noise=4.0)
        seg = slic.segment(frame, SlicParams(16))
        self.assertTrue(seg.objective)
        self.assertTrue(seg.objective[-1] <= seg.objective[0] + 1e-9,
                        seg.objective)

    def test_hsv_color_space(self):
        frame, truth = two_region_frame(left=(200, 30, 30),
                                        right=(30, 30, 200))
        seg = slic.segment(frame, SlicParams(16, color_space='hsv'))
        self.assertTrue(slic.boundary_recall(seg.label_map, truth) >= 0.9)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=4, max_value=20),
           st.integers(min_value=4, max_value=20),
           st.integers(min_value=1, max_value=40),
           st.integers(min_value=0, max_value=2 ** 16))
    def test_partition(self, width, height, count, seed):
        count = min(count, width * height)
        seg = slic.segment(noise_frame(width, height, seed),
                           SlicParams(count))
        labels = seg.label_map
        self.assertEqual(labels.shape, (height, width))
        self.assertEqual(sorted(np.unique(labels)), list(range(len(seg))))
        self.assertEqual(sum(sp.pixel_count for sp in seg.superpixels),
                         width * height)
        for idx, sp in enumerate(seg.superpixels):
            self.assertEqual(sp.label, idx)
        # every label is a single 4-connected region
        components = measure.label(labels + 1, connectivity=1, background=0)
        self.assertEqual(components.max(), len(seg))


class StatsTestCase(unittest.TestCase):

    def test_constant_image(self):
        frame = solid_frame(6, 4, (200, 100, 50))
        seg = Segmentation(np.zeros((4, 6), dtype=int), [])
        (sp,) = slic.superpixel_stats(seg, frame)
        self.assertEqual(sp.pixel_count, 24)
        self.assertAlmostEqual(sp.centroid[0], 2.5)
        self.assertAlmostEqual(sp.centroid[1], 1.5)
        h, s, v = frame.hsv[0, 0]
        self.assertAlmostEqual(sp.mean_h, h)
        self.assertAlmostEqual(sp.mean_s, s)
        self.assertAlmostEqual(sp.mean_g, frame.gray[0, 0])
        self.assertEqual((sp.mean_r, sp.mean_gr, sp.mean_b),
                         (200.0, 100.0, 50.0))

    def test_two_labels(self):
        rgb = np.zeros((2, 3, 3))
        rgb[:, 0] = (255, 255, 255)
        labels = np.array([[0, 1, 1], [0, 1, 1]])
        stats = slic.superpixel_stats(Segmentation(labels, []), Frame(rgb))
        self.assertEqual([sp.pixel_count for sp in stats], [2, 4])
        self.assertEqual(stats[0].centroid, (0.0, 0.5))
        self.assertEqual(stats[1].centroid, (1.5, 0.5))
        self.assertAlmostEqual(stats[0].mean_g, 1.0)
        self.assertAlmostEqual(stats[1].mean_g, 0.0)

    def test_circular_hue_mean(self):
        rgb = np.array([[[255, 76.5, 0], [255, 0, 76.5]]])
        frame = Frame(rgb)
        self.assertAlmostEqual(frame.hsv[0, 0, 0], 0.05)
        self.assertAlmostEqual(frame.hsv[0, 1, 0], 0.95)
        (sp,) = slic.superpixel_stats(
            Segmentation(np.zeros((1, 2), dtype=int), []), frame)
        self.assertTrue(min(sp.mean_h, 1 - sp.mean_h) < 1e-9, sp.mean_h)

    def test_fail_shape_mismatch(self):
        self.assertRaises(ValueError, slic.superpixel_stats,
                          Segmentation(np.zeros((2, 2), dtype=int), []),
                          solid_frame(3, 2))


class BoundaryRecallTestCase(unittest.TestCase):

    def check_recall(self, left, right):
        frame, truth = two_region_frame(left=left, right=right)
        seg = slic.segment(frame, SlicParams(16))
        recall = slic.boundary_recall(seg.label_map, truth)
        self.assertTrue(recall >= 0.9, recall)

    def test_high_contrast(self):
        self.check_recall((40, 40, 40), (200, 200, 200))

    def test_contrast_of_fifty(self):
        self.check_recall((100, 100, 100), (150, 150, 150))

    def test_no_truth_boundary(self):
        labels = np.zeros((5, 5), dtype=int)
        self.assertEqual(slic.boundary_recall(labels, labels), 1.0)

    def test_missed_boundary(self):
        truth = np.zeros((10, 10), dtype=int)
        truth[:, 5:] = 1
        self.assertEqual(slic.boundary_recall(np.zeros((10, 10), dtype=int),
                                              truth), 0.0)


class OutputTestCase(TempDirMixIn, unittest.TestCase):

    def setUp(self):
        super(OutputTestCase, self).setUp()
        self.frame, _ = two_region_frame()
        self.seg = slic.segment(self.frame, SlicParams(16))

    def test_label_map(self):
        path = self.path('labels.png')
        slic.save_label_map(path, self.seg)
        np.testing.assert_array_equal(io.imread(path), self.seg.label_map)

    def test_overlay(self):
        path = self.path('overlay.png')
        slic.save_overlay(path, self.seg, self.frame)
        self.assertTrue(os.path.exists(path))
        self.assertEqual(io.imread(path).shape, (48, 64, 3))


if __name__ == '__main__':
    unittest.main()
