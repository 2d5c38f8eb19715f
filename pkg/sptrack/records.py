# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""CSV record structures.

Each record class below is the row layout of one file exchanged by the
command line tools. Field order is the column order, field names are the
header names.
"""

from .constants import CONDITIONS, STATUSES
from .mapping import (
    Mapping, FloatField, IntegerField, SetField, TextField
)

__all__ = ['Record', 'ObjectPointRecord', 'ObservationRecord',
           'CameraRecord', 'ClickRecord', 'TrajectoryRecord', 'TruthRecord',
           'ReportRecord']


class Record(Mapping):
    """CSV row mapping class."""


#: Calibration object ball with known object-space coordinates.
ObjectPointRecord = Record.build(
    IntegerField(name='ball_id', required=True, minimum=0),
    FloatField(name='x', required=True),
    FloatField(name='y', required=True),
    FloatField(name='z', required=True),
)

#: Digitized image position of a calibration ball in one camera.
ObservationRecord = Record.build(
    IntegerField(name='ball_id', required=True, minimum=0),
    IntegerField(name='cam_id', required=True, minimum=0),
    FloatField(name='u', required=True),
    FloatField(name='v', required=True),
)

#: DLT coefficients of one camera.
CameraRecord = Record.build(
    IntegerField(name='cam_id', required=True, minimum=0),
    *[FloatField(name='L%d' % idx, required=True) for idx in range(1, 12)]
)

#: Initialization click.
ClickRecord = Record.build(
    IntegerField(name='frame', required=True, minimum=0),
    IntegerField(name='cam_id', required=True, minimum=0),
    TextField(name='marker_name', required=True),
    FloatField(name='u', required=True),
    FloatField(name='v', required=True),
)

#: +-----+------------+----------------------------------------------------+
#: |  #  | Column     | Meaning                                            |
#: +=====+============+====================================================+
#: |   1 | frame      | frame index n                                      |
#: +-----+------------+----------------------------------------------------+
#: |   2 | marker     | marker name                                        |
#: +-----+------------+----------------------------------------------------+
#: | 3-6 | camK_u/v   | 2D point per camera (detection, or the projected   |
#: |     |            | prediction when that camera was rejected)          |
#: +-----+------------+----------------------------------------------------+
#: | 7-9 | x, y, z    | triangulated point, empty unless every camera      |
#: |     |            | accepted                                           |
#: +-----+------------+----------------------------------------------------+
#: |  10 | score      | weighted mismatch of the selected superpixel       |
#: +-----+------------+----------------------------------------------------+
#: |  11 | status     | tracked, coasting or lost                          |
#: +-----+------------+----------------------------------------------------+
#:
TrajectoryRecord = Record.build(
    IntegerField(name='frame', required=True, minimum=0),
    TextField(name='marker', required=True),
    FloatField(name='cam0_u'),
    FloatField(name='cam0_v'),
    FloatField(name='cam1_u'),
    FloatField(name='cam1_v'),
    FloatField(name='x'),
    FloatField(name='y'),
    FloatField(name='z'),
    FloatField(name='score'),
    SetField(name='status', required=True, values=STATUSES),
)

#: Ground truth of one marker in one synthetic frame.
TruthRecord = Record.build(
    IntegerField(name='frame', required=True, minimum=0),
    TextField(name='marker', required=True),
    FloatField(name='x', required=True),
    FloatField(name='y', required=True),
    FloatField(name='z', required=True),
    FloatField(name='cam0_u', required=True),
    FloatField(name='cam0_v', required=True),
    IntegerField(name='cam0_visible', required=True, minimum=0),
    FloatField(name='cam1_u', required=True),
    FloatField(name='cam1_v', required=True),
    IntegerField(name='cam1_visible', required=True, minimum=0),
    SetField(name='condition', required=True, values=CONDITIONS),
    FloatField(name='radius', required=True, positive=True),
)

#: One row of the evaluation report.
ReportRecord = Record.build(
    TextField(name='condition', required=True),
    IntegerField(name='frames', required=True, minimum=0),
    IntegerField(name='markers', required=True, minimum=0),
    IntegerField(name='correct', required=True, minimum=0),
    FloatField(name='percentage'),
    FloatField(name='reference_thre_2d'),
    FloatField(name='reference_2d'),
    FloatField(name='reference_3d'),
)
