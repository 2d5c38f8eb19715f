# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

"""Configuration.

The configuration file is JSON with one object per section::

    {
        "kalman": {"process_noise": 0.05, "measurement_noise": 0.5},
        "match": {"weights": [3, 1, 3, 2, 2, 1, 3],
                  "gate": {"max_jump_px": 50, "max_appearance": 0.35}},
        "slic": {"compactness": 10, "count": {"knee": 7000}},
        "tracker": {"mode": "3d", "roi": [100, 100]},
        "synth": {"tol_px": 10}
    }

Nested objects are flattened to dotted keys (``match.gate.max_jump_px``).
Every section is a :class:`~sptrack.mapping.Mapping`, so values are type
checked and unknown keys are rejected by name. ``slic.count.<marker>`` keys
are free form: they override the superpixel count of a single marker.

+-------------------------------+----------------------------+
| Key                           | Default                    |
+===============================+============================+
| kalman.process_noise          | 0.05                       |
| kalman.measurement_noise      | 0.5                        |
| kalman.init_pos_var           | 0.5                        |
| kalman.init_vel_var           | 1.0                        |
| match.weights                 | [3, 1, 3, 2, 2, 1, 3]      |
| match.gate.max_jump_px        | 50                         |
| match.gate.max_appearance     | 0.35                       |
| slic.compactness              | 10                         |
| slic.max_iters                | 10                         |
| slic.min_region               | S * S / 16                 |
| slic.color_space              | rgb                        |
| slic.init_count               | 10000                      |
| slic.workers                  | 1                          |
| slic.count.<marker>           | from the marker size       |
| tracker.mode                  | 3d                         |
| tracker.segmenter             | slic                       |
| tracker.roi                   | [100, 100]                 |
| tracker.init_padding          | 100                        |
| tracker.loss_threshold        | 25                         |
| tracker.max_residual_px       | 8                          |
| tracker.workers               | 1                          |
| tracker.frame_size            | [2048, 700]                |
| tracker.markers               | [toe, ankle, knee, hip,    |
|                               | asis]                      |
| synth.tol_px                  | 10                         |
| synth.seed                    | 0                          |
+-------------------------------+----------------------------+
"""

import json
import logging
from .constants import (
    GATE_MAX_APPEARANCE, GATE_MAX_JUMP, INIT_PADDING, LOSS_THRESHOLD,
    MARKERS, MAX_RESIDUAL, MODE_2D, MODE_3D, REFERENCE_FRAME, ROI_SIZE,
    WEIGHTS
)
from .exceptions import ConfigError
from .kalman3d import KalmanConfig
from .mapping import (
    Mapping, FloatField, IntegerField, ListField, SetField, TextField
)
from .matcher import Gate, Weights
from .slic import COLOR_SPACES, SlicParams

log = logging.getLogger(__name__)

__all__ = ['Config', 'load']

#: Separator of nested keys inside a section field name.
NESTED_SEP = '__'


class Section(Mapping):
    """Configuration section mapping class."""


class KalmanSection(Section):
    process_noise = FloatField(default=0.05, positive=True)
    measurement_noise = FloatField(default=0.5, positive=True)
    init_pos_var = FloatField(default=0.5, positive=True)
    init_vel_var = FloatField(default=1.0, positive=True)


class MatchSection(Section):
    weights = ListField(FloatField(positive=True), default=WEIGHTS, length=7)
    gate__max_jump_px = FloatField(default=GATE_MAX_JUMP, positive=True)
    gate__max_appearance = FloatField(default=GATE_MAX_APPEARANCE,
                                      positive=True)


class SlicSection(Section):
    compactness = FloatField(default=10.0, positive=True)
    max_iters = IntegerField(default=10, minimum=1)
    min_region = FloatField(positive=True)
    color_space = SetField(default='rgb', values=COLOR_SPACES)
    init_count = IntegerField(default=10000, minimum=1)
    workers = IntegerField(default=1, minimum=1)


class TrackerSection(Section):
    mode = SetField(default=MODE_3D, values=(MODE_3D, MODE_2D))
    segmenter = SetField(default='slic', values=('slic', 'threshold'))
    roi = ListField(IntegerField(minimum=1), default=ROI_SIZE, length=2)
    init_padding = IntegerField(default=INIT_PADDING, minimum=0)
    loss_threshold = IntegerField(default=LOSS_THRESHOLD, minimum=1)
    max_residual_px = FloatField(default=MAX_RESIDUAL, positive=True)
    workers = IntegerField(default=1, minimum=1)
    frame_size = ListField(IntegerField(minimum=1), default=REFERENCE_FRAME,
                           length=2)
    markers = ListField(TextField(), default=MARKERS)


class SynthSection(Section):
    tol_px = FloatField(default=10.0)
    seed = IntegerField(default=0, minimum=0)


SECTIONS = {
    'kalman': KalmanSection,
    'match': MatchSection,
    'slic': SlicSection,
    'tracker': TrackerSection,
    'synth': SynthSection,
}


def flatten(data, prefix=''):
    """Flattens nested dict into ``{dotted.key: value}``."""
    items = {}
    for key, value in data.items():
        name = prefix + str(key)
        if isinstance(value, dict):
            items.update(flatten(value, name + '.'))
        else:
            items[name] = value
    return items


class Config(object):
    """Validated configuration.

    :param data: Nested or flat (dotted keys) dict.
    :raises: :exc:`~sptrack.exceptions.ConfigError` naming the first
             unknown or invalid key.
    """

    def __init__(self, data=None):
        self.sections = dict((name, mapping())
                             for name, mapping in SECTIONS.items())
        self.counts = {}
        for key, value in sorted(flatten(data or {}).items()):
            self.set(key, value)

    def _set_count(self, key, marker, value):
        if not marker or '.' in marker:
            raise ConfigError(key, 'unknown configuration key')
        try:
            self.counts[marker] = IntegerField(minimum=1)._set_value(value)
        except (TypeError, ValueError) as err:
            raise ConfigError(key, str(err))

    def get(self, key):
        """Value of dotted `key`."""
        section, _, rest = key.partition('.')
        if section == 'slic' and rest.startswith('count.'):
            return self.counts.get(rest[len('count.'):])
        if section not in self.sections or NESTED_SEP in rest:
            raise ConfigError(key, 'unknown configuration key')
        attr = rest.replace('.', NESTED_SEP)
        if attr not in SECTIONS[section].keys():
            raise ConfigError(key, 'unknown configuration key')
        return getattr(self.sections[section], attr)

    def set(self, key, value):
        """Overrides dotted `key`, used for command line flags."""
        section, _, rest = key.partition('.')
        if section == 'slic' and rest.startswith('count.'):
            return self._set_count(key, rest[len('count.'):], value)
        self.get(key)
        try:
            setattr(self.sections[section], rest.replace('.', NESTED_SEP),
                    value)
        except (TypeError, ValueError) as err:
            raise ConfigError(key, str(err))

    def as_dict(self):
        data = {}
        for name, section in sorted(self.sections.items()):
            for attr, value in section.items():
                key = '%s.%s' % (name, attr.replace(NESTED_SEP, '.'))
                data[key] = list(value) if isinstance(value, tuple) else value
        for marker, count in sorted(self.counts.items()):
            data['slic.count.%s' % marker] = count
        return data

    @property
    def kalman(self):
        section = self.sections['kalman']
        return KalmanConfig(section.process_noise, section.measurement_noise,
                            section.init_pos_var, section.init_vel_var)

    @property
    def weights(self):
        return Weights(self.sections['match'].weights)

    @property
    def gate(self):
        section = self.sections['match']
        return Gate(section.gate__max_jump_px, section.gate__max_appearance)

    def slic_params(self, n_superpixels):
        section = self.sections['slic']
        return SlicParams(n_superpixels, section.compactness,
                          section.max_iters, section.min_region,
                          section.color_space, section.workers)

    def marker_count(self, marker):
        """Frame-level superpixel count override of `marker`, if any."""
        return self.counts.get(marker)


def load(path):
    """Reads configuration file.

    :raises: :exc:`~sptrack.exceptions.ConfigError` on unreadable JSON or
             invalid keys.
    """
    with open(path, 'r') as fobj:
        try:
            data = json.load(fobj)
        except ValueError as err:
            raise ConfigError(str(path), 'invalid JSON: %s' % err)
    if not isinstance(data, dict):
        raise ConfigError(str(path), 'JSON object expected at top level')
    log.debug('loaded configuration from %s', path)
    return Config(data)
