# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 The sptrack developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import sys
from .cli import main

sys.exit(main())
