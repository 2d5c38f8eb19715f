# -*- coding: utf-8 -*-
#
# sptrack documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from sptrack import __version__

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx',
              'sphinx.ext.viewcode']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'sptrack'
copyright = u'2026, The sptrack developers'

# The short X.Y version.
version = '.'.join(__version__.split('.')[:2])
# The full version, including alpha/beta/rc tags.
release = __version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'
autodoc_member_order = 'bysource'

# -- Options for HTML output --------------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'sptrackdoc'

# -- Options for LaTeX output -------------------------------------------------

latex_documents = [
    ('index', 'sptrack.tex', u'sptrack Documentation',
     u'The sptrack developers', 'manual'),
]

# -- Options for manual page output -------------------------------------------

man_pages = [
    ('index', 'sptrack', u'sptrack Documentation',
     [u'The sptrack developers'], 1)
]

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'skimage': ('https://scikit-image.org/docs/stable', None),
}
