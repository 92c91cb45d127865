#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# coxperron documentation build configuration file.

import sys
import os

import sphinx_daniel_theme

# Get the project root dir, which is the parent dir of this
cwd = os.getcwd()
project_root = os.path.dirname(cwd)

# Insert the project root dir as the first element in the PYTHONPATH.
sys.path.insert(0, project_root)

import coxperron

# -- General configuration ---------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.viewcode',
              'sphinx.ext.autosummary',
              'sphinx.ext.mathjax',
              'numpydoc']

numpydoc_show_class_members = False

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'coxperron'
copyright = u'2026, Daniel Williams'

version = coxperron.__version__
release = coxperron.__version__

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------

html_theme = 'daniel'
html_theme_path = sphinx_daniel_theme.get_html_theme_path()
html_theme_options = {
    # Render the next and previous page links in navbar. (Default: true)
    'navbar_sidebarrel': False,
}

html_static_path = ['_static']
render_sidebar = True
html_sidebars = {'**': ['localtoc.html', 'sourcelink.html', 'searchbox.html']}

htmlhelp_basename = 'coxperrondoc'

# -- Options for LaTeX output ------------------------------------------

latex_elements = {}

latex_documents = [
    ('index', 'coxperron.tex',
     u'coxperron Documentation',
     u'Daniel Williams', 'manual'),
]

# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'coxperron',
     u'coxperron Documentation',
     [u'Daniel Williams'], 1)
]

# -- Options for Texinfo output ----------------------------------------

texinfo_documents = [
    ('index', 'coxperron',
     u'coxperron Documentation',
     u'Daniel Williams',
     'coxperron',
     'Exact growth functions of Coxeter groups and Perron certificates.',
     'Miscellaneous'),
]
