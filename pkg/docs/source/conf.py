# Configuration file for the Sphinx documentation builder.
#
# See https://www.sphinx-doc.org/en/master/usage/configuration.html for
# the whole list of options.
import os
import re
import sys

ROOT = os.path.abspath('../..')
sys.path.insert(0, ROOT)

# -- Project information -----------------------------------------------------

project = 'circlemorse'
copyright = '2026, Alberto Díaz-Álvarez'
author = 'Alberto Díaz-Álvarez'

with open(os.path.join(ROOT, 'circlemorse', '__init__.py')) as f:
    release = re.search(r"__version__ = '([^']+)'", f.read()).group(1)

# -- General configuration ---------------------------------------------------

extensions = [
    'rinoh.frontend.sphinx',
    'sphinx.ext.autodoc',
]
autodoc_member_order = 'bysource'
templates_path = ['_templates']
exclude_patterns = []

# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
master_doc = 'index'
