# Sphinx configuration for the interlace-kit documentation

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))

from interlacekit import __version__

project = 'interlace-kit'
copyright = '2026, The interlace-kit authors'
author = 'The interlace-kit authors'
release = __version__

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.coverage',
              'sphinx.ext.napoleon', 'sphinxarg.ext']

templates_path = ['_templates']
exclude_patterns = []

html_theme = 'classic'
html_static_path = ['_static']
