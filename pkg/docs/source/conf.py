# -*- coding: utf-8 -*-
#
# afalab documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys, os

# If extensions (or modules to document with autodoc) are in another
# directory, add these directories to sys.path here.
sys.path.insert(0, os.path.abspath('../../'))

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx',
        'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'afalab'
copyright = u'2026, the afalab developers'

version = '0.1'
release = '0.1.0'

exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'default'
htmlhelp_basename = 'afalabdoc'

latex_elements = {
}
latex_documents = [
  ('index', 'afalab.tex', u'afalab Documentation',
   u'afalab developers', 'manual'),
]

man_pages = [
    ('index', 'afalab', u'afalab Documentation',
     [u'afalab developers'], 1)
]

texinfo_documents = [
  ('index', 'afalab', u'afalab Documentation',
   u'afalab developers', 'afalab',
   'Exact simulation and analysis of affine finite automata.',
   'Miscellaneous'),
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}
