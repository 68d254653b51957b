# -*- coding: utf-8 -*-
#
# koszulkit documentation build configuration file.
#
# Only the values that differ from the Sphinx defaults are set here.
import os
import sys

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath(".."))

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.todo",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = u"koszulkit"
copyright = u"2026, koszulkit developers"

# The short X.Y version.
version = "0.3"
# The full version, including alpha/beta/rc tags.
release = "0.3.0"

exclude_patterns = ["_build"]
pygments_style = "sphinx"

# Members keep the order of the source so module docs read top to bottom.
autodoc_member_order = "bysource"

html_theme = "sphinx_rtd_theme"
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ["_static"]
htmlhelp_basename = "koszulkitdoc"

latex_elements = {}
latex_documents = [("index", "koszulkit.tex", u"koszulkit Documentation", u"koszulkit developers", "manual")]

man_pages = [("index", "koszulkit", u"koszulkit Documentation", [u"koszulkit developers"], 1)]

texinfo_documents = [
    (
        "index",
        "koszulkit",
        u"koszulkit Documentation",
        u"koszulkit developers",
        "koszulkit",
        "Koszulity checks for truncations of combinatorial categories over FI",
        "Mathematics",
    )
]

intersphinx_mapping = {"python": ("https://docs.python.org/3", None)}
