"""Build script: compiles the optional fast kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time), so a failed compile is downgraded to a warning.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("ANTIMORPH_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext = Extension("antimorph._fastops", ["src/antimorph/_fastops.pyx"])
        ext.optional = True
        ext_modules = cythonize([ext], language_level="3")
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
