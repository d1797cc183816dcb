"""Build script: compiles the optional bitmask-scan extension.

The package works without the extension (a pure-Python fallback is selected
at import time); set COVERFREE_NO_EXT=1 to skip the build explicitly.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("COVERFREE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("coverfree._fastscan", ["src/coverfree/_fastscan.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
