"""Build script: compiles the optional C speedup core.

The package works without the extension (a pure-Python twin is selected at
import time), so a failed compile only costs speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("rightgroups._speedups", ["src/rightgroups/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
