"""Build script for the optional compiled statistics kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so a missing Cython or a failed compile is not fatal.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("pqeuler._statcore", ["src/pqeuler/_statcore.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
