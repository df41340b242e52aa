"""Builds the optional compiled kernel.

The package works without it (a pure-Python fallback is selected at
import time), so the extension is skipped when Cython is unavailable.

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("asymtree._kernel", ["src/asymtree/_kernel.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
