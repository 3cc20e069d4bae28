"""Build script for the optional compiled kernels.

The package is fully functional without the extension (the pure-Python
kernels are selected at import time), so a missing compiler or Cython
only costs speed.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "monodom._kernels._fast",
                ["src/monodom/_kernels/_fast.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )
except ImportError:
    print("Cython not available; installing with pure-Python kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
