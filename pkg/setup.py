"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time).  Set NCLINDEP_NO_EXT=1 to skip the
compile step entirely, e.g. on machines without a C toolchain.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("NCLINDEP_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("nclindep._accel", ["src/nclindep/_accel.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
