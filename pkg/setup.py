"""Build script: compiles the optional kernel extension when Cython is present.

The package works without the extension; ``hypertree_lab.kernels`` falls back
to the pure Python twin at import time.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HYPERTREE_LAB_SKIP_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools.extension import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "hypertree_lab.kernels._ckernels",
                    ["src/hypertree_lab/kernels/_ckernels.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
