"""Optional compiled-kernel build.

The package is pure Python; if Cython and a C compiler are present the
integer geometry kernels in ``_kernels_cy.pyx`` are compiled and picked up
at import time, otherwise the pure twin ``_kernels_py`` is used. Set
PI1LAB_NO_EXT=1 to skip the extension build entirely.
"""
import os

from setuptools import setup

ext_modules = []
if os.environ.get("PI1LAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/pi1lab/_kernels_cy.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
