"""Build script for the optional Cython kernels.

The package works without them; ``weilcorr.kernels`` falls back to the
pure-Python implementations when the extension is missing.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("WEILCORR_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("weilcorr.kernels._ckernels",
                       ["src/weilcorr/kernels/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
