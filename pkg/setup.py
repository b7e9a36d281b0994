"""Build hook for the optional compiled kernels.

The package works without them: ``equiareal._core`` falls back to the
pure-Python kernels when the extension is missing. Set
``EQUIAREAL_NO_EXT=1`` to skip compilation.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("EQUIAREAL_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "equiareal._kernels",
                    ["src/equiareal/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
