import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("POLYATTAIN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("polyattain._core", ["src/polyattain/_core.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install the pure-Python package; the kernel selector
        # falls back to polyattain._core_py at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
