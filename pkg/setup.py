import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("twogrp._speedups", ["src/twogrp/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    print("Cython not available; building without the compiled kernel", file=sys.stderr)

setup(ext_modules=ext_modules)
