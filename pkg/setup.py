"""Build script for the optional compiled kernel extension.

The package works without the extension (a pure-Python backend is selected
at import time); building it just makes the similarity and canonical-ranking
hot loops faster.  ``python setup.py build_ext --inplace`` compiles it into
the source tree for development checkouts.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/fragscreen/kernels/_ckernels.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
