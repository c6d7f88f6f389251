"""Build hooks: compile the optional canonical-code extension when Cython is available.

The package is fully functional without the extension; `trigdessins._kernel`
falls back to the pure-Python implementation at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/trigdessins/_canon.pyx"],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
