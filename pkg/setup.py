"""Build script: compiles the optional fast solver kernel when Cython is available.

The package is fully functional without the extension; paritygame._kernel falls
back to the pure-Python twin at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("paritygame._speedups", ["src/paritygame/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
