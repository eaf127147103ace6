"""Build script: compiles the optional Cython enumeration kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so a missing compiler or Cython
only costs speed, not features.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("gsv._sld_kernel_c", ["src/gsv/_sld_kernel_c.pyx"])],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
