"""Build script: compiles the optional Cython kernel backend.

The package is fully functional without the extension; ``stressfan._kernels``
falls back to the pure-Python backend when ``stressfan._core_cy`` is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("stressfan._core_cy", ["src/stressfan/_core_cy.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
