"""Build script: compiles the optional digit-kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); the build therefore tolerates a
missing Cython or a missing C compiler.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "zeroless._kernels_cy",
                ["src/zeroless/_kernels_cy.pyx"],
            )
        ],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
