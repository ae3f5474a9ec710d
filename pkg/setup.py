"""Build script: compiles the optional Cython kernel.

The package works without the compiled extension (a numpy fallback is
selected at import time), so a failed extension build is tolerated.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "octafar._kernels_cy",
                ["src/octafar/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
