"""Build script: compiles the optional Cython kernel module.

The package is fully functional without the extension; kernels.py falls back
to the pure-Python twin if the compiled module is missing or fails to build.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "eigencert._kernels_cy",
                ["src/eigencert/_kernels_cy.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
