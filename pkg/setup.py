"""Build hook for the optional compiled kernel.

The package works without the extension (pure-Python fallback); the
extension is marked optional so installation never fails on a missing
compiler.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "triplechar._kernel_cy",
                ["src/triplechar/_kernel_cy.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ]
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
