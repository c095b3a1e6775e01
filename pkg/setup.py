"""Build script: compiles the elimination kernels when Cython + a C compiler
are available, otherwise installs pure Python (the package selects a backend
at import time, so a failed extension build is not fatal)."""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "freecurve.linalg._elim",
                ["src/freecurve/linalg/_elim.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
