import os

from setuptools import Extension, setup

# The compiled kernels are an accelerator, not a requirement: if Cython (or a
# C compiler) is unavailable the package installs anyway and falls back to the
# pure-Python kernels at import time.
ext_modules = []
if os.environ.get("LCSAPPROX_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "lcsapprox._ckernels",
                    sources=["src/lcsapprox/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level="3",
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
