"""Build script for the compiled kernel extension.

The extension is optional: if it cannot be built the package installs
anyway and falls back to the pure-Python kernels at import time.  FP
contraction and fast-math stay disabled so the compiled stream is
bit-identical to the pure-Python one.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext = Extension(
        "cmlcipher._kernels",
        ["src/cmlcipher/_kernels.pyx"],
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
    ext.optional = True
    ext_modules = cythonize(
        [ext],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
