"""Build the optional Cython kernel.

The package works without the extension (pure-Python kernels are selected
at import time), so a failed compile must not break installation.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/singercode/_core.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on build machine
    print(f"singercode: skipping C kernel build ({exc}); pure-Python kernels will be used")
    ext_modules = []

setup(ext_modules=ext_modules)
