"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension; _kernel.py falls
back to the pure-Python twin at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/orediamond/_kernel_c.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"orediamond: skipping Cython kernel build ({exc})")

setup(ext_modules=ext_modules)
