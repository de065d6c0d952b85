"""Build script: compiles the optional mod-p linear algebra extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any failure to build it is
downgraded to a warning.
"""

import warnings

from setuptools import setup, Extension

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("hopfgalois._modp_fast", ["src/hopfgalois/_modp_fast.pyx"])],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - depends on build env
    warnings.warn(f"skipping compiled mod-p kernels: {exc}")

setup(ext_modules=ext_modules)
