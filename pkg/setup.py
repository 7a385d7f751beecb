"""Build hook for the optional compiled simplex kernel.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so a failed build is downgraded to
a warning rather than an install error.
"""

import warnings

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("torusgit._simplex_cy", ["src/torusgit/_simplex_cy.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    warnings.warn(f"building the compiled simplex kernel failed ({exc}); "
                  "falling back to the pure-Python kernel")

setup(ext_modules=ext_modules)
