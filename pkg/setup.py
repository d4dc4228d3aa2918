"""Build script.

The compiled rank kernel is optional: if Cython (or a C compiler) is
unavailable, or POLAR_CODEX_NO_EXT is set, the package installs without it
and falls back to the pure-Python kernels at import time.
"""

import os

from setuptools import setup

extensions = []
if not os.environ.get("POLAR_CODEX_NO_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            ["src/polarcodex/_kernels_cy.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception:
        extensions = []

setup(ext_modules=extensions)
