"""Build script: compiles the optional Cython term-map kernels.

Set CREMONA3_PURE_PYTHON=1 to skip the extension entirely; the package
falls back to the pure-Python kernels at import time.

The package/layout arguments below duplicate pyproject.toml so that
legacy ``setup.py develop``/``install`` flows (pip with a pre-PEP-660
setuptools) still see the src layout.
"""

import os

from setuptools import find_packages, setup

ext_modules = []
if not os.environ.get("CREMONA3_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("cremona3._termops_cy", ["src/cremona3/_termops_cy.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(
    name="cremona3",
    version="0.1.0",
    package_dir={"": "src"},
    packages=find_packages("src"),
    ext_modules=ext_modules,
)
