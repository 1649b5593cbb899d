import os

from setuptools import Extension, setup

# CONDCOLOR_SKIP_EXT=1 installs the pure-Python package only; the search
# kernel then falls back to condcolor._kernel_py at import time.
ext_modules = []
if not os.environ.get("CONDCOLOR_SKIP_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("condcolor._kernel_c", ["src/condcolor/_kernel_c.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
