"""Build hook for the optional compiled kernels.

Without Cython or a C compiler the package still installs; ``orcycles._accel``
then falls back to the pure-Python kernels.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("ORCYCLES_NO_EXT", "") != "1":
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "orcycles._kernels",
                    ["src/orcycles/_kernels.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            language_level="3",
        )

setup(ext_modules=ext_modules)
