"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); building it just makes the
exhaustive verification loops run at C speed.

Build in place with: python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "trispectra.kernels._core",
                ["src/trispectra/kernels/_core.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
        },
    )

setup(ext_modules=ext_modules)
