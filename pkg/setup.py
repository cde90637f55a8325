"""Build script for the optional compiled kernel.

The package is fully functional without the extension: tubecat.kernel falls
back to the pure-Python implementation when the compiled module is absent.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "tubecat._kernel",
                ["src/tubecat/_kernel.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
