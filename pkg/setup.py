"""Build script: compiles the optional speedup extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so any failure to cythonize or
compile downgrades gracefully to a pure build.  Set
PARTITIONLAB_NO_EXTENSION=1 to skip the extension on purpose.
"""

import os

from setuptools import Extension, setup


def extension_modules():
    if os.environ.get("PARTITIONLAB_NO_EXTENSION") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "partitionlab._speedups",
                ["src/partitionlab/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extension_modules())
