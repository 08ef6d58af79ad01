"""Build script for the optional compiled convolution kernels.

The package is pure Python plus one Cython extension holding the hot
convolution forward/backward loops. If the extension cannot be built
(no compiler, no Cython), installation still succeeds and the package
falls back to the numpy implementation at import time.
"""

import sys

from setuptools import setup

try:
    import numpy as np
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "spreadlang.nn._convkernel",
                sources=["src/spreadlang/nn/_convkernel.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError as exc:
    print(f"spreadlang: skipping compiled kernels ({exc})", file=sys.stderr)
    extensions = []

setup(ext_modules=extensions)
