import sys

from setuptools import setup, Extension

# The compiled kernels are optional: if Cython (or a C compiler) is not
# available the package falls back to the numpy implementations at import
# time, so a failed extension build should not fail the install.
ext_modules = []
try:
    from Cython.Build import cythonize
    import numpy as np

    ext = Extension(
        "holowind._kernels",
        ["src/holowind/_kernels.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    ext_modules = cythonize([ext], language_level=3)
except Exception as exc:  # pragma: no cover
    print(f"holowind: skipping compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
