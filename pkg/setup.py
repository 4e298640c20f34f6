import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-python install still works: the package falls back to the
    # numpy kernels when sloccinv._core is absent.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "sloccinv._core",
                ["src/sloccinv/_core.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
