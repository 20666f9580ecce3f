import numpy
from Cython.Build import cythonize
from setuptools import Extension, setup

# -ffp-contract=off keeps the dot products in the nearest-direction search
# bit-identical to the pure-NumPy fallback (no FMA contraction).
extensions = [
    Extension(
        "hazelab._kernels",
        ["src/hazelab/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(ext_modules=cythonize(extensions, language_level="3"))
