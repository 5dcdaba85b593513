import numpy as np
from setuptools import setup, Extension
from Cython.Build import cythonize

# The compiled kernels are an optimization, not a requirement: the package
# falls back to degreerank._pykernels when the extension is absent.
ext = Extension(
    "degreerank._speedups",
    ["src/degreerank/_speedups.pyx"],
    include_dirs=[np.get_include()],
    extra_compile_args=["-O3"],
)

setup(ext_modules=cythonize([ext], language_level="3"))
