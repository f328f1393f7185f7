import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

ext = Extension(
    "hypercube_ids._ckernels",
    ["src/hypercube_ids/_ckernels.pyx"],
    include_dirs=[np.get_include()],
    extra_compile_args=["-O3"],
    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    # a failed compile leaves the pure-Python kernels in charge
    optional=True,
)

setup(ext_modules=cythonize([ext], language_level=3))
