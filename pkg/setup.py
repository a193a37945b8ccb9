import numpy as np
from setuptools import Extension, setup
from Cython.Build import cythonize

compiler_directives = {
    "language_level": "3",
    "boundscheck": False,
    "wraparound": False,
    "cdivision": True,
}

ext_modules = [
    Extension(
        "stylepaths.kernels._core",
        ["src/stylepaths/kernels/_core.pyx"],
        include_dirs=[np.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(ext_modules, compiler_directives=compiler_directives))
