import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "graphtorsion._kernels._charmod",
                ["src/graphtorsion/_kernels/_charmod.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # the package still works: a numpy fallback kernel is selected at import
    ext_modules = []

setup(ext_modules=ext_modules)
