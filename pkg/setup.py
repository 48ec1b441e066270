from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "zngen._jacobi",
                ["src/zngen/_jacobi.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython at build time: install pure-Python only, the package
    # falls back to zngen._jacobi_py at import.
    ext_modules = []

setup(ext_modules=ext_modules)
