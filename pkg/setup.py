from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "ducci._kernels",
                ["src/ducci/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # No Cython at build time: install pure-Python only, the package
    # falls back to ducci._kernels_py at import.
    extensions = []

setup(ext_modules=extensions)
