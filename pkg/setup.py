from setuptools import Extension, setup

# The compiled kernels are optional: if Cython is unavailable the package
# installs without them and sympair.exact falls back to the pure-Python
# kernels at import time.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "sympair.exact._ckernels",
                ["src/sympair/exact/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
