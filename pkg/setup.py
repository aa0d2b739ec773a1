import os

from setuptools import Extension, setup

# The compiled kernel is an accelerator only; the package falls back to the
# pure-Python twin when the extension is absent (CHROMHOM_NO_EXT=1 skips it).
ext_modules = []
if os.environ.get("CHROMHOM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "chromhom._snfcore",
                    ["src/chromhom/_snfcore.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
