"""Build script for the optional compiled kernel.

The package works without the extension; when Cython or a C compiler is
missing the build falls back to the pure-Python kernel.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("MINSEPS_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("minseps._ckernel", ["src/minseps/_ckernel.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": 3, "boundscheck": False,
                                 "wraparound": False, "cdivision": True},
        )
    except Exception as exc:  # pragma: no cover - build environment dependent
        print(f"minseps: building without compiled kernel ({exc})")
        ext_modules = []

setup(ext_modules=ext_modules)
