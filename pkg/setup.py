"""Build script for the optional compiled kernels.

The package is pure Python except for qwatson._qkernels, a Cython
transliteration of qwatson._kernels_py.  If Cython is unavailable the
extension is skipped and the pure-Python kernels are used at runtime.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("qwatson._qkernels", ["src/qwatson/_qkernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
