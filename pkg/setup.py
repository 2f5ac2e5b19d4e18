# Builds the optional compiled kernels. If Cython or a C compiler is missing,
# the package still installs and falls back to specmine._pykernels.
#
#   pip install -e . --no-build-isolation
#   python3 setup.py build_ext --inplace
from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("specmine._ckernels", ["src/specmine/_ckernels.pyx"])],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
        },
    )

setup(ext_modules=ext_modules)
