"""Backend selection for the bounded path kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module with the same functions is loaded. ``BACKEND`` names the one in use.
"""
from array import array

try:
    from specmine import _ckernels as _impl
    BACKEND = "cython"
except ImportError:  # extension not built
    from specmine import _pykernels as _impl
    BACKEND = "python"

from specmine import _pykernels as python_backend

enumerate_words = _impl.enumerate_words
count_words = _impl.count_words


def int_array(values):
    return array("i", values)


def byte_array(values):
    return array("B", values)
