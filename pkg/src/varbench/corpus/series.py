"""Coefficient-series validation, full scan versus early exit.

The upstream routine converts each coefficient sequence to an ndarray and
then rejects empty or multi-dimensional inputs.  ``SeriesArray`` is a small
stand-in exposing just ``size`` and ``ndim`` so the validation segment runs
without the array library; ``numpy_variants`` binds the real one.
"""

from __future__ import annotations


class SeriesArray:
    __slots__ = ("values", "shape")

    def __init__(self, values, shape):
        self.values = values
        self.shape = shape

    @property
    def size(self):
        n = 1
        for d in self.shape:
            n *= d
        return n

    @property
    def ndim(self):
        return len(self.shape)

    def __eq__(self, other):
        return (type(other) is SeriesArray and self.shape == other.shape
                and self.values == other.values)

    def __repr__(self):
        return f"SeriesArray({list(self.values)!r}, shape={self.shape})"


def _shape(a):
    if isinstance(a, SeriesArray):
        return a.shape
    if isinstance(a, (list, tuple)):
        if not a:
            return (0,)
        inner = [_shape(x) for x in a]
        if any(s != inner[0] for s in inner):
            raise ValueError("setting an array element with a sequence. "
                             "The requested array has an inhomogeneous shape")
        return (len(a),) + inner[0]
    return ()


def _flat(a, out):
    if isinstance(a, (list, tuple)):
        for x in a:
            _flat(x, out)
    else:
        out.append(a)
    return out


def array(a, ndmin=1, copy=False):
    """Adapter for ``np.array(a, ndmin=..., copy=False)``."""
    if isinstance(a, SeriesArray) and a.ndim >= ndmin:
        return a
    shape = _shape(a)
    values = a.values if isinstance(a, SeriesArray) else tuple(_flat(a, []))
    if len(shape) < ndmin:
        shape = (1,) * (ndmin - len(shape)) + shape
    return SeriesArray(values, shape)


def as_series(alist, trim=True):
    arrays = [array(a, ndmin=1, copy=False) for a in alist]
    if min([a.size for a in arrays]) == 0:
        raise ValueError("Coefficient array is empty")
    if any(a.ndim != 1 for a in arrays):
        raise ValueError("Coefficient array is not 1-d")
    return arrays


def as_series_opt(alist, trim=True):
    arrays = [array(a, ndmin=1, copy=False) for a in alist]
    for a in arrays:
        if a.size == 0:
            raise ValueError("Coefficient array is empty")
    if any(a.ndim != 1 for a in arrays):
        raise ValueError("Coefficient array is not 1-d")
    return arrays


def numpy_variants():
    """The same pair bound to numpy; raises ImportError when it is missing."""
    import numpy as np

    copy = None if int(np.__version__.split(".")[0]) >= 2 else False

    def as_series_np(alist, trim=True):
        arrays = [np.array(a, ndmin=1, copy=copy) for a in alist]
        if min([a.size for a in arrays]) == 0:
            raise ValueError("Coefficient array is empty")
        if any(a.ndim != 1 for a in arrays):
            raise ValueError("Coefficient array is not 1-d")
        return arrays

    def as_series_opt_np(alist, trim=True):
        arrays = [np.array(a, ndmin=1, copy=copy) for a in alist]
        for a in arrays:
            if a.size == 0:
                raise ValueError("Coefficient array is empty")
        if any(a.ndim != 1 for a in arrays):
            raise ValueError("Coefficient array is not 1-d")
        return arrays

    return as_series_np, as_series_opt_np


# Normal-path inputs modelled on the documented examples and unit tests of the
# upstream routine, and the same shapes with an empty coefficient array added.
NORMAL_CASES = (
    [0, 1, 2, 3],
    [[0, 1, 2], [3, 4, 5]],
    [1, [0, 1, 2], [0.0, 1.0]],
    [2, [1.1, 0.0]],
    [[1], [2], [3]],
    [[0.0], [1.0, 2.0, 3.0]],
    [[1, 2, 3, 0, 0]],
    [[-1.5, 0.25], [3, 4, 5, 6], 7],
    [list(range(16))],
)

ERROR_CASES = (
    [[]],
    [[], [1, 2]],
    [[1, 2], []],
    [[1], [2], [3], []],
    [[], 1, 2, 3, 4, 5, 6, 7],
    [list(range(16)), []],
    [[0.0], [], [1.0]],
    [3, [], [1.1, 0.0]],
    [[], [], [], []],
)
