"""Total pixel count per band, before and after the ``sum`` rewrite."""

import functools
import operator


def getcount_original(h):
    """Get total number of pixels in each layer"""

    v = []
    for i in range(0, len(h), 256):
        v.append(functools.reduce(operator.add, h[i : i + 256]))
    return v


def getcount_sum(h):
    """Get total number of pixels in each layer"""
    return [sum(h[i: i + 256]) for i in range(0, len(h), 256)]
