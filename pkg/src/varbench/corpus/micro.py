"""Idiom-level micro-benchmark families.

Each family pairs constructs that do the same job in different ways.  The
third-party counters of the loop family are emulated by ``boxed``.
"""

import itertools
from itertools import islice

from .boxed import UInt16, UShort


# Loop family: count to 10000.

def for_repeat():
    for i in range(10000):
        pass


def while_impl():
    i = 0
    while i < 10000:
        i += 1


def numpy_impl():
    i = UShort(0)
    while i < 10000:
        i += 1


def fixedint_impl():
    i = UInt16(0)
    while i < 10000:
        i += 1


def range_unroll():
    for i in range(0, 10000, 2):
        j = i
        j += 1


def itertools_impl():
    c = itertools.count(0)
    while next(c) < 10000:
        pass


# First nonzero bin: explicit loop versus generator pipeline.

def loop(h):
    for i in range(256):
        if h[i]:
            return i


def generator(h):
    return next((i for i, x in islice(enumerate(h), 256) if x), None)


# Sequential versus tuple assignment.

def linebyline():
    a = 0
    b = 1
    c = 2
    d = 3
    e = 4
    f = 5
    g = 6
    h = 7
    i = 8
    j = 9


def tuple_impl():
    a, b, c, d, e, f, g, h, i, j = 0, 1, 2, 3, 4, 5, 6, 7, 8, 9


# Conditional expression versus explicit branches.  Both are kept exactly as
# written upstream; they do not return the same values and are compared for speed only.

def ternary(res_min, res_max):
    return res_min, res_max if res_max >= res_min else (255, 0)


def explicit_if(res_min, res_max):
    if res_max >= res_min:
        return (255, 0)
    else:
        return res_min, res_max


# Building a list: append loop versus comprehension.

def append():
    def some_data(i):
        return (i, i+1)

    v = []
    for i in range(0, 100):
        v.append(some_data(i))
    return v


def comprehension():
    def some_data(i):
        return (i, i+1)

    return [some_data(i) for i in range(0, 100)]
