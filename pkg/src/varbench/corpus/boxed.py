"""Boxed integer counters standing in for third-party scalar types.

``UShort`` mimics an array-library unsigned 16-bit scalar: every operation
allocates a new wrapper.  ``UInt16`` mimics a pure-Python fixed-width integer
package, which layers an ``int`` subclass, masking and type dispatch on every
arithmetic step.
"""


class UShort:
    __slots__ = ("value",)

    def __init__(self, value=0):
        self.value = int(value) & 0xFFFF

    def __int__(self):
        return self.value

    __index__ = __int__

    def __lt__(self, other):
        return self.value < int(other)

    def __eq__(self, other):
        return self.value == int(other)

    __hash__ = None

    def __add__(self, other):
        return UShort(self.value + int(other))

    __iadd__ = __add__

    def __repr__(self):
        return f"UShort({self.value})"


class FixedInt(int):
    width = 64
    signed = False

    def __new__(cls, value=0):
        return int.__new__(cls, cls._wrap(int(value)))

    @classmethod
    def _wrap(cls, v):
        mask = (1 << cls.width) - 1
        v &= mask
        if cls.signed and v >> (cls.width - 1):
            v -= 1 << cls.width
        return v

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, FixedInt) and type(other) is not cls:
            raise TypeError(f"cannot mix {type(other).__name__} and {cls.__name__}")
        return int(other)

    def __add__(self, other):
        return type(self)(int(self) + self._coerce(other))

    __radd__ = __add__
    __iadd__ = __add__

    def __sub__(self, other):
        return type(self)(int(self) - self._coerce(other))

    def __lt__(self, other):
        return int(self) < self._coerce(other)

    def __repr__(self):
        return f"{type(self).__name__}({int(self)})"

    __hash__ = int.__hash__


class UInt16(FixedInt):
    width = 16
