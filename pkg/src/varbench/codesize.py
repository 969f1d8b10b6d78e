"""Bytecode size of executable units, including nested code objects.

The reference backend reads ``co_code`` of a function and of every code
object reachable through ``co_consts``.  Its cross-check rebuilds the same
byte count from the ``dis`` instruction stream, which is an independent
route through the interpreter's disassembler.
"""

from __future__ import annotations

import dis
import sys
import types

from .model import CodeSizeReport, ExecutableUnit

# Bytecode sizes observed on a reference host.  Informational only:
# encodings differ across interpreter versions.
REFERENCE_SIZES = {
    "getextrema/original": 122,
    "getextrema/merged": 160,
    "loop/range": 18,
    "loop/while": 26,
    "loop/numpy-ushort": 32,
    "loop/fixedint-uint16": 32,
    "loop/unroll": 34,
    "loop/itertools-count": 28,
    "first-nonzero/loop": 34,
    "first-nonzero/generator": 56,
    "assignment/line-by-line": 44,
    "assignment/tuple": 28,
    "ternary/ternary": 24,
    "ternary/explicit-if": 24,
    "array-init/append": 58,
    "array-init/comprehension": 64,
}


class UnsupportedUnit(TypeError):
    pass


def _code_of(obj):
    if isinstance(obj, types.CodeType):
        return obj
    code = getattr(obj, "__code__", None)
    if isinstance(code, types.CodeType):
        return code
    raise UnsupportedUnit(f"{obj!r} has no Python bytecode")


def _instruction_bytes(code) -> int:
    if sys.version_info >= (3, 13):
        total = 0
        for ins in dis.get_instructions(code):
            caches = getattr(ins, "cache_info", None) or ()
            total += 2 + 2 * sum(size for _, size, _ in caches)
        return total
    if sys.version_info >= (3, 11):
        return 2 * sum(1 for _ in dis.get_instructions(code, show_caches=True))
    return 2 * sum(1 for _ in dis.get_instructions(code))


class BytecodeBackend:
    """CPython bytecode, sizes in bytes."""

    id = f"cpython-{sys.version_info.major}.{sys.version_info.minor}-bytecode"
    size_unit = "bytes"

    def size_of(self, code) -> int:
        return len(code.co_code)

    def children_of(self, code) -> list:
        return [c for c in code.co_consts if isinstance(c, types.CodeType)]

    def cross_check(self, code) -> int:
        return _instruction_bytes(code)

    def walk(self, obj) -> list:
        root = _code_of(obj)
        seen, order, stack = set(), [], [root]
        while stack:
            code = stack.pop()
            if id(code) in seen:
                continue
            seen.add(id(code))
            order.append(code)
            stack.extend(reversed(self.children_of(code)))
        return order


DEFAULT_BACKEND = BytecodeBackend()


def _part_name(code, root) -> str:
    name = getattr(code, "co_qualname", code.co_name)
    return name if code is root else f"{name}@{code.co_firstlineno}"


def analyze(unit: ExecutableUnit, backend=DEFAULT_BACKEND) -> CodeSizeReport:
    target = unit.func if isinstance(unit, ExecutableUnit) else unit
    unit_id = unit.id if isinstance(unit, ExecutableUnit) else getattr(unit, "__qualname__", repr(unit))
    try:
        codes = backend.walk(target)
    except UnsupportedUnit:
        return CodeSizeReport(unit_id, 0, (), backend.id, backend.size_unit, flags=("unsupported",))
    root = codes[0]
    parts = tuple((_part_name(c, root), backend.size_of(c)) for c in codes)
    flags = ()
    check = getattr(backend, "cross_check", None)
    if check is not None and sum(check(c) for c in codes) != sum(s for _, s in parts):
        flags = ("inconsistent",)
    return CodeSizeReport(unit_id, sum(s for _, s in parts), parts, backend.id, backend.size_unit, flags)


def compare_sizes(a: CodeSizeReport, b: CodeSizeReport) -> int:
    if a.backend_id != b.backend_id:
        raise ValueError(f"cannot compare sizes from {a.backend_id} and {b.backend_id}")
    return b.total_size - a.total_size
