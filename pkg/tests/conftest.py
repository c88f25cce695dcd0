from __future__ import annotations

import sys

import pytest

from heffter import HeffterArray, make_field

# Matrices exactly as printed in the source examples.
EXAMPLE1 = [[1, 3, -4], [7, 2, -9], [-8, -5, -6]]
EXAMPLE2 = [
    ["1", "g", "g+4", "3g"],
    ["3g+1", "3g+4", "3", "4g+2"],
    ["2g+3", "g+1", "4g+3", "3g+3"],
]
H35 = [[1, 2, 4, 8, 16], [5, 10, 20, 9, 18], [25, 19, 7, 14, 28]]
H615 = [
    [1, 59, 42, 125, 135, 4, 55, 168, 138, 178, 16, 39, 129, 9, 169],
    [48, 117, 25, 27, 145, 11, 106, 100, 108, 37, 44, 62, 38, 70, 148],
    [132, 5, 114, 29, 82, 166, 20, 94, 116, 147, 121, 80, 14, 102, 45],
    [2, 118, 84, 69, 89, 8, 110, 155, 95, 175, 32, 78, 77, 18, 157],
    [96, 53, 50, 54, 109, 22, 31, 19, 35, 74, 88, 124, 76, 140, 115],
    [83, 10, 47, 58, 164, 151, 40, 7, 51, 113, 61, 160, 28, 23, 90],
]
H615_X = [1, 48, 132, 2, 96, 83]
H615_Y = [1, 59, 42, 125, 135, 4, 55, 168, 138, 178, 16, 39, 129, 9, 169]


def example1() -> HeffterArray:
    f = make_field(19)
    return HeffterArray(f, [[x % 19 for x in row] for row in EXAMPLE1])


def example2() -> HeffterArray:
    f = make_field(5, 2, [2, 1, 1])
    return HeffterArray(f, [[f.parse(s) for s in row] for row in EXAMPLE2])


def reference_h35() -> HeffterArray:
    return HeffterArray(make_field(31), H35)


def reference_h615() -> HeffterArray:
    return HeffterArray(make_field(181), H615)


@pytest.fixture
def ex1():
    return example1()


@pytest.fixture
def ex2():
    return example2()


@pytest.fixture
def h35():
    return reference_h35()


@pytest.fixture
def h615():
    return reference_h615()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        ok, line = results[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {line}")
