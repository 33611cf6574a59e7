"""Frozen reference matrices for n = 1, 2, 3, entered by hand."""
import math

import numpy as np

D1 = np.array([[0, 1], [0, 0]])

D2 = np.array([
    [0, 1, 1, 0],
    [0, 0, 0, 1],
    [0, 0, 0, -1],
    [0, 0, 0, 0],
])

# the a_1 term of d(2)
A1_N2 = np.array([
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
])

D3 = np.array([
    [0, 1, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, 0, -1, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, -1, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0],
])

_c, _s = math.cos(math.pi / 8), math.sin(math.pi / 8)
R1_N2 = np.array([
    [_c, 0, 0, _s],
    [0, _c, _s, 0],
    [0, -_s, _c, 0],
    [-_s, 0, 0, _c],
])


def evolution_n1(t):
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, -1j * s], [-1j * s, c]])


def evolution_n2(t):
    c = math.cos(math.sqrt(2) * t)
    s = 1j * math.sin(math.sqrt(2) * t) / math.sqrt(2)
    return np.array([
        [c, -s, -s, 0],
        [-s, c, 0, -s],
        [-s, 0, c, s],
        [0, -s, s, c],
    ])
