"""Frozen expected values used by the acceptance and module tests."""

from fractions import Fraction as F

# spectral gaps of the four chain families, n = 3..10 (3 decimals)
CHAIN_GAPS = {
    "open": [0.667, 0.517, 0.454, 0.421, 0.402, 0.390, 0.381, 0.376],
    "half-one": [0.592, 0.473, 0.431, 0.408, 0.393, 0.384, 0.377, 0.372],
    "one-one": [0.500, 0.449, 0.413, 0.398, 0.387, 0.379, 0.374, 0.367],
    "closed": [0.833, 0.333, 0.454, 0.348, 0.402, 0.350, 0.381, 0.350],
}
KNABE = [0, 0.173, 0.218, 0.248, 0.264, 0.276, 0.284, 0.291]
GOSSET_MOZGUNOV = [0, 0.207, 0.254, 0.280, 0.290, 0.296, 0.299, 0.301]

# bond gaps nu_S for S = 1, 3/2, ..., 4 with (vertices, distinct tests, strength)
BOND_TABLE = {
    "tetrahedron": (4, 4, 2, [F(2, 3), F(1, 2), F(1, 3), F(5, 18), F(5, 27), F(5, 54), F(0)]),
    "octahedron": (6, 3, 3, [F(2, 3), F(1, 2), F(1, 3), F(1, 6), F(0), F(0), F(0)]),
    "cube": (8, 4, 3, [F(2, 3), F(1, 2), F(1, 3), F(5, 18), F(5, 27), F(5, 54), F(0)]),
    "icosahedron": (12, 6, 5, [F(2, 3), F(1, 2), F(2, 5), F(1, 3), F(4, 15), F(7, 30), F(14, 75)]),
    "dodecahedron": (20, 10, 5, [F(2, 3), F(1, 2), F(2, 5), F(1, 3), F(5, 18), F(2, 9), F(16, 81)]),
    "mu24": (24, 24, 7, [F(2, 3), F(1, 2), F(2, 5), F(1, 3), F(2, 7), F(1, 4), F(23, 105)]),
    "mu32": (32, 16, 9, [F(2, 3), F(1, 2), F(2, 5), F(1, 3), F(2, 7), F(1, 4), F(2, 9)]),
    "isotropic": (None, None, None, [F(2, 3), F(1, 2), F(2, 5), F(1, 3), F(2, 7), F(1, 4), F(2, 9)]),
}

# s^2 for the path S1 - S2 - S3; rows keyed by (S1, S3), columns S2 = 1/2 .. 3
_H = F(1, 2)
S2_COLUMNS = [_H, F(1), 3 * _H, F(2), 5 * _H, F(3)]
S_SQUARED = {
    (_H, _H): [F(1, 4), F(1, 9), F(1, 16), F(1, 25), F(1, 36), F(1, 49)],
    (_H, F(1)): [F(1, 3), F(1, 6), F(1, 10), F(1, 15), F(1, 21), F(1, 28)],
    (_H, 3 * _H): [F(3, 8), F(1, 5), F(1, 8), F(3, 35), F(1, 16), F(1, 21)],
    (_H, F(2)): [F(2, 5), F(2, 9), F(1, 7), F(1, 10), F(2, 27), F(2, 35)],
    (_H, 5 * _H): [F(5, 12), F(5, 21), F(5, 32), F(1, 9), F(1, 12), F(5, 77)],
    (_H, F(3)): [F(3, 7), F(1, 4), F(1, 6), F(3, 25), F(1, 11), F(1, 14)],
    (F(1), F(1)): [F(4, 9), F(1, 4), F(4, 25), F(1, 9), F(4, 49), F(1, 16)],
    (F(1), 3 * _H): [F(1, 2), F(3, 10), F(1, 5), F(1, 7), F(3, 28), F(1, 12)],
    (F(1), F(2)): [F(8, 15), F(1, 3), F(8, 35), F(1, 6), F(8, 63), F(1, 10)],
    (F(1), 5 * _H): [F(5, 9), F(5, 14), F(1, 4), F(5, 27), F(1, 7), F(5, 44)],
    (F(1), F(3)): [F(4, 7), F(3, 8), F(4, 15), F(1, 5), F(12, 77), F(1, 8)],
    (3 * _H, 3 * _H): [F(9, 16), F(9, 25), F(1, 4), F(9, 49), F(9, 64), F(1, 9)],
    (3 * _H, F(2)): [F(3, 5), F(2, 5), F(2, 7), F(3, 14), F(1, 6), F(2, 15)],
    (3 * _H, 5 * _H): [F(5, 8), F(3, 7), F(5, 16), F(5, 21), F(3, 16), F(5, 33)],
    (3 * _H, F(3)): [F(9, 14), F(9, 20), F(1, 3), F(9, 35), F(9, 44), F(1, 6)],
    (F(2), F(2)): [F(16, 25), F(4, 9), F(16, 49), F(1, 4), F(16, 81), F(4, 25)],
    (F(2), 5 * _H): [F(2, 3), F(10, 21), F(5, 14), F(5, 18), F(2, 9), F(2, 11)],
    (F(2), F(3)): [F(24, 35), F(1, 2), F(8, 21), F(3, 10), F(8, 33), F(1, 5)],
    (5 * _H, 5 * _H): [F(25, 36), F(25, 49), F(25, 64), F(25, 81), F(1, 4), F(25, 121)],
    (5 * _H, F(3)): [F(5, 7), F(15, 28), F(5, 12), F(1, 3), F(3, 11), F(5, 22)],
    (F(3), F(3)): [F(36, 49), F(9, 16), F(4, 9), F(9, 25), F(36, 121), F(1, 4)],
}

# (matching number, #maximal, #maximum) for n = 3..10
MATCHING_TRIPLES = {
    "closed": [(1, 3, 3), (2, 2, 2), (2, 5, 5), (3, 5, 2), (3, 7, 7), (4, 10, 2), (4, 12, 9), (5, 17, 2)],
    "open": [(1, 2, 2), (2, 2, 1), (2, 3, 3), (3, 4, 1), (3, 5, 4), (4, 7, 1), (4, 9, 5), (5, 12, 1)],
}

# atlas rows: |V|, |E|, max degree, matching number, chi, chi', dim H, gamma,
# nu(trivial), nu(optimal coloring, uniform p), nu(optimized p), p*
ATLAS_ROWS = {
    1: (2, 1, 1, 1, 2, 1, 4, F(1), F(2, 3), F(2, 3), F(2, 3), [1]),
    2: (3, 2, 2, 1, 2, 2, 12, F(2, 3), F(1, 6), F(1, 6), F(1, 6), [0.5, 0.5]),
    3: (3, 3, 2, 1, 3, 3, 27, F(5, 6), F(1, 9), F(1, 9), F(1, 9), [1 / 3] * 3),
    4: (4, 3, 3, 1, 2, 3, 32, F(1, 2), F(1, 15), F(1, 15), F(1, 15), [1 / 3] * 3),
    5: (4, 3, 2, 2, 2, 2, 36, 0.5168, 0.0755, 0.1119, 0.1134, [0.4526, 0.5474]),
    6: (4, 4, 3, 2, 3, 3, 72, 0.5595, F(1, 20), F(1, 15), F(1, 15), [1 / 3] * 3),
    7: (4, 4, 2, 2, 2, 2, 81, F(1, 3), F(1, 30), F(1, 15), F(1, 15), [0.5, 0.5]),
    8: (4, 5, 3, 2, 3, 3, 144, F(1, 2), F(1, 30), 0.0556, 0.0618, [0.3708, 0.3708, 0.2583]),
    9: (4, 6, 3, 2, 4, 3, 256, F(7, 10), F(1, 30), F(1, 15), F(1, 15), [1 / 3] * 3),
    10: (5, 4, 4, 1, 2, 4, 80, F(2, 5), F(1, 30), F(1, 30), F(1, 30), [0.25] * 4),
    11: (5, 4, 2, 2, 2, 2, 108, 0.4539, 0.0476, 0.0941, 0.0941, [0.5, 0.5]),
    12: (5, 4, 3, 2, 2, 3, 96, 0.4117, 0.0385, 0.0511, 0.0529, [0.3170, 0.4018, 0.2812]),
    13: (5, 5, 2, 2, 3, 3, 243, 0.4540, 0.0363, 0.0597, 0.0603, [0.3368, 0.3368, 0.3264]),
    14: (5, 5, 4, 2, 3, 4, 180, 0.4295, F(2, 75), F(1, 30), F(1, 30), [0.25] * 4),
    15: (5, 5, 3, 2, 3, 3, 192, 0.4796, 0.0316, 0.0527, 0.0547, [0.2975, 0.2975, 0.4050]),
    16: (5, 5, 3, 2, 2, 3, 216, 0.2871, 0.0206, 0.0344, 0.0369, [0.3892, 0.3892, 0.2214]),
    17: (5, 5, 3, 2, 3, 3, 216, 0.4396, 0.0308, 0.0511, 0.0529, [0.3122, 0.4018, 0.2860]),
    18: (5, 6, 3, 2, 2, 3, 432, 0.1931, 0.0107, 0.0214, 0.0214, [1 / 3] * 3),
    19: (5, 6, 3, 2, 3, 3, 432, 0.3106, 0.0172, 0.0343, 0.0347, [0.3130, 0.3130, 0.3740]),
    20: (5, 6, 4, 2, 3, 4, 360, 0.42, 0.0208, 0.0312, 0.0319, [0.2470, 0.2721, 0.2134, 0.2674]),
    21: (5, 6, 3, 2, 3, 3, 384, 0.4036, 0.0211, 0.0422, 0.0441, [0.2481, 0.3760, 0.3760]),
    22: (5, 6, 4, 2, 3, 4, 405, F(7, 15), 0.0222, F(1, 30), F(1, 30), [0.2] * 5),
    23: (5, 7, 4, 2, 3, 4, 675, 0.3236, 0.0132, 0.0231, 0.0265, [0.2873, 0.2873, 0.1382, 0.2873]),
    24: (5, 7, 4, 2, 3, 4, 720, 0.4263, 0.0180, 0.0315, 0.0318, [0.2657, 0.2462, 0.2387, 0.2494]),
    25: (5, 7, 3, 2, 3, 4, 768, 0.2501, 0.0110, 0.0192, 0.0193, [0.2625, 0.2375, 0.2625, 0.2375]),
    26: (5, 7, 4, 2, 4, 4, 640, 0.4877, 0.0190, F(1, 30), F(1, 30), [0.25] * 4),
    27: (5, 8, 4, 2, 3, 4, 1280, 0.2836, 0.0100, 0.0199, 0.0199, [0.25] * 4),
    28: (5, 8, 4, 2, 4, 4, 1200, 0.4053, 0.0135, 0.0269, 0.0298, [0.2818, 0.2818, 0.1687, 0.2677]),
    29: (5, 9, 4, 2, 4, 5, 2000, F(2, 5), 0.0111, 0.02, 0.0203, [0.1850, 0.1965, 0.1850, 0.2372, 0.1965]),
    30: (5, 10, 4, 2, 5, 5, 3125, F(3, 5), 0.0133, F(2, 75), F(2, 75), [0.2] * 5),
}
