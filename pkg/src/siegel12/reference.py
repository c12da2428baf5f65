"""Frozen reference values for self-verification.

These are the published tables that the package is expected to reproduce
from first principles: the 24x24 sublattice-count matrix, the cusp form
coefficients, the Fourier coefficient table for determinant <= 96, and the
q-expansion of eta(8t)^12 theta(t).  They are inputs to the test suite and
the CLI selftest, never to the computations themselves.
"""

from fractions import Fraction

MATRIX_ROW_LABELS = ['0', 'A_1', 'A_2', 'A_3', 'A_4', 'A_5', 'A_6', 'A_7', 'A_8', 'A_9', 'A_10', 'A_11', 'D_4', 'D_5', 'D_6', 'D_7', 'D_8', 'D_9', 'D_10', 'D_11', 'D_12', 'E_6', 'E_7', 'E_8']

MATRIX = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],  # 0
    [0, 24, 36, 48, 60, 72, 72, 84, 96, 108, 120, 120, 144, 144, 156, 168, 192, 216, 216, 264, 300, 360, 360, 552],  # A_1
    [0, 0, 12, 32, 60, 96, 96, 140, 192, 252, 320, 320, 480, 480, 572, 672, 896, 1152, 1152, 1760, 2300, 3360, 3360, 8096],  # A_2
    [0, 0, 0, 8, 30, 72, 72, 140, 240, 378, 560, 560, 1080, 1080, 1430, 1848, 2912, 4320, 4320, 8360, 12650, 22680, 22680, 87032],  # A_3
    [0, 0, 0, 0, 6, 24, 0, 84, 144, 378, 600, 384, 1344, 864, 2574, 2688, 6384, 8064, 10584, 25344, 53130, 94080, 72576, 680064],  # A_4
    [0, 0, 0, 0, 0, 4, 0, 28, 56, 252, 452, 128, 1184, 144, 3432, 2688, 10696, 9408, 19908, 59136, 177100, 296576, 120960, 4307072],  # A_5
    [0, 0, 0, 0, 0, 0, 0, 4, 16, 108, 240, 0, 856, 0, 3432, 1536, 13744, 8256, 32112, 101376, 480700, 766720, 103680, 22150656],  # A_6
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 27, 90, 0, 495, 0, 2574, 384, 14022, 5832, 43794, 126720, 1081575, 1660320, 38880, 94140288],  # A_7
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 20, 0, 220, 0, 1430, 0, 11696, 2560, 48620, 112640, 2042975, 2929600, 2880, 334721024],  # A_8
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 66, 0, 572, 0, 8008, 512, 43758, 67584, 3268760, 4100096, 0, 1004163072],  # A_9
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 12, 0, 156, 0, 4368, 0, 31824, 24576, 4457400, 4472832, 0, 2556051456],  # A_10
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 26, 0, 1820, 0, 18564, 4096, 5200300, 3727360, 0, 5538111488],  # A_11
    [0, 0, 0, 0, 0, 1, 6, 0, 10, 0, 15, 60, 80, 180, 0, 210, 126, 840, 315, 990, 0, 4970, 9450, 10626],  # D_4
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 6, 24, 48, 108, 0, 168, 126, 1008, 378, 1584, 0, 11928, 22680, 42504],  # D_5
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 7, 0, 0, 84, 84, 336, 63, 1848, 0, 11788, 11340, 134596],  # D_6
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 24, 36, 120, 0, 1584, 0, 12520, 3240, 346104],  # D_7
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 9, 45, 0, 990, 0, 13005, 405, 735471],  # D_8
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 10, 0, 440, 0, 11440, 0, 1307504],  # D_9
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 132, 0, 8008, 0, 1961256],  # D_10
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 24, 0, 4368, 0, 2496144],  # D_11
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1820, 0, 2704156],  # D_12
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 4, 0, 0, 0, 56, 28, 0, 0, 1120, 3360, 0],  # E_6
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1, 0, 0, 120, 360, 0],  # E_7
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0],  # E_8
]

THEOREM4 = [
    ('Leech', Fraction(1, 152769576960)),
    ('A1^24', Fraction(-1, 3183476736)),
    ('A2^12', Fraction(1, 591224832)),
    ('A3^8', Fraction(-5, 1146617856)),
    ('A4^6', Fraction(13, 1990656000)),
    ('A5^4D4', Fraction(-83, 11943936000)),
    ('D4^6', Fraction(19, 16307453952)),
    ('A6^4', Fraction(41, 15676416000)),
    ('A7^2D5^2', Fraction(-1, 37158912000)),
    ('A8^3', Fraction(-197, 351151718400)),
    ('A9^2D6', Fraction(59, 214990848000)),
    ('D6^4', Fraction(-13, 229323571200)),
    ('A11D7E6', Fraction(-1, 35831808000)),
    ('E6^4', Fraction(1, 143327232000)),
    ('A12^2', Fraction(31, 7685922816000)),
    ('D8^3', Fraction(37, 11415217766400)),
    ('A15D9', Fraction(-29, 21069103104000)),
    ('D10E7^2', Fraction(-1, 7023034368000)),
    ('A17E7', Fraction(1, 3511517184000)),
    ('D12^2', Fraction(53, 4237899595776000)),
    ('A24', Fraction(-1, 1332620771328000)),
    ('D16E8', Fraction(-1, 3595793596416000)),
    ('E8^3', Fraction(1, 10787380789248000)),
    ('D24', Fraction(1, 2729207339679744000)),
]

DET_TABLE = [
    (4, 1, 'D12'),
    (4, 1, 'D4E8'),
    (5, -1, 'A4E8'),
    (8, 2, 'A1A3E8'),
    (8, 2, 'A1D11'),
    (8, 2, 'D5E7'),
    (9, 6, 'A2^2E8'),
    (9, 6, 'E6^2'),
    (12, -12, 'A1^2A2E8'),
    (12, -12, 'A2D10'),
    (12, -12, 'A5E7'),
    (12, -12, 'D6E6'),
    (13, 11, 'A12'),
    (16, 40, 'A1D4E7'),
    (16, 40, 'A1^2D10'),
    (16, 40, 'A1^4E8'),
    (16, 40, 'D6^2'),
    (16, -24, 'A3D9'),
    (16, -24, 'D5D7'),
    (16, -88, 'D4D8'),
    (20, -8, 'A1A4E7'),
    (20, 56, 'A4D8'),
    (21, -42, 'A6E6'),
    (24, 108, 'A1A11'),
    (24, 108, 'A1A2D9'),
    (24, 108, 'A1D5E6'),
    (24, 108, 'A2A3E7'),
    (24, 108, 'A5D7'),
    (28, -112, 'A6D6'),
    (32, -48, 'A1A3D8'),
    (32, -48, 'A1D4D7'),
    (32, -48, 'A1D5D6'),
    (32, -48, 'A1^2A3E7'),
    (32, -48, 'A1^3D9'),
    (32, -176, 'A7D5'),
    (33, 54, 'A2A10'),
    (36, 9, 'A8D4'),
    (36, 48, 'A2^2D8'),
    (36, 738, 'A2D4E6'),
    (36, -336, 'A1A2^2E7'),
    (36, -336, 'A1A5E6'),
    (40, -196, 'A1A4D7'),
    (40, -196, 'A3A9'),
    (44, 364, 'A1^2A10'),
    (45, 234, 'A2A4E6'),
    (45, -495, 'A4A8'),
    (48, 288, 'A1A5D6'),
    (48, 288, 'A1^2A2D8'),
    (48, 288, 'A1^2D4E6'),
    (48, 288, 'A1^3A2E7'),
    (48, 288, 'A2D4D6'),
    (48, 288, 'A5A7'),
    (48, -480, 'A2A3D7'),
    (48, 1056, 'A2D5^2'),
    (48, 1056, 'A3^2E6'),
    (49, 1260, 'A6^2'),
    (56, -728, 'A1A6D5'),
    (60, 432, 'A1A2A9'),
    (60, 432, 'A1^2A4E6'),
    (60, 432, 'A2A4D6'),
    (64, 1088, 'A1^2A3D7'),
    (64, 1088, 'A1^2D4D6'),
    (64, 1088, 'A1^2D5^2'),
    (64, 1088, 'A1^4D8'),
    (64, 1088, 'A1^5E7'),
    (64, 1088, 'A3^2D6'),
    (64, 4160, 'A3D4D5'),
    (64, -3008, 'A1A7D4'),
    (64, 23616, 'D4^3'),
    (72, 990, 'A1A3A8'),
    (72, -468, 'A1A2A3E6'),
    (72, -468, 'A2A5D5'),
    (72, 2448, 'A1A2^2D7'),
    (80, 2240, 'A1A4A7'),
    (80, 2752, 'A3A4D5'),
    (80, 6336, 'A1^3A9'),
    (80, -1856, 'A1^2A4D6'),
    (80, -9024, 'A4D4^2'),
    (81, 5886, 'A2^2A8'),
    (81, -7236, 'A2^3E6'),
    (84, -336, 'A1A5A6'),
    (84, -3024, 'A2A6D4'),
    (96, 4320, 'A2A3A7'),
    (96, -2592, 'A1A2A3D6'),
    (96, -2592, 'A1A2D4D5'),
    (96, -2592, 'A1^2A5D5'),
    (96, -2592, 'A1^3A2D7'),
    (96, -2592, 'A1^3A3E6'),
    (96, -2592, 'A3A5D4'),
]

ETA_COEFFS = {
    4: 1,
    5: 2,
    8: 2,
    12: -12,
    13: -22,
    16: -24,
    20: 56,
    21: 84,
    24: 108,
    28: -112,
    29: -66,
    32: -176,
    36: 9,
    37: -398,
    40: -196,
    44: 364,
    45: 990,
    48: 1056,
    52: -616,
    53: 70,
    56: -728,
    60: 432,
    61: -2354,
    64: -1472,
    68: -240,
    69: 1080,
    72: 990,
    76: -484,
    77: 1848,
    80: 2752,
    84: 2352,
    85: 2292,
    88: 1276,
    92: -2608,
    93: -3852,
    96: -9504,
}
