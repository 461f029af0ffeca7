"""The two worked 4x4 examples, entered exactly as printed.

``A1, G1, D1`` (matrix, inner inverse, G-Drazin inverse) with the displayed
GD1 inverse ``X1``, Moore-Penrose inverse and Drazin inverse; ``A2, G2, D2``
with the displayed 1GD inverse ``X2``.
"""

from .matrix import Matrix

A1 = Matrix([[1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0]])
G1 = Matrix([[1, 0, 1, 1], [0, -1, -1, 0], [0, 1, 1, -1], [0, 1, -1, -1]])
D1 = Matrix([[1, 0, 0, 0], [0, 0, 0, 1], [0, 1, 0, 0], [0, 1, 0, 1]])
X1 = Matrix([[1, 0, 1, 1], [0, 0, 0, 0], [0, 1, -1, -1], [0, 1, -1, -1]])
A1_MP = Matrix([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 1, 0, 0]])
A1_DRAZIN = Matrix([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])

A2 = Matrix([[1, 1, 1, 1], [0, 0, 0, 1], [0, 0, 1, 0], [0, 0, 0, 0]])
G2 = Matrix([[1, -1, -1, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0]])
D2 = Matrix([[1, -1, -1, 2], [0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0]])
X2 = Matrix([[1, -1, -1, 2], [0, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1]])

#: name -> matrix, the eight matrices shipped as ``fixtures/<name>.json``
WORKED_EXAMPLES = {
    "A1": A1, "G1": G1, "D1": D1, "X1": X1,
    "A2": A2, "G2": G2, "D2": D2, "X2": X2,
}
