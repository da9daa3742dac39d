from torlie import AlgebraSpec

# the five twisted configurations exercised throughout
TWISTED_SPECS = [
    AlgebraSpec("A", 3, 2),   # A5 -> C3
    AlgebraSpec("A", 4, 2),   # A7 -> C4
    AlgebraSpec("D", 3, 2),   # D4 -> B3
    AlgebraSpec("D", 2, 2),   # D3 -> B2
    AlgebraSpec("D", 4, 3),   # D4 -> G2 (triality)
]

UNTWISTED_SPECS = [
    AlgebraSpec("A", 2, 1),   # A3
    AlgebraSpec("D", 3, 1),   # D4
]
