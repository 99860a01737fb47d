"""Twisted torus knots as braids.

Construction of (twisted) torus knot braids and their parallelizations,
exact Alexander polynomials via modular evaluation of the reduced Burau
representation, parameter families with connected-sum and cable
structure, and the combinatorics of cutting a torus knot open into a
tangle.
"""

__version__ = "0.1.0"

# Convention fingerprint carried by every CLI report so that output from
# different implementations can be compared meaningfully.
CONVENTIONS = {
    "crossing_sign": "positive letter = right-handed crossing",
    "word_order": "letters read top to bottom; closure joins bottom slot i to top slot i",
    "torus_word": "descending row (s_{p-1}...s_1)^q; strand at top slot i exits at (i+q) mod p",
    "twist_region": "leftmost slots 0..r-1",
    "cut_slots": "rightmost two strands (n-2, n-1); x1 rides the arc entering at n-1",
    "cable_framing": "blackboard blocks plus per-arc surface-framing twists in parallelize",
}
