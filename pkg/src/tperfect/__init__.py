"""tperfect: recognition of t-perfect claw-free graphs.

A graph is t-perfect when its stable set polytope is cut out by
non-negativity, edge, and odd-cycle inequalities alone.  For claw-free
inputs this package decides t-perfection in polynomial time and, at desk
scale, cross-validates every decision against exponential ground-truth
oracles built on forbidden t-minors.
"""

from .core import Graph
from .recognizer import Decision, find_claw, is_t_perfect
from .theta import ThetaVerdict, has_skewed_theta

__all__ = [
    "Decision",
    "Graph",
    "ThetaVerdict",
    "find_claw",
    "has_skewed_theta",
    "is_t_perfect",
]

__version__ = "0.1.0"
