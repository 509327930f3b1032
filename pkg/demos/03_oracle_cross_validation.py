"""Desk-scale cross-validation: the polynomial recognizer against the
exponential forbidden-t-minor closure, over a seeded claw-free corpus.
"""

from tperfect.corpus import generate_corpus
from tperfect.oracle import is_t_perfect_bruteforce
from tperfect.recognizer import is_t_perfect

corpus = generate_corpus("random-clawfree-via-linegraph", 60, seed=12, n_min=5, n_max=12)

agree = 0
print(f"{'#':>3} {'n':>3} {'m':>3} {'recognizer':15s} {'oracle':15s}")
for i, g in enumerate(corpus):
    mine = is_t_perfect(g).verdict
    truth = "t-perfect" if is_t_perfect_bruteforce(g) else "not-t-perfect"
    agree += mine == truth
    print(f"{i:>3} {g.n:>3} {g.m:>3} {mine:15s} {truth:15s}")

print(f"\n{agree}/{len(corpus)} verdicts agree")
