"""Skewed-theta detection on hand-built graphs, with the rule trace.

A skewed theta joins two branch vertices by three edge-disjoint paths,
two odd and one even.  theta(1,2,3) has one; theta(2,3,3) as well; K4
only carries the balanced {1,2,2} triples and stays clean.
"""

from tperfect.core import complete_graph, theta_graph
from tperfect.oracle import has_skewed_theta_bruteforce
from tperfect.theta import has_skewed_theta

for label, g in [
    ("theta(1,2,3)", theta_graph(1, 2, 3)),
    ("theta(2,3,3)", theta_graph(2, 3, 3)),
    ("theta(1,2,2)", theta_graph(1, 2, 2)),
    ("theta(2,2,2)", theta_graph(2, 2, 2)),
    ("K4", complete_graph(4)),
]:
    verdict = has_skewed_theta(g)
    truth = has_skewed_theta_bruteforce(g)
    agree = "agrees with" if verdict.contains == truth else "DISAGREES WITH"
    print(f"{label:14s} -> {verdict.outcome:22s} ({agree} brute force)")
    for rule, info in verdict.trace:
        print(f"    {rule} {info}")
    print()
