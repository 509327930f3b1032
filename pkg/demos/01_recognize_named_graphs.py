"""Walk the named catalogue through the recognizer.

The four forbidden graphs come back not-t-perfect, the three exceptional
graphs t-perfect, and each certificate names the single screen that
settled it.
"""

from tperfect.core import NAMED_CATALOGUE, make_named
from tperfect.errors import NotClawFreeError
from tperfect.recognizer import is_t_perfect

for name in NAMED_CATALOGUE:
    g = make_named(name)
    try:
        decision = is_t_perfect(g)
    except NotClawFreeError as exc:
        print(f"{name:26s} n={g.n:2d} m={g.m:2d}  rejected: {exc}")
        continue
    rules = " -> ".join(entry.rule for entry in decision.certificate)
    print(f"{name:26s} n={g.n:2d} m={g.m:2d}  {decision.verdict:15s} via {rules}")
