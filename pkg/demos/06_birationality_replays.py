"""The two headline case trees, machine-checked end to end.

Every leaf assembles its inputs (base degree, escape degree, scaling bound,
largest local index) from recomputed arithmetic, evaluates the threshold
formula, and must land at or below the target: 39 in the Picard-rank-one
case, 97 in the weak case.  Geometric steps the arithmetic cannot see are
consumed as named axioms and listed in the report.
"""

from fanobasket.birational import replay_birationality
from fanobasket.search import replay_delta1

for family in ("P1_ge_3", "P1_eq_2", "P1_eq_1", "P1_eq_0"):
    rep = replay_delta1(family)
    print(f"{family}: {rep.conclusion} "
          f"({len(rep.survivors)} survivors, {len(rep.eliminated)} eliminated)")

for target in ("QFano39", "Weak97"):
    rep = replay_birationality(target)
    print(f"\n== {target}: {rep.conclusion}")
    for leaf in rep.leaves:
        print(f"  {leaf['name']:34s} m0={leaf['m0']} m1={leaf['m1']:>3}"
              f" mu0={leaf['mu0']:>4} variant={leaf['variant']:>3}"
              f" -> {leaf['threshold']}")
    print("axioms:", len(set(rep.axioms)))
