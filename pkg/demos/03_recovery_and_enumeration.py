"""From plurigenus constraints back to baskets, and the 23-row table.

The multiplicities of the stage-0 basket are integer-linear in the first few
anti-plurigenera once the tail counts are chosen; enumerating the finitely
many feasible tails and closing under prime packings turns plurigenus
constraints into complete basket lists.  With P_-1 = P_-2 = 0 the survivors
are exactly the 23 tabulated baskets.
"""

from fanobasket.basket import PlurigenusSequence
from fanobasket.cli import render_enumeration, _sorted_like_table
from fanobasket.recovery import RecoveryInput, feasible_tails, recover
from fanobasket.search import ConstraintSet, enumerate_geometric

ladder = PlurigenusSequence((2, 3, 4, 5, 6, 7))
print("P_-1..P_-6 = 2..7: the feasible tails are")
for tail in feasible_tails(ladder, sigma5_max=4):
    data = recover(RecoveryInput(ladder, tail.sigma5, tail.tail_counts))
    print(f"  sigma5={tail.sigma5} tail={tail.tail_key()}:"
          f" stage-0 basket {data.basket0().text()}")

print("\nenumerating all geometric baskets with P_-1 = P_-2 = 0:")
survivors = enumerate_geometric(ConstraintSet(p_exact={1: 0, 2: 0}))
print(render_enumeration(_sorted_like_table(survivors)))
print(f"({len(survivors)} baskets)")
