"""The packing order and the canonical unpacking chain.

Packing merges two points (b1,r1),(b2,r2) into (b1+b2,r1+r2); prime packings
(b1 r2 - b2 r1 = 1) generate the partial order the case analyses walk.
Unpacking against the fraction sets S^(n) recovers the chain of stage
baskets, whose prime-packing counts eps_n are the key bookkeeping device.
"""

from fanobasket.basket import Basket
from fanobasket.canonical import (
    canonical_chain,
    dominated_baskets,
    minimal_baskets,
    prime_packings,
)

B = Basket.parse

basket = B("2x(1,2),(1,3),(1,4)")
print(f"one-step prime packings of {basket.text()}:")
for packed in prime_packings(basket):
    print("  ->", packed.text())

print("\nfull closure under prime packings:")
for member in dominated_baskets(basket):
    print("  ", member.text())

print("\nminimal baskets dominated by 9x(1,2),(1,3),(1,4):")
for member in minimal_baskets(B("9x(1,2),(1,3),(1,4)")):
    print("  ", member.text())

print("\ncanonical chain of (3,7):")
for stage in canonical_chain(B("(3,7)")).stages:
    print(f"  stage {stage.level}: {stage.basket.text()}  eps = {stage.epsilon}")

print("\ngamma-pruned closure of 9x(1,2),(1,3),(1,5), volume-positive members:")
from fanobasket.basket import WeightedBasket

for member in dominated_baskets(B("9x(1,2),(1,3),(1,5)"), prune=lambda b: b.gamma() > 0):
    wb = WeightedBasket(member, 0)
    if wb.volume() > 0:
        print(f"   {member.text()}   -K^3 = {wb.volume()}")
