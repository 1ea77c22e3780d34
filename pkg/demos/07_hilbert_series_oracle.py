"""Cross-checking Riemann-Roch against weighted hypersurface Hilbert series.

The series of a weighted complete intersection supplies anti-plurigenera
with no basket arithmetic at all; fitting a basket that reproduces forty
coefficients exactly is a strong end-to-end check, and the fitted volume
must equal d iota^3 / prod(a).
"""

from fanobasket.wci import (
    X24_30,
    X42,
    X66,
    X6D_PAIRS,
    anti_plurigenera_from_hilbert,
    fit_basket,
    x6d_member,
)

for name, wci in [("X66 in P(1,5,6,22,33)", X66),
                  ("X42 in P(1,1,6,14,21)", X42),
                  ("X24,30 in P(1,8,9,10,12,15)", X24_30)]:
    p = anti_plurigenera_from_hilbert(wci, 40)
    fits = fit_basket(p)
    print(name)
    print(f"  P_-1..P_-10 = {list(p.values[:10])}")
    print(f"  formula volume = {wci.hypersurface_volume()}")
    for wb in fits:
        print(f"  fitted basket {wb.basket.text()}  -K^3 = {wb.volume()}")
    print()

print("the twelve-member hypersurface family X_{6d} in P(1,a,b,2d,3d):")
for a, b in X6D_PAIRS:
    wci = x6d_member(a, b)
    print(f"  (a,b)=({a},{b}): d={a+b}, volume {wci.hypersurface_volume()}")

print("\nthe record-holder for realized Gorenstein index:")
from fanobasket.wci import X19
p19 = anti_plurigenera_from_hilbert(X19, 40)
for wb in fit_basket(p19):
    print(f"  X19 in P(1,3,4,5,7) -> {wb.basket.text()}  r_X = {wb.gorenstein_index()}"
          f"  (brute-force cap is 840)")
