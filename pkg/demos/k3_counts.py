"""Genus g curve counts on a K3 surface and two classical cross-checks."""

from k3enum.k3counts import gathmann_check, gbl_series, lee_leung_N12, yau_zaslow_series

# rational curves in a primitive class of genus p
yz = yau_zaslow_series(8)
print("N_0^p:", [int(yz[p]) for p in range(8)])

# genus 2 curves through two general points
f2 = gbl_series(2, 8)
print("N_2^p:", [int(f2[p]) for p in range(8)])

# twice a genus 2 class: conics + pairs + reducible double covers
r = gathmann_check()
print(r.values["integral_5_nodal"], "+", r.values["pairs_of_rational_curves"], "+", r.values["reducible_double_covers"], "=", r.values["sum"])

# genus 1 curves in twice a primitive class
print("N_1 in 2L:", [lee_leung_N12(p) for p in range(1, 5)])
