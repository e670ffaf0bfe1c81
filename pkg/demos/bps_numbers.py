"""KKV numbers, their multiple cover transform, and the MPT comparison."""

from k3enum.bps import bps_forward, calibrate_mpt, kkv_table, mpt_series

r = kkv_table(5)
print(r.to_tsv(4), end="")

# Gromov-Witten side from the BPS numbers, then the same from the point series
R = bps_forward(r.values, 5, 1, 3)
mpt = mpt_series(0, 3, 5)
for g in range(4):
    print(g, [str(R[(g, 1, p)]) for p in range(6)])
    assert [mpt[(g, p)] for p in range(6)] == [R[(g, 1, p)] for p in range(6)]

print("Bernoulli convention that matches:", calibrate_mpt())
