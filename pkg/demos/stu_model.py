"""Noether-Lefschetz numbers of the STU model feeding the Yau-Zaslow numbers."""

from k3enum.nl_stu import NLQuery, kml_series, nl_number, yz_pipeline_check

print("NL(p=1, d=(1,1)) =", nl_number(NLQuery(1, 1, 1)))

# fibre-class invariants; the second domain also reaches negative d2
print({k: str(v) for k, v in kml_series(2, 2).items()})
neg = kml_series(2, -1, domain="q1<q2", d2_min=-2)
print({k: str(v) for k, v in neg.items() if v})

for d in [(1, 1), (1, 2), (2, 3)]:
    rep = yz_pipeline_check(*d)
    print(d, rep.values["lhs_2N"], rep.values["rhs_nl_sum"], rep.status)
