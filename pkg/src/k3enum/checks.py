"""Named consistency checks, each returning a :class:`~k3enum.report.Report`."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Dict, Optional

from . import bps, combinat, k3counts, modular, nl_stu, singularities
from .arith import partition_count
from .report import Report


def check_gathmann(trunc: Optional[int] = None, depth: int = 64) -> Report:
    return k3counts.gathmann_check()


def check_lee_leung(trunc: Optional[int] = None, depth: int = 64) -> Report:
    """``N_12^p`` for ``p <= 4``, with the inputs cross-checked against the table1 fixture."""
    p_max = 4 if trunc is None else trunc
    fixture = k3counts.parse_tsv_grid(k3counts.load_fixture("table1.tsv"))
    f1 = k3counts.gbl_series(1, 4 * p_max - 2)
    cases = []
    ok = True
    for p in range(1, p_max + 1):
        value = k3counts.lee_leung_N12(p)
        hi, lo = int(f1[4 * p - 3]), int(f1[p])
        case_ok = value == hi + 2 * lo
        # the table1 fixture lists N_1^p' in column p' - 1 when that column exists
        for pp, v in ((4 * p - 3, hi), (p, lo)):
            cell = fixture.get((pp, pp - 1))
            if cell is not None and cell != v:
                case_ok = False
        ok &= case_ok
        cases.append({"p": p, "N_12": value, "N_1^(4p-3)": hi, "N_1^p": lo, "status": "PASS" if case_ok else "FAIL"})
    return Report("lee-leung", ok, {"p_max": p_max}, {"cases": cases})


def check_quasimodular(trunc: Optional[int] = None, depth: int = 64) -> Report:
    t = 14 if trunc is None else trunc
    results = {str(g): modular.quasimodular_check_F_g(g, t) for g in range(5)}
    return Report("quasimodular", all(results.values()), {"trunc": t, "g_max": 4}, {"holds_for_g": results})


def check_pyramidal(trunc: Optional[int] = None, depth: int = 64) -> Report:
    a_max = 12 if trunc is None else trunc
    rows = []
    ok = True
    for a in range(1, a_max + 1):
        pyr = {s for s in combinat.enumerate_admissible(a) if combinat.is_pyramidal(s)}
        images = set(combinat.young_bijection(a).values())
        row_ok = len(pyr) == partition_count(a) and images == pyr
        ok &= row_ok
        rows.append({"a": a, "pyramidal": len(pyr), "partitions": partition_count(a), "young_images_match": images == pyr})
    return Report("pyramidal", ok, {"a_max": a_max}, {"rows": rows})


def check_cremona(trunc: Optional[int] = None, depth: int = 64) -> Report:
    a_max = 8 if trunc is None else trunc
    rows = []
    ok = True
    for a in range(1, a_max + 1):
        agree = disagree = undecided = 0
        for s in combinat.enumerate_admissible(a):
            c = combinat.class_of_sequence(s)
            v = combinat.blowup_eval(c, depth)
            if v == combinat.UNDECIDED:
                undecided += 1
            elif v == int(combinat.is_pyramidal(s)):
                agree += 1
            else:
                disagree += 1
            # Cremona moves are involutions
            if len(c.alphas) >= 3 and combinat.cremona(combinat.cremona(c, (0, 1, 2)), (0, 1, 2)) != c:
                disagree += 1
        ok &= disagree == 0 and undecided == 0
        rows.append({"a": a, "agree": agree, "disagree": disagree, "undecided": undecided})
    return Report("cremona", ok, {"a_max": a_max, "depth": depth}, {"rows": rows})


def check_kkv_y1(trunc: Optional[int] = None, depth: int = 64) -> Report:
    p_max = 12 if trunc is None else trunc
    prod = bps.kkv_product(p_max)
    y1 = bps.kkv_y1_check(p_max)
    sym = prod.is_symmetric() and prod.span_ok()
    table2 = bps.kkv_table(4).to_tsv() == k3counts.load_fixture("table2.tsv")
    return Report(
        "kkv-y1",
        y1 and sym and table2,
        {"p_max": p_max},
        {"y_equals_1_matches_yau_zaslow": y1, "symmetric_in_y": sym, "table2_fixture": table2, "values_at_y1": prod.at_y1()},
    )


def check_mpt(trunc: Optional[int] = None, depth: int = 64) -> Report:
    p_max = 5 if trunc is None else trunc
    verdict = bps.calibrate_mpt(3, p_max)
    ok = verdict == {"positive": True, "signed": False}
    return Report("mpt-consistency", ok, {"g_max": 3, "p_max": p_max}, {"convention_matches": verdict, "chosen": "positive"})


def check_harvey_moore(trunc: Optional[int] = None, depth: int = 64) -> Report:
    t = 8 if trunc is None else trunc
    main = nl_stu.harvey_moore_report(t, t)
    other = nl_stu.harvey_moore_report(t, t, domain="q1<q2")
    swapped = nl_stu.harvey_moore_report(t, t, rational_sign="q1-q2")
    main.values["other_domain"] = other.status
    main.values["with_q1_over_q1_minus_q2"] = swapped.status
    main.passed = main.passed and other.passed and not swapped.passed
    return main


def check_yz_pipeline(trunc: Optional[int] = None, depth: int = 64) -> Report:
    return nl_stu.yz_pipeline_suite()


def check_fiber_count(trunc: Optional[int] = None, depth: int = 64) -> Report:
    return nl_stu.stu_fiber_checks()


def check_quintic(trunc: Optional[int] = None, depth: int = 64) -> Report:
    got = bps.quintic_degree10()
    n = bps.QUINTIC_INSTANTONS
    expected = Fraction(n[1], 10**3) + Fraction(n[2], 5**3) + Fraction(n[5], 2**3) + n[10]
    D = 24 if trunc is None else trunc
    sample = {d: Fraction(d * d - 3, d + 1) for d in range(1, D + 1)}
    roundtrip = bps.genus0_invert(bps.genus0_forward(sample, D), D) == sample
    return Report("quintic", got["N_10"] == expected and roundtrip, {"D": D}, {**got, "genus0_roundtrip": roundtrip})


def check_singularities(trunc: Optional[int] = None, depth: int = 64) -> Report:
    a2l = all(singularities.euler_G((2, 2 * l + 1)) == l + 1 for l in range(1, 11))
    mults = [singularities.fiber_multiplicity(d, r) for d, r in ((1, 2), (1, 1), (2, 2), (3, 3))]
    pairs = [(p, q) for p in range(1, 40) for q in range(1, 40) if p + q <= 40 and gcd(p, q) == 1]
    gaps = all(singularities.delta_invariant((p, q)) == (p - 1) * (q - 1) // 2 for p, q in pairs)
    ok = a2l and mults == [1, 2, 3, 4] and gaps
    return Report(
        "singularities",
        ok,
        {},
        {"A_2l_euler": a2l, "node_cusp_tacnode_triple": mults, "delta_gap_count_pairs": len(pairs), "delta_closed_form": gaps},
    )


SUITES: Dict[str, Callable[..., Report]] = {
    "gathmann": check_gathmann,
    "lee-leung": check_lee_leung,
    "quasimodular": check_quasimodular,
    "pyramidal": check_pyramidal,
    "cremona": check_cremona,
    "kkv-y1": check_kkv_y1,
    "mpt-consistency": check_mpt,
    "harvey-moore": check_harvey_moore,
    "yz-pipeline": check_yz_pipeline,
    "fiber-count": check_fiber_count,
    "quintic": check_quintic,
    "singularities": check_singularities,
}


def run(name: str, trunc: Optional[int] = None, depth: int = 64) -> Report:
    return SUITES[name](trunc=trunc, depth=depth)
