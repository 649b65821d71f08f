"""Structural checks: information sets, quasi-cyclicity certificates,
distance bounds and sweeps, design duality, rate tables."""

import numpy as np
import pytest

from liftedcodes import linalg
from liftedcodes.analysis import (
    design_dual_report,
    distance_report,
    exact_distance,
    format_rate,
    incidence_matrix,
    information_set,
    information_set_check,
    mds_exact_distance,
    plift_plane_dimension_formula,
    qc_certificate,
    rate_table,
    rate_table_csv,
)
from liftedcodes.codes import make_code
from liftedcodes.degrees import adeg
from liftedcodes.gf import GF


def test_information_set_lift_4_2_2():
    C = make_code("Lift", 4, 2, 2)
    S = information_set(C)
    assert len(S) == C.dim == 7
    assert information_set_check(C, S)


def test_information_set_plift_chart_sizes():
    C = make_code("PLift", 4, 2, 3)
    S = information_set(C)
    assert len(S) == 11
    # chart blocks: the convention point, then sizes dim Lift(1,2), dim Lift(2,2)
    assert S[0] == (0, 0, 1)
    chart1 = [p for p in S if p[:1] == (0,) and p[1] == 1]
    chart2 = [p for p in S if p[0] == 1]
    assert len(chart1) == len(adeg(1, 2, 4)) == 3
    assert len(chart2) == len(adeg(2, 2, 4)) == 7
    assert information_set_check(C, S)


def test_information_set_prs_mds():
    # order-1 projective lifting: any k+1 points work, the constructed set
    # in particular
    for q in (4, 8):
        for k in range(1, q):
            C = make_code("PLift", q, 1, k)
            S = information_set(C)
            assert len(S) == k + 1
            assert information_set_check(C, S)


def test_information_set_random_draws():
    rng = np.random.default_rng(13)
    for q, m, k in ((4, 2, 3), (8, 2, 5), (9, 2, 7), (4, 3, 2)):
        for kind in ("Lift", "PLift"):
            kk = min(k, q - 2) if kind == "Lift" else k
            C = make_code(kind, q, m, kk)
            for _ in range(3):
                assert information_set_check(C, rng=rng), (kind, q, m, kk)


def test_qc_certificate_4_2():
    C = make_code("PLift", 4, 2, 3)
    cert = qc_certificate(GF(4), 2, C)
    assert cert is not None and cert.verified
    assert cert.d == 3
    assert [len(c) for c in cert.cycles] == [7, 7, 7]
    # permutation is a product of d disjoint (n/d)-cycles over the blocks
    perm = cert.permutation
    assert sorted(perm) == list(range(21))
    for cyc in cert.cycles:
        assert {perm[i] for i in cyc} == set(cyc)


def test_qc_certificate_4_3_cyclic():
    C = make_code("PLift", 4, 3, 2)
    cert = qc_certificate(GF(4), 3, C)
    assert cert is not None and cert.verified
    assert cert.d == 1
    assert [len(c) for c in cert.cycles] == [85]


def test_qc_certificate_inapplicable():
    # q = 5, m = 2: n = 31, d = gcd(31,4) = 1, but gcd(31,4) = 1 applies...
    # use q = 3, m = 1: n = 4, d = gcd(4,2) = 2, n/d = 2, gcd(2,2) = 2 != 1
    C = make_code("PLift", 3, 1, 2)
    assert qc_certificate(GF(3), 1, C) is None


def test_qc_representation_covers_space():
    C = make_code("PLift", 4, 2, 1)
    cert = qc_certificate(GF(4), 2, C)
    assert sorted(cert.support_positions) == list(range(21))
    assert all(w != 0 for w in cert.twist)


def test_distance_bounds_plift_4_2_3():
    C = make_code("PLift", 4, 2, 3)
    rep = distance_report(C, exact=True)
    assert rep.lower == 6 and rep.upper == 9
    assert rep.lower <= rep.exact <= rep.upper


def test_distance_exact_sandwich_more():
    for q, k in ((2, 1), (3, 1), (3, 2), (4, 1), (4, 2)):
        C = make_code("PLift", q, 2, k)
        rep = distance_report(C, exact=True)
        assert rep.lower <= rep.exact <= rep.upper, (q, k)


def test_prs_distance_mds():
    for q in (4, 8):
        for k in range(1, q):
            C = make_code("PRS", q, 1, k)
            if q ** (k + 1) <= 10 ** 6:
                assert exact_distance(C) == q + 1 - k
            assert mds_exact_distance(C) == q + 1 - k
    # order-1 projective lifting bounds collapse to the exact value
    rep = distance_report(make_code("PLift", 8, 1, 3), exact=True)
    assert rep.lower == rep.upper == rep.exact == 6


def test_exact_distance_guard():
    C = make_code("PLift", 16, 2, 15)
    with pytest.raises(ValueError):
        exact_distance(C, limit=10 ** 6)


def test_design_duality():
    for q in (2, 3, 4):
        rep = design_dual_report(q, 2)
        assert rep["passed"], rep
    assert design_dual_report(2, 3)["passed"]


def test_design_duality_arithmetic():
    assert plift_plane_dimension_formula(2, 2) == 11
    assert plift_plane_dimension_formula(2, 3) == 45
    assert plift_plane_dimension_formula(2, 1) == 3
    assert plift_plane_dimension_formula(3, 1) == 6
    rep = design_dual_report(4, 2)
    assert rep["dual_dim"] == 21 - 11 == 10 == 3 ** 2 + 1


def test_incidence_matrix_shape():
    H = incidence_matrix(GF(3), 2)
    assert H.shape == (13, 13)
    assert set(H.sum(axis=1).tolist()) == {4}  # q+1 points per line


def test_rate_table_published_rows():
    rows = rate_table(4, 2)
    assert [r["dim_A"] for r in rows] == [1, 3, 7]
    assert [r["dim_P"] for r in rows] == [3, 6, 11]
    assert [r["dim_PRM"] for r in rows] == [3, 6, 10]
    row3 = rows[2]
    assert (row3["n_A"], row3["dim_A"], format_rate(row3["R_A"])) == (16, 7, "0.438")
    assert (row3["n_P"], row3["dim_P"], format_rate(row3["R_P"])) == (21, 11, "0.524")
    assert (row3["dim_PRM"], format_rate(row3["R_PRM"])) == (10, "0.476")


def test_rate_table_csv_table2_bytes():
    expected = (
        "k,n_A,dim_A,R_A,n_P,dim_P,R_P,dim_PRM,R_PRM\n"
        "1,16,1,0.0625,21,3,0.143,3,0.143\n"
        "2,16,3,0.188,21,6,0.286,6,0.286\n"
        "3,16,7,0.438,21,11,0.524,10,0.476\n"
    )
    assert rate_table_csv(4, 2) == expected


def test_rate_table_multiple_q_blocks():
    text = rate_table_csv([4, 8], 2)
    assert text.count("# q=") == 2
    assert text.count("k,n_A") == 2
