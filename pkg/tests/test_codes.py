"""Code construction: dimensions against published tables, the worked
encoding example, line restrictions, shortening/puncturing, automorphisms."""

import numpy as np
import pytest

from liftedcodes import linalg
from liftedcodes.codes import (
    Word,
    apply_affine_action,
    apply_projective_action,
    code_equal,
    encode,
    make_code,
    prm_dimension,
    puncture_to_infinity,
    random_codeword,
    restrict_to_line,
    rm_dimension,
    shorten_at_infinity,
    word_from_text,
    word_to_text,
)
from liftedcodes.gf import GF
from liftedcodes.geometry import (
    LineEmbedding,
    all_lines,
    enumerate_points,
    random_embedding_through,
    standard_line_embedding,
)


def test_plift_4_2_3_parameters():
    C = make_code("PLift", 4, 2, 3)
    assert C.length == 21
    assert C.dim == 11
    assert C.v == 6


def test_prs_parameters():
    for q in (4, 8):
        for k in range(q):
            C = make_code("PRS", q, 1, k)
            assert C.length == q + 1
            assert C.dim == k + 1


def test_lift_16_2_14_dimension():
    assert make_code("Lift", 16, 2, 14).dim == 175


def test_generator_full_rank_across_kinds():
    cases = [("RS", 8, 1, 5), ("PRS", 8, 1, 5), ("RM", 4, 2, 3), ("PRM", 4, 2, 3),
             ("Lift", 4, 2, 2), ("PLift", 4, 2, 3), ("RM", 3, 3, 4), ("PRM", 3, 3, 4),
             ("Lift", 8, 3, 6), ("PLift", 8, 2, 7), ("PRM", 9, 2, 10)]
    for kind, q, m, k in cases:
        C = make_code(kind, q, m, k)
        assert linalg.rank(C.field, C.G) == C.dim, (kind, q, m, k)


def test_rm_prm_dimension_formulas():
    # closed formulas match degree-set counts, below and above q-1
    for q, m in ((4, 2), (3, 2), (4, 3)):
        for k in range(1, m * (q - 1) + 1):
            assert make_code("RM", q, m, k).dim == rm_dimension(m, k, q), (q, m, k)
            assert make_code("PRM", q, m, k).dim == prm_dimension(m, k, q), (q, m, k)
    # binomial regime
    assert make_code("RM", 4, 2, 3).dim == 10
    assert make_code("PRM", 4, 2, 2).dim == 6
    assert prm_dimension(2, 3, 4) == 10


def test_rm_prm_coincide_with_rs_prs_at_order_one():
    for q in (3, 4, 8):
        for k in range(1, q - 1):
            assert code_equal(make_code("RM", q, 1, k), make_code("RS", q, 1, k))
            assert code_equal(make_code("PRM", q, 1, k), make_code("PRS", q, 1, k))


def test_rm_inside_lift():
    for q in (4, 8):
        for k in range(q - 1):
            RM = make_code("RM", q, 2, k)
            L = make_code("Lift", q, 2, k)
            assert linalg.rowspace_contains(L.field, L.G, RM.G), (q, k)


def test_encode_linearity_and_units():
    C = make_code("PLift", 4, 2, 3)
    zero = encode(C, [0] * C.dim)
    assert all(v == 0 for v in zero.values)
    for i in (0, 5, C.dim - 1):
        msg = [0] * C.dim
        msg[i] = 1
        assert encode(C, msg).values == list(C.G[i])
    with pytest.raises(ValueError):
        encode(C, [0] * (C.dim - 1))


def test_encode_worked_example():
    # f = X_1 in PRM_3(2, 1): values at the worked example points
    C = make_code("PRM", 3, 2, 1)
    tuples = C.degree_tuples
    assert (0, 1, 0) in tuples
    msg = [0] * C.dim
    msg[tuples.index((0, 1, 0))] = 1
    w = encode(C, msg)
    example_points = ["([1]:[1]:[1])", "([1]:[1]:[2])", "([1]:[1]:[0])",
                    "([1]:[2]:[1])", "([1]:[2]:[2])", "([1]:[2]:[0])",
                    "([1]:[0]:[1])", "([1]:[0]:[2])", "([1]:[0]:[0])",
                    "([0]:[1]:[1])", "([0]:[1]:[2])", "([0]:[1]:[0])",
                    "([0]:[0]:[1])"]
    example_values = [1, 1, 1, 2, 2, 2, 0, 0, 0, 1, 1, 1, 0]
    for text, val in zip(example_points, example_values):
        pt = C.support.parse_point(text)
        assert w[C.support.position(pt)] == val


def test_restrict_worked_example():
    # restriction of ev(X_1) along the worked F_3 embedding is (1,2,0,1)
    # on the domain points (1:1),(1:2),(1:0),(0:1)
    C = make_code("PRM", 3, 2, 1)
    msg = [0] * C.dim
    msg[C.degree_tuples.index((0, 1, 0))] = 1
    w = encode(C, msg)
    F = GF(3)
    L = LineEmbedding.from_rows(F, [(1, 1), (0, 1), (1, 0)])
    r = restrict_to_line(w, L, 1)
    dom = L.domain_points()
    by_point = {dom[i]: r[i] for i in range(4)}
    assert by_point[(1, 1)] == 1
    assert by_point[(1, 2)] == 2
    assert by_point[(1, 0)] == 0
    assert by_point[(0, 1)] == 1
    # weighted restriction = literal subword
    wv = L.weight_vector(1)
    subword = [w[C.support.position(p)] for p in L.image_points()]
    assert [F.mul(a, b) for a, b in zip(wv, r.values)] == subword


def test_restrictions_land_in_prs():
    rng = np.random.default_rng(9)
    for q in (4, 8):
        C = make_code("PLift", q, 2, q - 1)
        prs = make_code("PRS", q, 1, q - 1)
        sup = C.support
        for _ in range(10):
            c = random_codeword(C, rng)
            P = sup[int(rng.integers(len(sup)))]
            L = random_embedding_through(P, C.field, rng)
            r = restrict_to_line(c, L, C.v)
            assert prs.contains(r.values)
        # zero codeword restricts to zero
        z = encode(C, [0] * C.dim)
        L = random_embedding_through(sup[0], C.field, rng)
        assert all(v == 0 for v in restrict_to_line(z, L, C.v).values)


def test_every_generator_row_restricts_into_prs_exhaustive():
    q = 4
    C = make_code("PLift", q, 2, 3)
    prs = make_code("PRS", q, 1, 3)
    sup = C.support
    for line in all_lines(sup):
        L = standard_line_embedding(C.field, [sup[i] for i in line])
        for row in C.G:
            r = restrict_to_line(Word(sup, list(row)), L, C.v)
            assert prs.contains(r.values)


def test_shorten_puncture_worked_example():
    C = make_code("PLift", 4, 2, 3)
    S = shorten_at_infinity(C)
    P = puncture_to_infinity(C)
    assert code_equal(S, make_code("Lift", 4, 2, 2))
    assert code_equal(P, make_code("PLift", 4, 1, 3))
    assert code_equal(P, make_code("PRS", 4, 1, 3))
    assert S.dim + P.dim == C.dim


def test_shorten_at_order_one_gives_rs():
    for q in (4, 8):
        for k in range(1, q):
            C = make_code("PLift", q, 1, k)
            S = shorten_at_infinity(C)
            assert code_equal(S, make_code("RS", q, 1, k - 1))
            P = puncture_to_infinity(C)
            assert P.length == 1 and P.dim == 1


def test_code_equal_self_and_mismatch():
    C = make_code("PLift", 4, 2, 3)
    assert code_equal(C, C)
    with pytest.raises(ValueError):
        code_equal(C, make_code("PRS", 4, 1, 3))


def test_projective_action_preserves_plift():
    rng = np.random.default_rng(4)
    C = make_code("PLift", 4, 2, 3)
    F = C.field
    for _ in range(25):
        c = random_codeword(C, rng)
        M = _random_invertible(F, 3, rng)
        out = apply_projective_action(M, c, C.v)
        assert C.contains(out.values)
    with pytest.raises(ValueError):
        apply_projective_action([[1, 0, 0], [0, 1, 0], [1, 1, 0]], c, C.v)


def test_affine_action_preserves_rm():
    rng = np.random.default_rng(6)
    C = make_code("RM", 8, 2, 3)
    F = C.field
    for _ in range(25):
        c = random_codeword(C, rng)
        M = _random_invertible(F, 2, rng)
        b = [int(x) for x in rng.integers(8, size=2)]
        out = apply_affine_action(M, b, c)
        assert C.contains(out.values)


def _random_invertible(F, n, rng):
    while True:
        M = [[int(x) for x in rng.integers(F.order, size=n)] for _ in range(n)]
        if linalg.rank(F, linalg.as_matrix(M)) == n:
            return M


def test_generator_matrix_text_export():
    from liftedcodes.codes import generator_matrix_text
    C = make_code("PRS", 4, 1, 1)
    text = generator_matrix_text(C)
    lines = text.splitlines()
    assert len(lines) == 2
    assert all(len(ln.split()) == 5 for ln in lines)
    # row of the monomial S*T... degree tuples sorted: (0,1) then (1,0)
    F = C.field
    row0 = [F.parse_element(s).index for s in lines[0].split()]
    assert row0 == list(C.G[0])


def test_word_text_roundtrip():
    C = make_code("PLift", 4, 2, 3)
    rng = np.random.default_rng(8)
    w = random_codeword(C, rng)
    w.values[3] = None
    text = word_to_text(C, w)
    C2, w2 = word_from_text(text)
    assert C2.descriptor() == C.descriptor()
    assert w2.values == w.values


def test_descriptor_shape():
    d = make_code("PLift", 4, 2, 3).descriptor()
    assert d == {"kind": "PLift", "q": 4, "m": 2, "k": 3, "v": 6,
                 "dim": 11, "length": 21}
