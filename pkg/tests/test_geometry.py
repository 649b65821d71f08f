"""Geometry: enumeration counts, standard representatives, lines, and the
homogenization weights that make line restrictions literal subwords."""

import numpy as np
import pytest
from scipy.stats import chisquare

from liftedcodes.gf import GF
from liftedcodes.geometry import (
    LineEmbedding,
    all_embeddings,
    all_lines,
    enumerate_points,
    lines_through,
    random_embedding_through,
    standard_line_embedding,
    standardize,
    theta,
)


def eval_monomial(F, point, d):
    acc = 1
    for c, e in zip(point, d):
        acc = F.mul(acc, F.pow(c, e))
    return acc


def eval_poly(F, point, terms):
    acc = 0
    for d, coeff in terms.items():
        acc = F.add(acc, F.mul(coeff, eval_monomial(F, point, d)))
    return acc


def test_point_counts():
    assert len(enumerate_points(GF(3), 2, "projective")) == 13
    assert len(enumerate_points(GF(3), 1, "projective")) == 4
    assert len(enumerate_points(GF(4), 2, "affine")) == 16
    assert len(enumerate_points(GF(4), 3, "projective")) == theta(3, 4) == 85


def test_support_order_and_uniqueness():
    sup = enumerate_points(GF(4), 2, "projective")
    assert len(set(sup.points)) == len(sup)
    # affine chart first, in lexicographic order, then the infinity block
    assert sup.points[0] == (1, 0, 0)
    assert all(pt[0] == 1 for pt in sup.points[:16])
    assert all(pt[0] == 0 for pt in sup.points[16:])
    assert sup.points[-1] == (0, 0, 1)
    # every point is its own standard representative
    F = GF(4)
    for pt in sup.points:
        assert standardize(F, pt)[0] == pt


def test_standardize_worked_values():
    F = GF(3)
    pt, lam = standardize(F, (2, 1, 1))
    assert pt == (1, 2, 2) and lam == 2
    pt, lam = standardize(F, (0, 2, 1))
    assert pt == (0, 1, 2) and lam == 2
    pt, lam = standardize(F, (1, 0, 0))
    assert pt == (1, 0, 0) and lam == 1
    with pytest.raises(ValueError):
        standardize(F, (0, 0, 0))


def test_lines_through_counts_and_partition():
    F = GF(3)
    sup = enumerate_points(F, 2, "projective")
    P = (1, 1, 1)
    lines = lines_through(P, sup)
    assert len(lines) == 4  # theta(1, 3)
    pos_p = sup.position(P)
    residues = [set(line) - {pos_p} for line in lines]
    assert all(pos_p in line for line in lines)
    union = set().union(*residues)
    assert len(union) == sum(len(r) for r in residues) == len(sup) - 1

    sup4 = enumerate_points(GF(4), 3, "projective")
    assert len(lines_through((1, 0, 0, 0), sup4)) == 21  # theta(2, 4)


def test_all_lines_count():
    # P^2 is self-dual: as many lines as points
    sup = enumerate_points(GF(4), 2, "projective")
    assert len(all_lines(sup)) == 21
    for line in all_lines(sup):
        assert len(line) == 5  # q + 1


def test_worked_embedding_rank():
    F = GF(3)
    L = LineEmbedding.from_rows(F, [(1, 1), (0, 1), (1, 0)])
    assert L.col0 == (1, 0, 1) and L.col1 == (1, 1, 0)
    with pytest.raises(ValueError):
        LineEmbedding(F, (1, 0, 1), (2, 0, 2))  # rank 1


def test_worked_weight_vector_point_indexed():
    # weights of a fully worked F_3 embedding, compared point-by-point
    F = GF(3)
    L = LineEmbedding.from_rows(F, [(1, 1), (0, 1), (1, 0)])
    w = L.weight_vector(1)
    dom = L.domain_points()
    by_domain_point = {dom[i]: w[i] for i in range(4)}
    assert by_domain_point[(1, 1)] == 2
    assert by_domain_point[(1, 2)] == 2
    assert by_domain_point[(1, 0)] == 1
    assert by_domain_point[(0, 1)] == 1
    # the images, standardized, match the worked example
    img = {dom[i]: L.image_points()[i] for i in range(4)}
    assert img[(1, 1)] == (1, 2, 2)
    assert img[(1, 2)] == (0, 1, 2)
    assert img[(1, 0)] == (1, 0, 1)
    assert img[(0, 1)] == (1, 1, 0)


def test_weight_vector_all_ones_for_standard_embedding():
    F = GF(4)
    sup = enumerate_points(F, 2, "projective")
    for line in all_lines(sup)[:6]:
        pts = [sup[i] for i in line]
        L = standard_line_embedding(F, pts)
        assert set(L.weight_vector(3)) == {1}
        assert set(L.image_points()) == set(pts)


def test_subword_property_random_polys():
    # ev at standardized image = lambda^v * (f o L)(x), hence the weighted
    # restriction equals the subword of the full evaluation
    F = GF(4)
    rng = np.random.default_rng(5)
    v = 6
    sphere = [(d0, d1, v - d0 - d1) for d0 in range(v + 1) for d1 in range(v + 1 - d0)]
    for _ in range(20):
        terms = {tuple(sphere[i]): int(rng.integers(1, 4))
                 for i in rng.choice(len(sphere), size=5, replace=False)}
        P = (1, int(rng.integers(4)), int(rng.integers(4)))
        L = random_embedding_through(P, F, rng)
        w = L.weight_vector(v)
        for pos, x in enumerate(L.domain_points()):
            img, lam = L.image_info()[pos]
            lhs = eval_poly(F, img, terms)
            rhs = F.mul(F.pow(lam, v), eval_poly(F, L.map_raw(x), terms))
            assert lhs == rhs
            assert lhs == F.mul(w[pos], eval_poly(F, L.map_raw(x), terms))


def test_random_embedding_through_contract():
    F = GF(3)
    rng = np.random.default_rng(0)
    P = (1, 2, 0)
    for _ in range(50):
        L = random_embedding_through(P, F, rng)
        assert L.col1 == P
        assert L.image_points()[-1] == P  # infinity maps to P

    # |L(P^1)| = q + 1 for every rank-2 embedding
    for L in list(all_embeddings(F, 2))[:100]:
        assert len(set(L.image_points())) == 4


def test_random_embedding_line_uniformity():
    # 10^4 draws cover the 4 lines through P with frequency ~1/4 each
    F = GF(3)
    sup = enumerate_points(F, 2, "projective")
    P = (1, 1, 1)
    expected_lines = lines_through(P, sup)
    rng = np.random.default_rng(42)
    counts = {line: 0 for line in expected_lines}
    n_draws = 10_000
    for _ in range(n_draws):
        L = random_embedding_through(P, F, rng)
        counts[L.line_indices(sup)] += 1
    stat, p = chisquare(list(counts.values()))
    assert p > 1e-3


def test_all_embeddings_count():
    # one representative per scalar class: theta * (q^(m+1) - q)
    F = GF(3)
    embs = list(all_embeddings(F, 2))
    assert len(embs) == 13 * (27 - 3)


def test_point_text_roundtrip():
    sup = enumerate_points(GF(4), 2, "projective")
    s = sup.format_point(5)
    assert sup.parse_point(s) == sup.points[5]
    sup3 = enumerate_points(GF(3), 2, "projective")
    assert sup3.parse_point("([1]:[2]:[0])") == (1, 2, 0)
