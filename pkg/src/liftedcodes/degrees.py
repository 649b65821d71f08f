"""Exponent-tuple calculus for monomial evaluation codes.

Provides the digitwise partial order on exponents, the two reduction maps
that make evaluation injective (subtract q-1 from a large coordinate for
affine supports; move q-1 one coordinate to the left for projective ones),
and the degree sets of affine and projective lifted codes.

A monomial's evaluations along every line lie in a fixed Reed-Solomon code
exactly when every digitwise shadow of its exponent has low reduced weight;
`adeg` and `pdeg` enumerate those exponents.  `monomial_membership_oracle`
is the definitional brute force used to pin both down in tests.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

from liftedcodes.gf import GF
from liftedcodes.geometry import (
    all_embeddings,
    enumerate_points,
    standard_line_embeddings,
)


def p_adic_leq(a, b, p):
    """True iff every base-p digit of a is <= the matching digit of b.

    Accepts integers or same-length tuples (compared componentwise).
    """
    if isinstance(a, tuple) or isinstance(b, tuple):
        return all(p_adic_leq(x, y, p) for x, y in zip(a, b))
    if a < 0 or b < 0:
        raise ValueError("p-adic order is defined on nonnegative integers")
    while a or b:
        if a % p > b % p:
            return False
        a //= p
        b //= p
    return True


def int_reduce(e, q):
    """Reduce an exponent into {0} union [1, q-1], preserving evaluation.

    x^e and x^int_reduce(e) agree as functions on GF(q).
    """
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if e <= q - 1:
        return e
    return (e - 1) % (q - 1) + 1


def weight(d):
    return sum(d)


def a_reduce(d, q):
    """Reduce every coordinate into [0, q-1] by repeated q-1 subtractions."""
    return tuple(int_reduce(c, q) for c in d)


def is_a_reduced(d, q):
    return all(c <= q - 1 for c in d)


def is_p_reduced(d, q):
    for i, c in enumerate(d):
        if c >= q:
            if any(d[j] != 0 for j in range(i)):
                return False
            if any(d[j] > q - 1 for j in range(i + 1, len(d))):
                return False
    return True


def p_reduce(d, q):
    """Move excess q-1 blocks leftward until the tuple is reduced.

    Applies the shift with the largest source coordinate first and the
    smallest destination first; the maps commute so the order is cosmetic.
    Preserves the weight and the evaluation of the monomial.
    """
    d = list(d)
    changed = True
    while changed:
        changed = False
        for j in range(len(d) - 1, 0, -1):
            if d[j] >= q:
                i = next((i for i in range(j) if d[i] >= 1), None)
                if i is not None:
                    d[i] += q - 1
                    d[j] -= q - 1
                    changed = True
    return tuple(d)


def leftmost_nonzero(d):
    return next(i for i, c in enumerate(d) if c)


def lift_tuple(d, q):
    """Add q-1 to the leftmost nonzero coordinate."""
    i = leftmost_nonzero(d)
    return d[:i] + (d[i] + q - 1,) + d[i + 1:]


def eta(d):
    """Suffix after the leading nonzero coordinate."""
    return d[leftmost_nonzero(d) + 1:]


@dataclass(frozen=True)
class DegreeSet:
    """A reduced exponent set together with its defining parameters."""

    tuples: frozenset
    space: str  # 'affine' | 'projective'
    q: int
    m: int
    k: int
    v: int | None = None

    def __len__(self):
        return len(self.tuples)

    def __contains__(self, d):
        return tuple(d) in self.tuples

    def sorted(self):
        return sorted(self.tuples)

    def to_json(self):
        return json.dumps([list(d) for d in self.sorted()])


def _char_of(q):
    F = GF(q)
    return F.p


@lru_cache(maxsize=None)
def _max_reduced_subweight_map(m, q):
    """For every tuple in the box [0, q-1]^m, the maximum over all digitwise
    shadows e of int_reduce(|e|), computed by a subset-sum digit DP."""
    p = _char_of(q)
    # per-coordinate achievable-sum bitsets
    coord_masks = []
    for c in range(q):
        mask = 1
        pos = 1
        v = c
        while v:
            dig = v % p
            new = mask
            step = pos
            for _ in range(dig):
                new |= new << step
            mask = new
            v //= p
            pos *= p
        coord_masks.append(mask)

    out = {}
    def rec(prefix, mask):
        if len(prefix) == m:
            best = 0
            s = 0
            mm = mask
            while mm:
                if mm & 1:
                    r = int_reduce(s, q)
                    if r > best:
                        best = r
                s += 1
                mm >>= 1
            out[prefix] = best
            return
        for c in range(q):
            cm = coord_masks[c]
            combined = 0
            s = 0
            mm = mask
            while mm:
                if mm & 1:
                    combined |= cm << s
                s += 1
                mm >>= 1
            rec(prefix + (c,), combined)

    rec((), 1)
    return out


def max_reduced_subweight(d, q):
    """max over e <=_p d of int_reduce(|e|); d must lie in the box."""
    return _max_reduced_subweight_map(len(d), q)[tuple(d)]


def adeg(m, k, q):
    """Degree set of the affine lifting of order m of a degree-k code.

    The exponents d in [0, q-1]^m such that every digitwise shadow e of d
    has reduced weight at most k.  Its cardinality is the code dimension.
    """
    if not 0 <= k <= q - 2:
        raise ValueError(f"affine lifting needs 0 <= k <= q-2, got k={k}")
    mrw = _max_reduced_subweight_map(m, q)
    tuples = frozenset(d for d, mx in mrw.items() if mx <= k)
    return DegreeSet(tuples, "affine", q, m, k)


def lifting_degree(m, k, q):
    """Homogeneous evaluation degree of the projective lifting: k + (m-1)(q-1)."""
    return k + (m - 1) * (q - 1)


def pdeg(m, k, q):
    """Degree set of the projective lifting, built recursively.

    Order-1 liftings are the classical projective Reed-Solomon exponents;
    an order-m exponent either starts with a nonzero coordinate (and its
    tail is an order-m affine exponent of degree k-1) or starts with zero
    (and its tail lifts an order-(m-1) projective exponent).
    """
    if not 1 <= k <= q - 1:
        raise ValueError(f"projective lifting needs 1 <= k <= q-1, got k={k}")
    v = lifting_degree(m, k, q)
    if m == 1:
        tuples = frozenset((k - j, j) for j in range(k + 1))
        return DegreeSet(tuples, "projective", q, m, k, v)
    out = set()
    for dstar in adeg(m, k - 1, q).tuples:
        d0 = v - weight(dstar)
        assert d0 > 0
        out.add((d0,) + dstar)
    for d in pdeg(m - 1, k, q).tuples:
        out.add((0,) + lift_tuple(d, q))
    return DegreeSet(frozenset(out), "projective", q, m, k, v)


def _p_reduced_sphere(nvars, v, q):
    """All reduced tuples of the given weight: either inside the box, or one
    oversized leading coordinate followed by a boxed tail."""
    out = []
    # fully boxed tuples summing to v
    def boxed(n, s, prefix):
        if n == 0:
            if s == 0:
                out.append(prefix)
            return
        for c in range(min(q - 1, s), -1, -1):
            boxed(n - 1, s - c, prefix + (c,))
    boxed(nvars, v, ())
    # one oversized coordinate at position i, zeros before, boxed tail after
    for i in range(nvars):
        tailn = nvars - i - 1
        for tail in itertools.product(range(q), repeat=tailn):
            head = v - sum(tail)
            if head >= q:
                out.append((0,) * i + (head,) + tail)
    return out


def pdeg_direct(m, k, q):
    """Same set as pdeg, by scanning reduced weight-v tuples and testing the
    shadow condition on the suffix after the leading coordinate."""
    if not 1 <= k <= q - 1:
        raise ValueError(f"projective lifting needs 1 <= k <= q-1, got k={k}")
    v = lifting_degree(m, k, q)
    mrw = _max_reduced_subweight_map(m, q)  # suffixes have length <= m
    out = set()
    for d in _p_reduced_sphere(m + 1, v, q):
        tail = eta(d)
        padded = tail + (0,) * (m - len(tail))
        if mrw[padded] <= k - 1:
            out.add(d)
    return DegreeSet(frozenset(out), "projective", q, m, k, v)


# ---------------------------------------------------------------------------
# Ground-truth oracle: restrict the monomial to every line and test
# Reed-Solomon membership definitionally.
# ---------------------------------------------------------------------------

def _rs_syndrome_ok(F, values_by_t, k):
    # full-length RS membership: sum_t c_t t^j = 0 for j = 0..q-2-k
    q = F.order
    for j in range(q - 1 - k):
        acc = 0
        for t in range(q):
            c = values_by_t[t]
            if c:
                acc = F.add(acc, F.mul(c, F.pow(t, j)))
        if acc != 0:
            return False
    return True


@lru_cache(maxsize=None)
def _prs_parity(q, k):
    # parity rows for the projective RS code of dimension k+1, via the
    # codes module (lazy import breaks the module cycle)
    from liftedcodes.codes import make_code
    C = make_code("PRS", q, 1, k)
    return C.parity_check()


def _prs_member(F, values, k):
    from liftedcodes.linalg import gf_matvec
    H = _prs_parity(F.order, k)
    return not gf_matvec(F, H, values).any()


def monomial_membership_oracle(d, k, q, space, exhaustive=None):
    """Definitional membership of one monomial in the lifted code.

    Evaluates the monomial along lines and tests Reed-Solomon membership:
    affine uses one embedding per line (translates of a direction agree up
    to reparametrization), projective defaults to every embedding up to
    scalar where that is affordable and to one representative per line
    otherwise (restrictions along the same line differ by a degree-
    preserving substitution, so membership is line-invariant).
    """
    F = GF(q)
    d = tuple(d)
    m = len(d) if space == "affine" else len(d) - 1
    if space == "affine":
        q_ = F.order
        sup = enumerate_points(F, m, "affine")
        seen = set()
        dirs = enumerate_points(F, m - 1, "projective").points if m > 1 else [(1,)]
        for direction in dirs:
            for base in sup.points:
                key = _affine_line_key(F, base, direction)
                if key in seen:
                    continue
                seen.add(key)
                vals = [0] * q_
                for t in range(q_):
                    pt = tuple(F.add(b, F.mul(t, dd)) for b, dd in zip(base, direction))
                    acc = 1
                    for c, e in zip(pt, d):
                        acc = F.mul(acc, F.pow(c, e))
                    vals[t] = acc
                if not _rs_syndrome_ok(F, vals, k):
                    return False
        return True

    if space == "projective":
        if exhaustive is None:
            exhaustive = q <= 4
        if exhaustive:
            embeddings = all_embeddings(F, m)
        else:
            embeddings = standard_line_embeddings(F, m)
        dom = enumerate_points(F, 1, "projective").points
        for L in embeddings:
            vals = []
            for x in dom:
                raw = L.map_raw(x)
                acc = 1
                for c, e in zip(raw, d):
                    acc = F.mul(acc, F.pow(c, e))
                vals.append(acc)
            if not _prs_member(F, vals, k):
                return False
        return True

    raise ValueError(f"unknown space {space!r}")


def _affine_line_key(F, base, direction):
    # canonicalize an affine line (base + t*direction) by its point set
    pts = []
    for t in range(F.order):
        pts.append(tuple(F.add(b, F.mul(t, dd)) for b, dd in zip(base, direction)))
    return frozenset(pts)
