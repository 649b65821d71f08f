"""Monomial evaluation codes over affine and projective supports.

Covers classical Reed-Solomon / Reed-Muller codes, their projective
analogues, and the affine/projective liftings built from the degree sets in
:mod:`liftedcodes.degrees`.  Generator matrices list monomial evaluations,
one row per exponent tuple in lexicographic order, over the deterministic
supports of :mod:`liftedcodes.geometry`.
"""

from __future__ import annotations

import json
import math
from functools import lru_cache

import numpy as np

from liftedcodes import degrees, linalg
from liftedcodes.gf import GF, FiniteField
from liftedcodes.geometry import enumerate_points, standardize, theta

KINDS = ("RS", "PRS", "RM", "PRM", "Lift", "PLift")
_AFFINE_KINDS = {"RS", "RM", "Lift"}


def _binom(n, r):
    if r < 0 or n < 0:
        return 0
    return math.comb(n, r)


def rm_dimension(m, d, q):
    """Dimension of the order-m Reed-Muller code of total degree <= d."""
    return sum((-1) ** j * _binom(m, j) * _binom(i - j * q + m - 1, i - j * q)
               for i in range(d + 1) for j in range(m + 1))


def prm_dimension(m, v, q):
    """Dimension of the projective Reed-Muller code of degree v."""
    total = 0
    for t in range(1, v + 1):
        if (t - v) % (q - 1) != 0:
            continue
        total += sum((-1) ** j * _binom(m + 1, j) * _binom(t - j * q + m, t - j * q)
                     for j in range(m + 2))
    return total


def evaluate_monomials(F, tuples, points):
    """Evaluation matrix: one row per exponent tuple, one column per point."""
    pts = np.asarray(points, dtype=np.uint8)
    if pts.ndim == 1:
        pts = pts.reshape(1, -1)
    n = pts.shape[0]
    qm1 = F.order - 1
    logs = F.np_log[pts].astype(np.int64)  # (n, nv); -1 at zeros
    zero = pts == 0
    mul = F.np_mul
    exp = F.np_exp
    G = np.empty((len(tuples), n), dtype=np.uint8)
    for r, d in enumerate(tuples):
        acc = np.ones(n, dtype=np.uint8)
        for i, e in enumerate(d):
            if e == 0:
                continue
            vi = exp[(logs[:, i] * (e % qm1)) % qm1]
            vi[zero[:, i]] = 0
            acc = mul[acc, vi]
        G[r] = acc
    return G


class Word:
    """Vector indexed by a support; None marks an erased position."""

    def __init__(self, support, values):
        if len(values) != len(support):
            raise ValueError("word length does not match support")
        self.support = support
        self.values = list(values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def erasure_count(self):
        return sum(1 for v in self.values if v is None)

    def copy(self):
        return Word(self.support, list(self.values))

    def __eq__(self, other):
        return (isinstance(other, Word) and self.support == other.support
                and self.values == other.values)


class LinearCode:
    """A code given by an explicit generator matrix over a support."""

    def __init__(self, field, support, G):
        self.field = field
        self.support = support
        self.G = linalg.as_matrix(G)
        self._H = None
        self._dim = None

    @property
    def length(self):
        return self.G.shape[1]

    @property
    def dim(self):
        if self._dim is None:
            self._dim = linalg.rank(self.field, self.G)
        return self._dim

    def parity_check(self):
        if self._H is None:
            self._H = linalg.nullspace(self.field, self.G)
        return self._H

    def contains(self, values):
        H = self.parity_check()
        if H.size == 0:
            return True
        v = np.asarray(values, dtype=np.uint8)
        return not linalg.gf_matvec(self.field, H, v).any()


class MonomialCode(LinearCode):
    """Evaluation code of a reduced set of monomials."""

    def __init__(self, kind, field, m, k, degree_set, support, v=None):
        self.kind = kind
        self.q = field.order
        self.m = m
        self.k = k
        self.v = v
        self.degree_tuples = sorted(degree_set)
        G = evaluate_monomials(field, self.degree_tuples, support.points)
        super().__init__(field, support, G)
        self._dim = len(self.degree_tuples)

    def descriptor(self):
        return {"kind": self.kind, "q": self.q, "m": self.m, "k": self.k,
                "v": self.v, "dim": self.dim, "length": self.length}

    def __repr__(self):
        return f"{self.kind}_{self.q}({self.m},{self.k})[n={self.length},k={self.dim}]"


def _degree_tuples_for(kind, q, m, k):
    if kind == "RS":
        if m != 1:
            raise ValueError("RS codes are univariate; use m=1")
        if not 0 <= k <= q - 1:
            raise ValueError(f"RS needs 0 <= k <= q-1, got k={k}")
        return [(j,) for j in range(k + 1)], None
    if kind == "PRS":
        if m != 1:
            raise ValueError("PRS codes live on the projective line; use m=1")
        if not 0 <= k <= q:
            raise ValueError(f"PRS needs 0 <= k <= q, got k={k}")
        return [(k - j, j) for j in range(k + 1)], k
    if kind == "RM":
        if not 0 <= k <= m * (q - 1):
            raise ValueError(f"RM needs 0 <= k <= m(q-1), got k={k}")
        tuples = {degrees.a_reduce(d, q) for d in _weight_at_most(m, k)}
        return sorted(tuples), None
    if kind == "PRM":
        if not 1 <= k <= m * (q - 1):
            raise ValueError(f"PRM needs 1 <= k <= m(q-1), got k={k}")
        tuples = {degrees.p_reduce(d, q) for d in _weight_exactly(m + 1, k)}
        return sorted(tuples), k
    if kind == "Lift":
        return degrees.adeg(m, k, q).sorted(), None
    if kind == "PLift":
        ds = degrees.pdeg(m, k, q)
        return ds.sorted(), ds.v
    raise ValueError(f"unknown code kind {kind!r}")


def _weight_at_most(nvars, k):
    out = []
    def rec(prefix, rem):
        if len(prefix) == nvars:
            out.append(tuple(prefix))
            return
        for c in range(rem + 1):
            rec(prefix + [c], rem - c)
    rec([], k)
    return out


def _weight_exactly(nvars, k):
    return [d for d in _weight_at_most(nvars, k) if sum(d) == k]


@lru_cache(maxsize=None)
def _make_code_cached(kind, field, m, k):
    tuples, v = _degree_tuples_for(kind, field.order, m, k)
    space = "affine" if kind in _AFFINE_KINDS else "projective"
    support = enumerate_points(field, m, space)
    return MonomialCode(kind, field, m, k, tuples, support, v=v)


def make_code(kind, q, m, k):
    """Construct a monomial code; q may be an order or a FiniteField."""
    field = q if isinstance(q, FiniteField) else GF(q)
    return _make_code_cached(kind, field, m, k)


def encode(C, msg):
    """Message (length dim C) times the generator matrix."""
    vals = [v.index if hasattr(v, "index") else int(v) for v in msg]
    if len(vals) != C.dim:
        raise ValueError(f"message length {len(vals)} != dim {C.dim}")
    word = linalg.gf_matvec(C.field, C.G.T, np.asarray(vals, dtype=np.uint8))
    return Word(C.support, [int(x) for x in word])


def random_codeword(C, rng):
    msg = [int(x) for x in rng.integers(C.field.order, size=C.dim)]
    return encode(C, msg)


def restrict_to_line(word, L, v):
    """Divide out the homogenization weights to read a line restriction.

    For a degree-v evaluation word c and embedding L this is the evaluation
    of the restricted polynomial on the projective line: q+1 coordinate
    reads, erasures pass through.
    """
    F = L.field
    sup1 = enumerate_points(F, 1, "projective")
    out = []
    for pos, (img, lam) in enumerate(L.image_info()):
        val = word[word.support.position(img)]
        if val is None:
            out.append(None)
        else:
            out.append(F.div(val, F.pow(lam, v)))
    return Word(sup1, out)


def shorten_at_infinity(C):
    """Restrict the subcode vanishing on the hyperplane at infinity to A^m."""
    F = C.field
    q = F.order
    n_aff = q ** C.m
    G_aff, G_inf = C.G[:, :n_aff], C.G[:, n_aff:]
    # message combinations that vanish on every infinity position
    N = linalg.nullspace(F, G_inf.T)
    Gs = linalg.gf_matmul(F, N, G_aff) if N.size else np.zeros((0, n_aff), dtype=np.uint8)
    R, _ = linalg.rref(F, Gs)
    return LinearCode(F, enumerate_points(F, C.m, "affine"), R)


def puncture_to_infinity(C):
    """Restrict the whole code to the hyperplane at infinity."""
    F = C.field
    n_aff = F.order ** C.m
    G_inf = C.G[:, n_aff:]
    R, _ = linalg.rref(F, G_inf)
    support = enumerate_points(F, C.m - 1, "projective") if C.m >= 1 else None
    return LinearCode(F, support, R)


def code_equal(C1, C2):
    """Row-space equality of two codes on identical supports."""
    if C1.length != C2.length:
        raise ValueError("codes live on supports of different lengths")
    if C1.support is not None and C2.support is not None and C1.support != C2.support:
        raise ValueError("codes live on different supports")
    return linalg.rowspace_equal(C1.field, C1.G, C2.G)


def apply_projective_action(M, word, v):
    """Map ev(f) to ev(f o M) for an invertible matrix M.

    The output at a point x is lambda^-v times the input at the standard
    representative of M x, with lambda the standardizing scalar.
    """
    F = word.support.field
    rows = [list(r) for r in M]
    if linalg.rank(F, linalg.as_matrix(rows)) != len(rows):
        raise ValueError("projective action needs an invertible matrix")
    out = []
    for x in word.support.points:
        raw = tuple(_dot_row(F, row, x) for row in rows)
        img, lam = standardize(F, raw)
        val = word[word.support.position(img)]
        out.append(None if val is None else F.div(val, F.pow(lam, v)))
    return Word(word.support, out)


def apply_affine_action(M, b, word):
    """Map ev(f) to ev(f o T) for the affine map T(x) = M x + b."""
    F = word.support.field
    rows = [list(r) for r in M]
    if linalg.rank(F, linalg.as_matrix(rows)) != len(rows):
        raise ValueError("affine action needs an invertible matrix")
    out = []
    for x in word.support.points:
        img = tuple(F.add(_dot_row(F, row, x), bb) for row, bb in zip(rows, b))
        out.append(word[word.support.position(img)])
    return Word(word.support, out)


def _dot_row(F, row, x):
    acc = 0
    for a, c in zip(row, x):
        if a and c:
            acc = F.add(acc, F.mul(a, c))
    return acc


# ---------------------------------------------------------------------------
# Word file format: header line with the code descriptor JSON, then one
# element per line ("?" marks an erasure).
# ---------------------------------------------------------------------------

def generator_matrix_text(C):
    """Row-major text export: one generator row per line, elements in the
    coefficient-list format."""
    F = C.field
    lines = []
    for row in C.G:
        lines.append(" ".join(str(F.element(int(x))) for x in row))
    return "\n".join(lines) + "\n"


def word_to_text(C, word):
    lines = [json.dumps(C.descriptor(), sort_keys=True)]
    for v in word.values:
        lines.append("?" if v is None else str(C.field.element(v)))
    return "\n".join(lines) + "\n"


def word_from_text(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    desc = json.loads(lines[0])
    C = make_code(desc["kind"], desc["q"], desc["m"], desc["k"])
    values = []
    for ln in lines[1:]:
        ln = ln.strip()
        values.append(None if ln == "?" else C.field.parse_element(ln).index)
    return C, Word(C.support, values)
