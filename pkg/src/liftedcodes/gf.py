"""Exact arithmetic in small prime-power finite fields GF(p^t).

Elements are canonically represented as coefficient vectors over GF(p) of
length t (little-endian, degree < t), packed into an integer index
``sum(c_i * p**i)``.  Index 0 is zero, index 1 is one, and the index order
0, 1, ..., q-1 is the canonical element enumeration used everywhere
(primitive-element search, point orderings, deterministic sampling).

Multiplication is reduced modulo a fixed irreducible polynomial.  Default
moduli come from a published table of primitive polynomials, so that field
construction is reproducible across builds; a custom modulus may be passed
and is verified by trial factorization.  Log/antilog tables are built
internally for speed but never leak into the observable representation.

Extension fields GF(q^m) over an already-built GF(q) are supported through
:class:`ExtensionField` together with the coordinate isomorphism
GF(q^m) -> GF(q)^m exposed as :class:`ExtensionIso`.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# Published primitive polynomials, little-endian coefficient lists (monic).
# Keyed by (p, t); degree-1 entries encode x - g with g the smallest
# primitive root mod p.
IRREDUCIBLE_POLYS = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
}


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n):
    """Distinct prime factors of n, by trial division (desk scale)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p) (coefficients = plain ints mod p)
# ---------------------------------------------------------------------------

def _poly_trim(a):
    while a and a[-1] == 0:
        a = a[:-1]
    return a


def _poly_mulmod_p(a, b, mod, p):
    """(a * b) mod `mod` over GF(p); all little-endian coefficient lists."""
    t = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    # reduce modulo the monic modulus
    for i in range(len(out) - 1, t - 1, -1):
        c = out[i]
        if c == 0:
            continue
        out[i] = 0
        for j in range(t):
            out[i - t + j] = (out[i - t + j] - c * mod[j]) % p
    out = out[:t]
    return out + [0] * (t - len(out))


def _poly_divides_p(d, a, p):
    """True if polynomial d divides a over GF(p). d monic, little-endian."""
    a = list(_poly_trim(list(a)))
    dd = _poly_trim(list(d))
    td = len(dd) - 1
    while len(a) - 1 >= td and a:
        c = a[-1]
        shift = len(a) - 1 - td
        for j in range(len(dd)):
            a[shift + j] = (a[shift + j] - c * dd[j]) % p
        a = list(_poly_trim(a))
    return not a


def _is_irreducible_p(poly, p):
    """Trial factorization over GF(p): no monic divisor of degree 1..t//2."""
    t = len(poly) - 1
    if t == 1:
        return True
    for deg in range(1, t // 2 + 1):
        for idx in range(p ** deg):
            cand = []
            v = idx
            for _ in range(deg):
                cand.append(v % p)
                v //= p
            cand.append(1)
            if _poly_divides_p(cand, poly, p):
                return False
    return True


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

class FieldElement:
    """An element of a finite field, identified by its canonical index.

    Equality is equality of canonical representations within the same field.
    Instances are immutable and hashable.
    """

    __slots__ = ("field", "index")

    def __init__(self, field, index):
        self.field = field
        self.index = index

    def _check(self, other):
        if not isinstance(other, FieldElement):
            raise TypeError(f"cannot combine field element with {type(other).__name__}")
        if self.field != other.field:
            raise ValueError("operands belong to different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.add(self.index, other.index))

    def __sub__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.sub(self.index, other.index))

    def __mul__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.mul(self.index, other.index))

    def __truediv__(self, other):
        other = self._check(other)
        return FieldElement(self.field, self.field.div(self.index, other.index))

    def __pow__(self, n):
        return FieldElement(self.field, self.field.pow(self.index, n))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.index))

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.index == other.index)

    def __hash__(self):
        return hash((id(type(self)), self.field.order, self.index))

    def __bool__(self):
        return self.index != 0

    @property
    def coeffs(self):
        return self.field.index_to_coeffs(self.index)

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"{self.field!r}({self})"

    def order(self):
        """Multiplicative order; raises on zero."""
        return self.field.order_of(self.index)


class _FieldBase:
    """Shared machinery for index-encoded finite fields.

    Subclasses provide: order, p, add/sub/mul/inv on indices, and
    index<->coefficient conversion.  omega is the first element in the
    canonical enumeration whose multiplicative order is q - 1.
    """

    def element(self, index):
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} out of range for field of order {self.order}")
        return FieldElement(self, index)

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    @property
    def omega(self):
        return FieldElement(self, self.omega_index)

    def elements(self):
        return [FieldElement(self, i) for i in range(self.order)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        """a^n with the exponent reduced mod q-1 for nonzero a; 0^0 = 1."""
        if a == 0:
            if n == 0:
                return 1
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        e = n % (self.order - 1)
        if e == 0:
            return 1
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def order_of(self, a):
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        o = n
        for ell in prime_factors(n):
            while o % ell == 0 and self.pow(a, o // ell) == 1:
                o //= ell
        return o

    def _find_omega(self):
        n = self.order - 1
        facs = prime_factors(n) if n > 1 else []
        for a in range(1, self.order):
            if all(self._pow_slow(a, n // ell) != 1 for ell in facs):
                return a
        raise RuntimeError("no primitive element found")  # unreachable

    def _pow_slow(self, a, n):
        # square-and-multiply; usable before log tables exist
        r = 1
        b = a
        while n:
            if n & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            n >>= 1
        return r

    def _build_logs(self):
        # tables are assigned only once complete: mul() may dispatch on their
        # presence (ExtensionField) and must not see a half-built table
        n = self.order - 1
        log = [0] * self.order
        exp = [1] * n
        v = 1
        for i in range(n):
            exp[i] = v
            log[v] = i
            v = self.mul(v, self.omega_index)
        log[0] = -1
        self._log = log
        self._exp = exp

    # -- element construction / formatting -------------------------------

    def from_coeffs(self, coeffs):
        return FieldElement(self, self.coeffs_to_index(coeffs))

    def parse_element(self, text):
        """Parse the textual form "[c0,c1,...]" (little-endian coefficients)."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"bad element literal: {text!r}")
        parts = [s for s in text[1:-1].split(",") if s.strip() != ""]
        return self.from_coeffs([int(s) for s in parts])

    def random_index(self, rng):
        return int(rng.integers(self.order))

    def random_primitive_index(self, rng):
        n = self.order - 1
        facs = prime_factors(n) if n > 1 else []
        while True:
            a = int(rng.integers(1, self.order))
            if all(self.pow(a, n // ell) != 1 for ell in facs):
                return a


class FiniteField(_FieldBase):
    """GF(p^t) with a verified irreducible modulus and deterministic omega."""

    def __init__(self, p, t, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if t < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.t = t
        self.order = p ** t
        if modulus is None:
            modulus = IRREDUCIBLE_POLYS.get((p, t))
            if modulus is None:
                modulus = self._search_modulus(p, t)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != t + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {t}")
        if not _is_irreducible_p(modulus, p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.modulus = modulus

        q = self.order
        # multiplication table via polynomial arithmetic mod the modulus
        mt = [[0] * q for _ in range(q)]
        coeffs = [self.index_to_coeffs(i) for i in range(q)]
        for a in range(q):
            for b in range(a, q):
                c = _poly_mulmod_p(list(coeffs[a]), list(coeffs[b]), list(modulus), p)
                idx = self.coeffs_to_index(c)
                mt[a][b] = idx
                mt[b][a] = idx
        self._mul = mt

        if p == 2:
            self._add = None  # index XOR
        else:
            at = [[0] * q for _ in range(q)]
            st = [[0] * q for _ in range(q)]
            for a in range(q):
                ca = coeffs[a]
                for b in range(q):
                    cb = coeffs[b]
                    at[a][b] = self.coeffs_to_index([(x + y) % p for x, y in zip(ca, cb)])
                    st[a][b] = self.coeffs_to_index([(x - y) % p for x, y in zip(ca, cb)])
            self._add = at
            self._sub = st

        self.omega_index = self._find_omega()
        self._build_logs()
        self._inv = [0] * q
        n = q - 1
        for a in range(1, q):
            self._inv[a] = self._exp[(n - self._log[a]) % n]
        self._np_cache = {}

    @staticmethod
    def _search_modulus(p, t):
        # deterministic fallback: first monic irreducible in index order
        for idx in range(p ** t):
            cand = []
            v = idx
            for _ in range(t):
                cand.append(v % p)
                v //= p
            cand.append(1)
            if _is_irreducible_p(cand, p):
                return tuple(cand)
        raise RuntimeError("no irreducible polynomial found")  # unreachable

    # -- index-level arithmetic ------------------------------------------

    def index_to_coeffs(self, i):
        p = self.p
        out = []
        for _ in range(self.t):
            out.append(i % p)
            i //= p
        return tuple(out)

    def coeffs_to_index(self, coeffs):
        if len(coeffs) > self.t and any(c % self.p for c in coeffs[self.t:]):
            raise ValueError("coefficient vector too long for this field")
        i = 0
        for c in reversed([c % self.p for c in coeffs[:self.t]]):
            i = i * self.p + c
        return i

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._add[a][b]

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._sub[a][b]

    def neg(self, a):
        if self.p == 2:
            return a
        return self._sub[0][a]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in finite field")
        return self._inv[a]

    def scalar(self, c):
        """Embed an integer via the prime subfield (c mod p)."""
        return FieldElement(self, c % self.p)

    def __eq__(self, other):
        return (isinstance(other, FiniteField) and self.p == other.p
                and self.t == other.t and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.t, self.modulus))

    def __repr__(self):
        return f"GF({self.order})"

    def describe(self):
        return {"p": self.p, "t": self.t, "modulus": list(self.modulus)}

    # -- numpy views (lazy) ----------------------------------------------

    def _np(self, name):
        if name in self._np_cache:
            return self._np_cache[name]
        q = self.order
        if name == "mul":
            arr = np.array(self._mul, dtype=np.uint8)
        elif name == "add":
            arr = (np.arange(q, dtype=np.uint8)[:, None] ^ np.arange(q, dtype=np.uint8)[None, :]
                   if self.p == 2 else np.array(self._add, dtype=np.uint8))
        elif name == "sub":
            arr = (self._np("add") if self.p == 2 else np.array(self._sub, dtype=np.uint8))
        elif name == "inv":
            arr = np.array(self._inv, dtype=np.uint8)
        elif name == "log":
            arr = np.array(self._log, dtype=np.int32)
        elif name == "exp":
            arr = np.array(self._exp, dtype=np.uint8)
        elif name == "digits":
            arr = np.array([self.index_to_coeffs(i) for i in range(q)], dtype=np.uint8)
        else:
            raise KeyError(name)
        self._np_cache[name] = arr
        return arr

    @property
    def np_mul(self):
        return self._np("mul")

    @property
    def np_add(self):
        return self._np("add")

    @property
    def np_sub(self):
        return self._np("sub")

    @property
    def np_inv(self):
        return self._np("inv")

    @property
    def np_log(self):
        return self._np("log")

    @property
    def np_exp(self):
        return self._np("exp")

    @property
    def np_digits(self):
        return self._np("digits")


def field_new(p, t, modulus=None):
    """Construct GF(p^t); errors on composite p or a reducible modulus."""
    return FiniteField(p, t, modulus)


@lru_cache(maxsize=None)
def GF(q):
    """Cached field of order q with the default (published) modulus."""
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            t = 0
            v = q
            while v % p == 0:
                v //= p
                t += 1
            if v != 1:
                raise ValueError(f"{q} is not a prime power")
            return FiniteField(p, t)
    raise ValueError(f"{q} is not a prime power")


# ---------------------------------------------------------------------------
# Extension fields GF(q^m) over a base GF(q)
# ---------------------------------------------------------------------------

class ExtensionField(_FieldBase):
    """GF(q^m) built over a base field, elements encoded base-q digitwise.

    The modulus is the first monic irreducible of degree m over the base
    (in canonical index order) whose root z is primitive, making z both the
    polynomial-basis generator and the field's omega for m >= 2.
    """

    _MAX_ORDER = 1 << 20  # desk scale guard

    def __init__(self, base, m, modulus=None):
        if m < 1:
            raise ValueError("extension dimension must be >= 1")
        self.base = base
        self.m = m
        self.p = base.p
        self.order = base.order ** m
        if self.order > self._MAX_ORDER:
            raise ValueError("extension field too large for desk-scale tables")
        if modulus is None:
            modulus = self._search_primitive_modulus()
        self.modulus = tuple(modulus)
        if len(self.modulus) != m + 1 or self.modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if not self._is_irreducible(self.modulus):
            raise ValueError("extension modulus is reducible over the base field")
        self.omega_index = self._find_omega()
        self._build_logs()

    # modulus coefficients are base-field indices
    def _poly_mulmod(self, a, b, mod):
        base = self.base
        m = len(mod) - 1
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = base.add(out[i + j], base.mul(ai, bj))
        for i in range(len(out) - 1, m - 1, -1):
            c = out[i]
            if c == 0:
                continue
            out[i] = 0
            for j in range(m):
                out[i - m + j] = base.sub(out[i - m + j], base.mul(c, mod[j]))
        out = out[:m]
        return out + [0] * (m - len(out))

    def _poly_divides(self, d, a):
        base = self.base
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        dd = list(d)
        while dd and dd[-1] == 0:
            dd.pop()
        td = len(dd) - 1
        lead_inv = base.inv(dd[-1])
        while a and len(a) - 1 >= td:
            c = base.mul(a[-1], lead_inv)
            shift = len(a) - 1 - td
            for j in range(len(dd)):
                a[shift + j] = base.sub(a[shift + j], base.mul(c, dd[j]))
            while a and a[-1] == 0:
                a.pop()
        return not a

    def _is_irreducible(self, poly):
        if self.m == 1:
            return True
        qb = self.base.order
        for deg in range(1, self.m // 2 + 1):
            for idx in range(qb ** deg):
                cand = []
                v = idx
                for _ in range(deg):
                    cand.append(v % qb)
                    v //= qb
                cand.append(1)
                if self._poly_divides(cand, poly):
                    return False
        return True

    def _search_primitive_modulus(self):
        qb = self.base.order
        m = self.m
        n = self.order - 1
        facs = prime_factors(n) if n > 1 else []
        for idx in range(qb ** m):
            cand = []
            v = idx
            for _ in range(m):
                cand.append(v % qb)
                v //= qb
            cand.append(1)
            if not self._is_irreducible(cand):
                continue
            # primitivity of the root z: order exactly q^m - 1
            mod = tuple(cand)
            z = [self.base.neg(cand[0])] if m == 1 else [0, 1] + [0] * (m - 2)
            if self._root_order_full(z, mod, facs, n):
                return mod
        raise RuntimeError("no primitive modulus found")  # unreachable

    def _root_order_full(self, z, mod, facs, n):
        for ell in facs:
            if self._poly_pow(z, n // ell, mod) == [1] + [0] * (self.m - 1):
                return False
        return True

    def _poly_pow(self, a, n, mod):
        m = self.m
        r = [1] + [0] * (m - 1)
        b = list(a) + [0] * (m - len(a))
        while n:
            if n & 1:
                r = self._poly_mulmod(r, b, mod)
            b = self._poly_mulmod(b, b, mod)
            n >>= 1
        return r

    # -- index-level arithmetic ------------------------------------------

    def index_to_coeffs(self, i):
        qb = self.base.order
        out = []
        for _ in range(self.m):
            out.append(i % qb)
            i //= qb
        return tuple(out)

    def coeffs_to_index(self, coeffs):
        qb = self.base.order
        i = 0
        for c in reversed(list(coeffs[:self.m])):
            i = i * qb + c
        return i

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        da, db = self.index_to_coeffs(a), self.index_to_coeffs(b)
        return self.coeffs_to_index([self.base.add(x, y) for x, y in zip(da, db)])

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        da, db = self.index_to_coeffs(a), self.index_to_coeffs(b)
        return self.coeffs_to_index([self.base.sub(x, y) for x, y in zip(da, db)])

    def neg(self, a):
        if self.p == 2:
            return a
        return self.sub(0, a)

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if hasattr(self, "_log"):
            n = self.order - 1
            return self._exp[(self._log[a] + self._log[b]) % n]
        ca = self._poly_mulmod(list(self.index_to_coeffs(a)),
                               list(self.index_to_coeffs(b)), self.modulus)
        return self.coeffs_to_index(ca)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in finite field")
        n = self.order - 1
        return self._exp[(n - self._log[a]) % n]

    def _find_omega(self):
        # constants have order dividing q-1 < q^m - 1, so for m >= 2 the
        # first primitive element is the modulus root z at index q.
        if self.m == 1:
            return self.base.omega_index
        n = self.order - 1
        facs = prime_factors(n)
        z = self.base.order  # index of the polynomial-basis root
        za = [0, 1] + [0] * (self.m - 2)
        if self._root_order_full(za, self.modulus, facs, n):
            return z
        # fallback search (non-primitive user modulus)
        for a in range(1, self.order):
            ca = list(self.index_to_coeffs(a))
            if self._root_order_full(ca, self.modulus, facs, n):
                return a
        raise RuntimeError("no primitive element found")  # unreachable

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and self.base == other.base
                and self.m == other.m and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.base, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.base.order}^{self.m})"


@lru_cache(maxsize=None)
def _extension_field(base, m):
    return ExtensionField(base, m)


class ExtensionIso:
    """Coordinate isomorphism phi: GF(q^m) -> GF(q)^m.

    Coordinates are taken with respect to the basis {Omega^0..Omega^(m-1)}
    for a primitive Omega (the extension's canonical one by default), with
    an optional invertible post-map over GF(q) so randomized isomorphisms
    can be drawn for the structural checks.
    """

    def __init__(self, base, m, omega_index=None, post_map=None):
        if m < 1:
            raise ValueError("extension dimension must be >= 1")
        self.base = base
        self.m = m
        self.ext = _extension_field(base, m)
        self.omega_index = self.ext.omega_index if omega_index is None else omega_index
        if self.ext.order_of(self.omega_index) != self.ext.order - 1:
            raise ValueError("omega is not primitive in the extension field")
        # columns = polynomial-basis digits of Omega^j
        cols = []
        w = 1
        for _ in range(m):
            cols.append(self.ext.index_to_coeffs(w))
            w = self.ext.mul(w, self.omega_index)
        B = [[cols[j][i] for j in range(m)] for i in range(m)]
        self._B_inv = _invert_base_matrix(base, B)
        self.post_map = post_map
        if post_map is not None:
            _invert_base_matrix(base, post_map)  # raises if singular

    @property
    def omega(self):
        return FieldElement(self.ext, self.omega_index)

    def forward(self, x):
        """phi(x): coordinates of an extension element over the base field."""
        idx = x.index if isinstance(x, FieldElement) else x
        digits = self.ext.index_to_coeffs(idx)
        coords = _base_matvec(self.base, self._B_inv, digits)
        if self.post_map is not None:
            coords = _base_matvec(self.base, self.post_map, coords)
        return tuple(coords)

    def inverse(self, coords):
        if self.post_map is not None:
            inv_post = _invert_base_matrix(self.base, self.post_map)
            coords = _base_matvec(self.base, inv_post, coords)
        # x = sum coords_j * Omega^j
        acc = 0
        w = 1
        for c in coords:
            acc = self.ext.add(acc, self.ext.mul(c, w))
            w = self.ext.mul(w, self.omega_index)
        return acc

    @staticmethod
    def random(base, m, rng):
        """Random primitive omega and random invertible post-map."""
        ext = _extension_field(base, m)
        om = ext.random_primitive_index(rng)
        while True:
            M = [[int(rng.integers(base.order)) for _ in range(m)] for _ in range(m)]
            try:
                _invert_base_matrix(base, M)
                break
            except ValueError:
                continue
        return ExtensionIso(base, m, omega_index=om, post_map=M)


def ext_iso(F, m):
    """The canonical coordinate isomorphism GF(q^m) -> GF(q)^m."""
    return ExtensionIso(F, m)


def _invert_base_matrix(base, M):
    """Invert a small square matrix of base-field indices; ValueError if singular."""
    m = len(M)
    A = [list(row) + [1 if i == j else 0 for j in range(m)] for i, row in enumerate(M)]
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        A[r], A[piv] = A[piv], A[r]
        inv = base.inv(A[r][c])
        A[r] = [base.mul(inv, x) for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [base.sub(x, base.mul(f, y)) for x, y in zip(A[i], A[r])]
        r += 1
    return [row[m:] for row in A]


def _base_matvec(base, M, v):
    out = []
    for row in M:
        acc = 0
        for a, x in zip(row, v):
            if a and x:
                acc = base.add(acc, base.mul(a, x))
        out.append(acc)
    return out
