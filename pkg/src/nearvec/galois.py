"""Exact arithmetic for small Galois fields GF(p^n).

Elements are coefficient tuples over GF(p), constant term first.  A field is
a ``GFTable``: the monic irreducible modulus together with discrete log and
antilog tables over a fixed generator, so products, inverses and powers are
table lookups.  Construction is deterministic:

* the modulus is the first irreducible found when monic degree-n polynomials
  are scanned in lexicographic order of their coefficient tuple (constant
  term first, ascending); degree 1 uses the polynomial x itself;
* the generator is the first element, in integer encoding order (value of
  the coefficient tuple read as base-p digits, constant term least
  significant), whose multiplicative order is p^n - 1.

Tables are immutable after construction and safe to share between threads.

The module also classifies the unit group modulo p^n - 1 into orbits under
multiplication by p.  Two power maps x -> x^a and x -> x^b turn the field
into the same additive structure exactly when a and b lie in the same orbit,
so the orbit count is the number of distinct induced additions.
"""

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import BaseMismatchError, BoundExceededError, NearVecError

DEFAULT_MAX_ORDER = 1 << 16


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


# -- polynomial helpers over GF(p); coefficient tuples, constant term first --


def _trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _poly_add(a, b, p):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return _trim([(x + y) % p for x, y in zip(a, b)])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    while len(_trim(a)) - 1 >= dm and _trim(a):
        a = list(_trim(a))
        shift = len(a) - 1 - dm
        lead = a[-1]
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * c) % p
    return _trim(a)


def _poly_powmod(a, e, m, p):
    r = (1,)
    a = _poly_mod(a, m, p)
    while e > 0:
        if e & 1:
            r = _poly_mod(_poly_mul(r, a, p), m, p)
        a = _poly_mod(_poly_mul(a, a, p), m, p)
        e >>= 1
    return r


def _monic_polys(p, degree):
    """All monic polynomials of the given degree, lex order of low coeffs."""
    for low in itertools.product(range(p), repeat=degree):
        yield low + (1,)


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    degree = len(poly) - 1
    for d in range(1, degree // 2 + 1):
        for div in _monic_polys(p, d):
            if not _poly_mod(poly, div, p):
                return False
    return True


def first_irreducible(p: int, n: int) -> tuple:
    """First monic irreducible of degree n in the declared scan order."""
    if n == 1:
        return (0, 1)
    for poly in _monic_polys(p, n):
        if _is_irreducible(poly, p):
            return poly
    raise NearVecError(f"no irreducible polynomial of degree {n} over GF({p})")


@dataclass(frozen=True)
class GFElement:
    """A field element as a tuple of n residues mod p, constant term first."""

    coeffs: tuple

    @property
    def is_zero(self):
        return not any(self.coeffs)

    def __repr__(self):
        return f"GFElement({list(self.coeffs)})"


class GFTable:
    """GF(p^n) with full discrete log/antilog tables.

    Immutable; every method is a pure function of its arguments.
    """

    def __init__(self, p, n, modulus, elements, generator, log, antilog):
        self.p = p
        self.n = n
        self.order = p**n
        self.modulus = modulus
        self.elements = elements  # integer encoding order, elements[0] = 0
        self.generator = generator
        self.log = log  # GFElement -> exponent in [0, p^n - 1)
        self.antilog = antilog  # exponent -> GFElement
        self.zero = elements[0]
        self.one = elements[1] if self.order > 1 else elements[0]
        self.minus_one = self.neg(self.one)

    def __repr__(self):
        return f"GFTable(p={self.p}, n={self.n})"

    def __eq__(self, other):
        return (
            isinstance(other, GFTable)
            and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    # -- element plumbing --

    def element(self, coeffs) -> GFElement:
        c = tuple(int(x) for x in coeffs)
        if len(c) != self.n or any(x < 0 or x >= self.p for x in c):
            raise BaseMismatchError(f"{list(coeffs)} is not an element of {self}")
        return GFElement(c)

    def check(self, x) -> GFElement:
        if not isinstance(x, GFElement):
            raise BaseMismatchError(f"{x!r} is not an element of {self}")
        return self.element(x.coeffs)

    def from_int(self, k: int) -> GFElement:
        if k < 0 or k >= self.order:
            raise BaseMismatchError(f"integer {k} out of range for {self}")
        c = []
        for _ in range(self.n):
            c.append(k % self.p)
            k //= self.p
        return GFElement(tuple(c))

    def to_int(self, x: GFElement) -> int:
        k = 0
        for c in reversed(x.coeffs):
            k = k * self.p + c
        return k

    # -- arithmetic --

    def add(self, a: GFElement, b: GFElement) -> GFElement:
        return GFElement(tuple((x + y) % self.p for x, y in zip(a.coeffs, b.coeffs)))

    def neg(self, a: GFElement) -> GFElement:
        return GFElement(tuple((-x) % self.p for x in a.coeffs))

    def sub(self, a: GFElement, b: GFElement) -> GFElement:
        return self.add(a, self.neg(b))

    def mul(self, a: GFElement, b: GFElement) -> GFElement:
        if a.is_zero or b.is_zero:
            return self.zero
        m = self.order - 1
        return self.antilog[(self.log[a] + self.log[b]) % m]

    def inv(self, a: GFElement) -> GFElement:
        if a.is_zero:
            raise ZeroDivisionError("inverse of zero")
        m = self.order - 1
        return self.antilog[(-self.log[a]) % m]

    def pow(self, a: GFElement, e: int) -> GFElement:
        if a.is_zero:
            if e <= 0:
                raise ZeroDivisionError(f"0 ** {e} is undefined")
            return self.zero
        m = self.order - 1
        return self.antilog[(self.log[a] * e) % m]


def gf_build(p: int, n: int, max_order: int = DEFAULT_MAX_ORDER) -> GFTable:
    """Build GF(p^n) tables; deterministic modulus and generator choice."""
    if not is_prime(p):
        raise NearVecError(f"{p} is not prime")
    if n < 1:
        raise NearVecError(f"degree must be positive, got {n}")
    q = p**n
    if q > max_order:
        raise BoundExceededError(f"p^n = {q} exceeds the bound {max_order}")

    modulus = first_irreducible(p, n)

    def encode(k):
        c = []
        for _ in range(n):
            c.append(k % p)
            k //= p
        return GFElement(tuple(c))

    elements = tuple(encode(k) for k in range(q))

    def raw_mul(a, b):
        return _poly_mod(_poly_mul(_trim(a.coeffs), _trim(b.coeffs), p), modulus, p)

    def pad(c):
        return GFElement(tuple(c) + (0,) * (n - len(c)))

    m = q - 1
    factors = prime_factors(m) if m > 1 else []
    generator = None
    for cand in elements[1:]:
        if m <= 1:
            generator = cand
            break
        ok = True
        for f in factors:
            if pad(_poly_powmod(_trim(cand.coeffs), m // f, modulus, p)).coeffs == elements[1].coeffs:
                ok = False
                break
        if ok:
            generator = cand
            break
    if generator is None:
        raise NearVecError(f"no generator found for GF({p}^{n}); table bug")

    antilog = {}
    log = {}
    acc = elements[1]
    for e in range(max(m, 1)):
        antilog[e] = acc
        log[acc] = e
        acc = pad(raw_mul(acc, generator))
    if len(log) != max(m, 1):
        raise NearVecError(f"generator of GF({p}^{n}) has wrong order; table bug")

    return GFTable(p, n, modulus, elements, generator, log, antilog)


@dataclass(frozen=True)
class UnitClassification:
    """Orbits of the units mod p^n - 1 under multiplication by p.

    One orbit per induced addition on GF(p^n); the orbit of 1 is the set of
    exponents whose power map is already additive.
    """

    p: int
    n: int
    modulus_m: int
    units: tuple
    frobenius_subgroup: tuple
    classes: tuple  # tuple of sorted tuples, ordered by smallest member

    @property
    def count(self):
        return len(self.classes)

    def to_json(self):
        return {
            "p": self.p,
            "n": self.n,
            "modulus_m": self.modulus_m,
            "units": list(self.units),
            "frobenius_subgroup": list(self.frobenius_subgroup),
            "classes": [list(c) for c in self.classes],
            "count": self.count,
        }


def _orbit(a, mult, m):
    out = {a}
    x = a * mult % m
    while x not in out:
        out.add(x)
        x = x * mult % m
    return tuple(sorted(out))


def unit_classification(p: int, n: int) -> UnitClassification:
    """Partition the units mod p^n - 1 into multiplication-by-p orbits."""
    if not is_prime(p):
        raise NearVecError(f"{p} is not prime")
    q = p**n
    if q < 3:
        raise NearVecError(f"p^n must be at least 3, got {q}")
    m = q - 1
    units = tuple(a for a in range(1, m) if gcd(a, m) == 1) if m > 1 else (1,)
    frob = _orbit(1, p % m, m) if m > 1 else (1,)
    classes = []
    seen = set()
    for u in units:
        if u in seen:
            continue
        orb = _orbit(u, p % m, m)
        seen.update(orb)
        classes.append(orb)
    return UnitClassification(p, n, m, units, frob, tuple(classes))


def same_addition_exponents(alpha: int, beta: int, p: int, n: int) -> bool:
    """Whether x^alpha and x^beta induce the same addition on GF(p^n).

    True exactly when alpha lies in the multiplication-by-p orbit of beta
    modulo p^n - 1.
    """
    m = p**n - 1
    if m <= 1:
        return True
    alpha %= m
    beta %= m
    if gcd(alpha, m) != 1 or gcd(beta, m) != 1:
        raise NearVecError(f"exponents must be units mod {m}")
    return alpha in _orbit(beta, p % m, m)
