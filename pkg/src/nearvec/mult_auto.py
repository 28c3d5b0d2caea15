"""Multiplicative automorphisms of the scalar bases.

An automorphism preserves the product and the unit but usually not the sum;
those that do preserve the sum are exactly the ones that leave the induced
addition unchanged (see ``same_addition``).  The concrete families are

* ``FinitePower``   x -> x^a on GF(p^n), a a unit mod p^n - 1;
* ``RealPower``     sign-preserving powers of the reals, nonzero exponent;
* ``ComplexEps``    z = r s -> r^a s (optionally conjugating the unit part
                    s), Re a != 0, the principal real log of the modulus;
* ``PermAuto``      an explicit multiplicative bijection of a finite base;
* ``InnerAuto``     conjugation x -> g^-1 x g, trivial on commutative bases;
* ``CompAuto``      a normalized chain of the above, applied right to left.

Composition and inversion stay inside the closed families: power exponents
merge, complex parameters merge through a small closed form, and anything
mixed over a finite base is materialized as a permutation table.
"""

import cmath
import itertools
import math
import random
from math import gcd

from .errors import BaseMismatchError, NearVecError, UnsupportedBaseError
from .galois import same_addition_exponents as _same_exponents
from .nearfield import BaseStructure, is_nearfield_automorphism
from .report import Report


def _require_same_base(a, b):
    if a.base != b.base:
        raise BaseMismatchError(f"{a!r} and {b!r} live over different bases")


class MultAuto:
    """Common behaviour: application, memoized inversion, identity test."""

    def __init__(self, base: BaseStructure):
        self.base = base
        self._inv = None

    def apply(self, x):
        raise NotImplementedError

    def _inverse(self):
        raise NotImplementedError

    def inverse(self):
        if self._inv is None:
            inv = self._inverse()
            inv._inv = self
            self._inv = inv
        return self._inv

    def is_identity(self):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError

    def __call__(self, x):
        return self.apply(x)


class FinitePower(MultAuto):
    """x -> x^alpha on a Galois field, alpha a unit mod p^n - 1."""

    def __init__(self, base, alpha: int):
        if base.kind != "gf":
            raise BaseMismatchError("FinitePower needs a Galois field base")
        super().__init__(base)
        m = base.order() - 1
        if m <= 1:
            self.alpha = 1
            return
        alpha %= m
        if gcd(alpha, m) != 1:
            raise NearVecError(f"exponent {alpha} is not a unit mod {m}")
        self.alpha = alpha

    def apply(self, x):
        return self.base.table.pow(x, self.alpha)

    def _inverse(self):
        m = self.base.order() - 1
        if m <= 1:
            return FinitePower(self.base, 1)
        return FinitePower(self.base, pow(self.alpha, -1, m))

    def is_identity(self):
        return self.alpha == 1

    def describe(self):
        return {"kind": "fpow", "alpha": self.alpha}

    def __repr__(self):
        return f"FinitePower({self.alpha})"

    def __eq__(self, other):
        return (
            isinstance(other, FinitePower)
            and self.base == other.base
            and self.alpha == other.alpha
        )

    def __hash__(self):
        return hash(("fpow", self.base, self.alpha))


class RealPower(MultAuto):
    """x -> x^alpha for x >= 0 and -((-x)^alpha) for x < 0."""

    def __init__(self, base, alpha: float):
        if base.kind != "real":
            raise BaseMismatchError("RealPower needs the real base")
        if alpha == 0:
            raise NearVecError("exponent must be nonzero")
        super().__init__(base)
        self.alpha = float(alpha)

    def apply(self, x):
        if x == 0:
            return 0.0
        if x > 0:
            return x**self.alpha
        return -((-x) ** self.alpha)

    def _inverse(self):
        return RealPower(self.base, 1.0 / self.alpha)

    def is_identity(self):
        return self.alpha == 1.0

    def describe(self):
        return {"kind": "rpow", "alpha": self.alpha}

    def __repr__(self):
        return f"RealPower({self.alpha})"

    def __eq__(self, other):
        return (
            isinstance(other, RealPower)
            and self.base == other.base
            and self.alpha == other.alpha
        )

    def __hash__(self):
        return hash(("rpow", self.base, self.alpha))


class ComplexEps(MultAuto):
    """z = r s -> r^alpha s, with optional conjugation of the unit part s.

    Only the modulus r is exponentiated (through the principal real log);
    the unit part is carried across unchanged or conjugated, so there is no
    branch cut to choose.
    """

    def __init__(self, base, alpha, conj=False):
        if base.kind != "complex":
            raise BaseMismatchError("ComplexEps needs the complex base")
        alpha = complex(alpha)
        if alpha.real == 0:
            raise NearVecError("Re(alpha) must be nonzero")
        super().__init__(base)
        self.alpha = alpha
        self.conj = bool(conj)

    def apply(self, z):
        if z == 0:
            return 0j
        r = abs(z)
        s = z / r
        if self.conj:
            s = s.conjugate()
        return cmath.exp(self.alpha * math.log(r)) * s

    def _inverse(self):
        a = self.alpha
        if self.conj:
            return ComplexEps(self.base, (1 + 1j * a.imag) / a.real, True)
        return ComplexEps(self.base, (1 - 1j * a.imag) / a.real, False)

    def is_identity(self):
        return self.alpha == 1 and not self.conj

    def describe(self):
        return {
            "kind": "ceps",
            "alpha": [self.alpha.real, self.alpha.imag],
            "conj": self.conj,
        }

    def __repr__(self):
        return f"ComplexEps({self.alpha}, conj={self.conj})"

    def __eq__(self, other):
        return (
            isinstance(other, ComplexEps)
            and self.base == other.base
            and (self.alpha, self.conj) == (other.alpha, other.conj)
        )

    def __hash__(self):
        return hash(("ceps", self.base, self.alpha, self.conj))


class PermAuto(MultAuto):
    """Explicit bijection table on a finite base; validated at construction
    to fix 0 and 1 and to respect the product."""

    def __init__(self, base, table):
        if not base.is_finite:
            raise BaseMismatchError("PermAuto needs a finite base")
        super().__init__(base)
        els = base.elements()
        table = dict(table)
        if set(table) != set(els) or set(table.values()) != set(els):
            raise NearVecError("permutation table must be a bijection of the base")
        if table[base.zero] != base.zero or table[base.one] != base.one:
            raise NearVecError("permutation table must fix 0 and 1")
        for x in els:
            for y in els:
                if table[base.mul(x, y)] != base.mul(table[x], table[y]):
                    raise NearVecError(
                        f"table is not multiplicative at ({x!r}, {y!r})"
                    )
        self.table = table
        self._signature = tuple(table[x] for x in els)

    def apply(self, x):
        return self.table[x]

    def _inverse(self):
        return PermAuto(self.base, {v: k for k, v in self.table.items()})

    def is_identity(self):
        return all(k == v for k, v in self.table.items())

    def describe(self):
        els = self.base.elements()
        return {
            "kind": "perm",
            "table": [
                [list(x.coeffs), list(self.table[x].coeffs)] for x in els
            ],
        }

    def __repr__(self):
        return f"PermAuto({self._signature!r})"

    def __eq__(self, other):
        return (
            isinstance(other, PermAuto)
            and self.base == other.base
            and self._signature == other._signature
        )

    def __hash__(self):
        return hash(("perm", self.base, self._signature))


class InnerAuto(MultAuto):
    """Conjugation x -> g^-1 x g by a nonzero g; identity when the base
    multiplication commutes."""

    def __init__(self, base, gamma):
        gamma = base.check(gamma)
        if base.is_zero(gamma):
            raise NearVecError("conjugating element must be nonzero")
        super().__init__(base)
        self.gamma = gamma
        self._gamma_inv = base.inv(gamma)

    def apply(self, x):
        b = self.base
        return b.mul(b.mul(self._gamma_inv, x), self.gamma)

    def _inverse(self):
        return InnerAuto(self.base, self._gamma_inv)

    def is_identity(self):
        if self.base.commutative:
            return True
        return all(self.apply(x) == x for x in self.base.elements())

    def describe(self):
        g = self.gamma
        return {"kind": "inner", "gamma": list(g.coeffs) if hasattr(g, "coeffs") else g}

    def __repr__(self):
        return f"InnerAuto({self.gamma!r})"

    def __eq__(self, other):
        return (
            isinstance(other, InnerAuto)
            and self.base == other.base
            and self.gamma == other.gamma
        )

    def __hash__(self):
        return hash(("inner", self.base, self.gamma))


class CompAuto(MultAuto):
    """Normalized composition chain, applied right to left.

    Normalization flattens nested chains, drops identity factors and merges
    adjacent factors that admit a closed-form product, so a surviving chain
    never holds two adjacent members of the same power family.
    """

    def __init__(self, base, factors):
        super().__init__(base)
        flat = []
        for f in factors:
            if f.base != base:
                raise BaseMismatchError("composition factors over different bases")
            flat.extend(f.factors if isinstance(f, CompAuto) else [f])
        self.factors = tuple(_normalize_factors(base, flat))

    def apply(self, x):
        for f in reversed(self.factors):
            x = f.apply(x)
        return x

    def _inverse(self):
        return CompAuto(self.base, [f.inverse() for f in reversed(self.factors)])

    def is_identity(self):
        if not self.factors:
            return True
        if len(self.factors) == 1:
            return self.factors[0].is_identity()
        if self.base.is_finite:
            return all(self.apply(x) == x for x in self.base.elements())
        return False

    def describe(self):
        return {"kind": "comp", "factors": [f.describe() for f in self.factors]}

    def __repr__(self):
        return f"CompAuto({list(self.factors)!r})"

    def __eq__(self, other):
        return (
            isinstance(other, CompAuto)
            and self.base == other.base
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash(("comp", self.base, self.factors))


def identity_auto(base: BaseStructure) -> MultAuto:
    if base.kind == "gf":
        return FinitePower(base, 1)
    if base.kind == "real":
        return RealPower(base, 1.0)
    if base.kind == "complex":
        return ComplexEps(base, 1.0)
    if base.is_finite:
        return PermAuto(base, {x: x for x in base.elements()})
    raise UnsupportedBaseError(f"no identity automorphism for {base!r}")


def as_perm(auto: MultAuto) -> PermAuto:
    """Materialize any automorphism of a finite base as a table."""
    base = auto.base
    if not base.is_finite:
        raise UnsupportedBaseError("only finite bases materialize as tables")
    if isinstance(auto, PermAuto):
        return auto
    return PermAuto(base, {x: auto.apply(x) for x in base.elements()})


def _merge_pair(outer, inner):
    """Closed-form product outer . inner, or None when there is none."""
    base = outer.base
    if isinstance(outer, FinitePower) and isinstance(inner, FinitePower):
        return FinitePower(base, outer.alpha * inner.alpha)
    if isinstance(outer, RealPower) and isinstance(inner, RealPower):
        return RealPower(base, outer.alpha * inner.alpha)
    if isinstance(outer, ComplexEps) and isinstance(inner, ComplexEps):
        a, b = outer.alpha, inner.alpha
        if outer.conj:
            merged = a * b.real - 1j * b.imag
        else:
            merged = a * b.real + 1j * b.imag
        return ComplexEps(base, merged, outer.conj != inner.conj)
    if isinstance(outer, InnerAuto) and isinstance(inner, InnerAuto):
        return InnerAuto(base, base.mul(inner.gamma, outer.gamma))
    if base.is_finite:
        composed = {x: outer.apply(inner.apply(x)) for x in base.elements()}
        return PermAuto(base, composed)
    return None


def _normalize_factors(base, factors):
    stack = []
    for f in factors:
        if f.is_identity():
            continue
        stack.append(f)
        while len(stack) >= 2:
            merged = _merge_pair(stack[-2], stack[-1])
            if merged is None:
                break
            stack[-2:] = [] if merged.is_identity() else [merged]
    return stack


def compose(a: MultAuto, b: MultAuto) -> MultAuto:
    """The automorphism applying b first and a second."""
    _require_same_base(a, b)
    base = a.base
    parts = []
    for f in (a, b):
        parts.extend(f.factors if isinstance(f, CompAuto) else [f])
    stack = _normalize_factors(base, parts)
    if not stack:
        return identity_auto(base)
    if len(stack) == 1:
        return stack[0]
    return CompAuto(base, stack)


def enumerate_mult_autos(base: BaseStructure) -> list:
    """Every multiplicative automorphism of a finite base.

    Galois fields get one power map per unit exponent.  Other finite bases
    are searched by brute force over the bijections of the nonzero elements
    that preserve multiplicative order, returned as tables.
    """
    if not base.is_finite:
        raise UnsupportedBaseError("only finite bases are enumerable")
    if base.kind == "gf":
        m = base.order() - 1
        if m <= 1:
            return [FinitePower(base, 1)]
        return [FinitePower(base, a) for a in range(1, m) if gcd(a, m) == 1]

    els = base.elements()
    nonzero = base.nonzero_elements()

    def mult_order(x):
        k, acc = 1, x
        while acc != base.one:
            acc = base.mul(acc, x)
            k += 1
        return k

    by_order = {}
    for x in nonzero:
        by_order.setdefault(mult_order(x), []).append(x)
    class_keys = sorted(by_order)

    found = []
    for images in itertools.product(
        *(itertools.permutations(by_order[k]) for k in class_keys)
    ):
        table = {base.zero: base.zero}
        for k, img in zip(class_keys, images):
            for x, y in zip(by_order[k], img):
                table[x] = y
        if table[base.one] != base.one:
            continue
        ok = True
        for x in nonzero:
            for y in nonzero:
                if table[base.mul(x, y)] != base.mul(table[x], table[y]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(PermAuto(base, table))
    found.sort(key=lambda a: tuple(els.index(v) for v in a._signature))
    return found


def mult_properties_check(auto: MultAuto, samples: int = 1000, seed: int = 0) -> Report:
    """Verify the automorphism laws: 0 and 1 fixed, negation and inversion
    respected, products preserved.  Exhaustive on finite bases, sampled
    within tolerance elsewhere."""
    base = auto.base
    violations = []
    if base.is_finite:
        els = base.elements()
        if not base.is_zero(auto.apply(base.zero)):
            violations.append({"law": "fixes-zero"})
        if auto.apply(base.one) != base.one:
            violations.append({"law": "fixes-one"})
        if len({auto.apply(x) for x in els}) != len(els):
            violations.append({"law": "bijective"})
        for x in els:
            if auto.apply(base.neg(x)) != base.neg(auto.apply(x)):
                violations.append({"law": "negation", "x": x})
            if not base.is_zero(x) and auto.apply(base.inv(x)) != base.inv(
                auto.apply(x)
            ):
                violations.append({"law": "inversion", "x": x})
        for x in els:
            for y in els:
                if auto.apply(base.mul(x, y)) != base.mul(
                    auto.apply(x), auto.apply(y)
                ):
                    violations.append({"law": "product", "pair": (x, y)})
        checked = len(els) ** 2
    else:
        rng = random.Random(seed)

        def draw():
            while True:
                if base.kind == "real":
                    x = rng.uniform(-5.0, 5.0)
                else:
                    x = complex(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
                if abs(x) > 1e-3:
                    return x

        points = list(base.sample_points()) + [draw() for _ in range(samples)]
        if auto.apply(base.zero) != base.zero:
            violations.append({"law": "fixes-zero"})
        if not base.eq(auto.apply(base.one), base.one):
            violations.append({"law": "fixes-one"})
        for x in points:
            if not base.eq(auto.apply(base.neg(x)), base.neg(auto.apply(x))):
                violations.append({"law": "negation", "x": x})
            if not base.eq(auto.apply(base.inv(x)), base.inv(auto.apply(x))):
                violations.append({"law": "inversion", "x": x})
        checked = 0
        for _ in range(samples):
            x, y = draw(), draw()
            if not base.eq(auto.apply(base.mul(x, y)), base.mul(auto.apply(x), auto.apply(y))):
                violations.append({"law": "product", "pair": (x, y)})
            checked += 1
    return Report(
        name="mult_properties",
        passed=not violations,
        details={"pairs_checked": checked},
        violations=violations[:20],
    )


def same_addition(a: MultAuto, b: MultAuto, base: BaseStructure = None) -> bool:
    """Whether a and b induce the same addition on their base."""
    _require_same_base(a, b)
    if base is None:
        base = a.base
    if base.kind == "gf" and isinstance(a, FinitePower) and isinstance(b, FinitePower):
        return _same_exponents(a.alpha, b.alpha, base.table.p, base.table.n)
    return is_nearfield_automorphism(base, compose(a, b.inverse()))


__all__ = [
    "MultAuto",
    "FinitePower",
    "RealPower",
    "ComplexEps",
    "PermAuto",
    "InnerAuto",
    "CompAuto",
    "identity_auto",
    "as_perm",
    "compose",
    "enumerate_mult_autos",
    "mult_properties_check",
    "same_addition",
]
